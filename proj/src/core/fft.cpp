#include "frechet_approx/core/fft.hpp"

#include <memory>
#include <mutex>

#include <fftw3.h>

#include "frechet_approx/core/errors.hpp"
#include "frechet_approx/core/grid_function.hpp"

namespace fapx {
namespace {

// Planner calls are not thread-safe in FFTW; execution is.
std::mutex& planner_mutex()
{
    static std::mutex m;
    return m;
}

struct PlanDeleter {
    void operator()(fftw_plan_s* p) const
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(p);
    }
};

} // namespace

void fft_inplace(std::span<std::complex<double>> data, std::span<const int> dims, FftDirection direction)
{
    if (dims.empty())
        throw InputError("fft: need at least one axis");
    if (grid_size(dims) != data.size())
        throw InputError("fft: data size differs from product of dims");
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    int sign = direction == FftDirection::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
    std::unique_ptr<fftw_plan_s, PlanDeleter> plan;
    {
        std::lock_guard lock(planner_mutex());
        plan.reset(fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), ptr, ptr, sign,
                                 FFTW_ESTIMATE));
    }
    if (!plan)
        throw ResourceError("fft: FFTW failed to create a plan");
    fftw_execute(plan.get());
}

} // namespace fapx
