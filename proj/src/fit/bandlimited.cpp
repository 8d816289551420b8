#include "frechet_approx/fit/bandlimited.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>

#include "frechet_approx/core/errors.hpp"
#include "frechet_approx/core/fft.hpp"
#include "frechet_approx/core/grid_function.hpp"
#include "frechet_approx/core/numeric.hpp"
#include "frechet_approx/core/parallel.hpp"

namespace fapx {
namespace {

int w_points_for(std::size_t dim, const BandlimitedFitConfig& c) { return c.w_points > 0 ? c.w_points : (dim == 1 ? 65 : 17); }
int b_points_for(std::size_t dim, const BandlimitedFitConfig& c) { return c.b_points > 0 ? c.b_points : (dim == 1 ? 65 : 33); }

double grid_value(int k, int count, double max)
{
    return count == 1 ? 0.0 : -max + 2.0 * max * k / (count - 1);
}

// Greedy state: orthonormal basis Q of the selected atoms (unweighted
// Euclidean inner product on the grid), the triangular factor R with
// atom_n = sum_{j <= n} R(j, n) q_j, and the projection residual.
class Pursuit {
public:
    Pursuit(const BandlimitedTarget& target, const BandlimitedFitConfig& config)
        : target_(target), config_(config), residual_(target.samples().begin(), target.samples().end())
    {
        for (std::size_t i = 0; i < target.size(); ++i)
            nodes_.push_back(target.node(i));
    }

    std::vector<double> atom_values(const BandlimitedDictionaryAtom& atom) const
    {
        std::vector<double> v(nodes_.size());
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            double t = atom.b;
            for (std::size_t j = 0; j < atom.w.size(); ++j)
                t += atom.w[j] * nodes_[i][j];
            v[i] = config_.sigma_hat(t);
        }
        return v;
    }

    // |<r, a>| / ||a|| for one candidate, computed on the fly.
    double score(const BandlimitedDictionaryAtom& atom) const
    {
        Complex acc{0.0, 0.0};
        double norm2 = 0.0;
        const std::size_t d = atom.w.size();
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            double t = atom.b;
            for (std::size_t j = 0; j < d; ++j)
                t += atom.w[j] * nodes_[i][j];
            const double a = config_.sigma_hat(t);
            acc += a * residual_[i];
            norm2 += a * a;
        }
        return norm2 > 0.0 ? std::abs(acc) / std::sqrt(norm2) : 0.0;
    }

    /// Returns the reduction of the unweighted residual norm, or a negative
    /// value when the atom is numerically dependent on the selected ones.
    double add(const BandlimitedDictionaryAtom& atom)
    {
        const std::vector<double> a = atom_values(atom);
        std::vector<Complex> v(a.begin(), a.end());
        double anorm = 0.0;
        for (double x : a)
            anorm += x * x;
        anorm = std::sqrt(anorm);
        std::vector<Complex> rcol(basis_.size() + 1, Complex{0.0, 0.0});
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < basis_.size(); ++j) {
                Complex c{0.0, 0.0};
                for (std::size_t i = 0; i < v.size(); ++i)
                    c += std::conj(basis_[j][i]) * v[i];
                for (std::size_t i = 0; i < v.size(); ++i)
                    v[i] -= c * basis_[j][i];
                rcol[j] += c;
            }
        }
        double vnorm = 0.0;
        for (const Complex& x : v)
            vnorm += std::norm(x);
        vnorm = std::sqrt(vnorm);
        if (!(vnorm > 1e-10 * anorm))
            return -1.0;
        for (Complex& x : v)
            x /= vnorm;
        rcol.back() = vnorm;
        Complex z{0.0, 0.0};
        for (std::size_t i = 0; i < v.size(); ++i)
            z += std::conj(v[i]) * residual_[i];
        const double before = residual_norm();
        backup_ = residual_;
        for (std::size_t i = 0; i < v.size(); ++i)
            residual_[i] -= z * v[i];
        basis_.push_back(std::move(v));
        rfactor_.push_back(std::move(rcol));
        projections_.push_back(z);
        atoms_.push_back(atom);
        return before - residual_norm();
    }

    void undo()
    {
        residual_ = backup_;
        basis_.pop_back();
        rfactor_.pop_back();
        projections_.pop_back();
        atoms_.pop_back();
    }

    double residual_norm() const
    {
        double s = 0.0;
        for (const Complex& x : residual_)
            s += std::norm(x);
        return std::sqrt(s);
    }

    // Back-substitution R c = z.
    std::vector<Complex> amplitudes() const
    {
        const std::size_t n = atoms_.size();
        std::vector<Complex> c(n);
        for (std::size_t i = n; i-- > 0;) {
            Complex s = projections_[i];
            for (std::size_t k = i + 1; k < n; ++k)
                s -= rfactor_[k][i] * c[k];
            c[i] = s / rfactor_[i][i];
        }
        return c;
    }

    const std::vector<BandlimitedDictionaryAtom>& atoms() const { return atoms_; }

private:
    const BandlimitedTarget& target_;
    const BandlimitedFitConfig& config_;
    std::vector<std::vector<double>> nodes_;
    std::vector<Complex> residual_, backup_;
    std::vector<std::vector<Complex>> basis_;
    std::vector<std::vector<Complex>> rfactor_;   // column n holds R(0..n, n)
    std::vector<Complex> projections_;
    std::vector<BandlimitedDictionaryAtom> atoms_;
};

} // namespace

BandlimitedTarget::BandlimitedTarget(std::size_t dim, double omega, int points_per_axis, std::vector<Complex> samples)
    : dim_(dim), omega_(omega), points_(points_per_axis), samples_(std::move(samples))
{
    if (dim_ == 0 || !(omega_ > 0.0) || points_ < 1)
        throw InputError("BandlimitedTarget: need dim >= 1, omega > 0 and at least one point per axis");
    std::vector<int> res(dim_, points_);
    if (samples_.size() != grid_size(res))
        throw InputError("BandlimitedTarget: sample count does not match the grid");
}

BandlimitedTarget BandlimitedTarget::from_profile(const FourierProfile& profile, double omega, int points_per_axis)
{
    BandlimitedTarget t(profile.dim(), omega, points_per_axis,
                        std::vector<Complex>(grid_size(std::vector<int>(profile.dim(), points_per_axis))));
    for (std::size_t i = 0; i < t.samples_.size(); ++i)
        t.samples_[i] = profile.value(t.node(i));
    return t;
}

double BandlimitedTarget::cell_volume() const noexcept { return std::pow(step(), static_cast<double>(dim_)); }

std::vector<double> BandlimitedTarget::node(std::size_t flat) const
{
    std::vector<double> xi(dim_);
    for (std::size_t j = dim_; j-- > 0;) {
        xi[j] = -omega_ + (static_cast<double>(flat % points_) + 0.5) * step();
        flat /= points_;
    }
    return xi;
}

double BandlimitedTarget::l2_norm(std::span<const Complex> values) const { return bessel_norm(values, 0); }

double BandlimitedTarget::bessel_norm(std::span<const Complex> values, int ell) const
{
    if (values.size() != samples_.size())
        throw InputError("BandlimitedTarget: value count does not match the grid");
    if (ell < 0)
        throw InputError("BandlimitedTarget: order must be nonnegative");
    double s = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto xi = node(i);
        double r2 = 0.0;
        for (double v : xi)
            r2 += v * v;
        s += std::pow(1.0 + r2, ell) * std::norm(values[i]);
    }
    return std::sqrt(s * cell_volume());
}

FourierProfile BandlimitedTarget::as_profile(std::span<const Complex> values) const
{
    return FourierProfile::gridded(BoxDomain::cube(dim_, -omega_, omega_), std::vector<int>(dim_, points_),
                                   std::vector<Complex>(values.begin(), values.end()));
}

double ActivationSpectrum::operator()(double t) const
{
    if (s == 2.0)
        return 1.0 / (1.0 + t * t);
    return std::pow(1.0 + t * t, -0.5 * s);
}

void to_json(nlohmann::ordered_json& j, const BandlimitedFitConfig& c)
{
    j = nlohmann::ordered_json{{"w_max", c.w_max},
                               {"w_points", c.w_points},
                               {"b_max", c.b_max},
                               {"b_points", c.b_points},
                               {"sigma_hat_s", c.sigma_hat.s},
                               {"improvement_tolerance", c.improvement_tolerance}};
}

BandlimitedFitConfig bandlimited_config_from_json(const nlohmann::ordered_json& j)
{
    BandlimitedFitConfig c;
    try {
        c.w_max = j.value("w_max", c.w_max);
        c.w_points = j.value("w_points", c.w_points);
        c.b_max = j.value("b_max", c.b_max);
        c.b_points = j.value("b_points", c.b_points);
        c.sigma_hat.s = j.value("sigma_hat_s", c.sigma_hat.s);
        c.improvement_tolerance = j.value("improvement_tolerance", c.improvement_tolerance);
    } catch (const nlohmann::ordered_json::exception& e) {
        throw InputError(std::string("bandlimited fitter config: ") + e.what());
    }
    if (!(c.w_max >= 0.0) || !(c.b_max >= 0.0) || c.w_points < 0 || c.b_points < 0 || c.sigma_hat.s < 2.0)
        throw InputError("bandlimited fitter config: parameters out of range (s must be >= 2)");
    return c;
}

std::vector<BandlimitedDictionaryAtom> bandlimited_candidates(std::size_t dim, const BandlimitedFitConfig& config)
{
    const int gw = w_points_for(dim, config);
    const int gb = b_points_for(dim, config);
    std::vector<int> wdims(dim, gw);
    std::vector<BandlimitedDictionaryAtom> out;
    for (std::size_t flat = 0; flat < grid_size(wdims); ++flat) {
        std::vector<double> w(dim);
        std::size_t rem = flat;
        for (std::size_t j = dim; j-- > 0;) {
            w[j] = grid_value(static_cast<int>(rem % gw), gw, config.w_max);
            rem /= gw;
        }
        if (euclidean_norm(w) > config.w_max * (1.0 + 1e-12))
            continue;
        for (int k = 0; k < gb; ++k)
            out.push_back({w, grid_value(k, gb, config.b_max)});
    }
    return out;
}

BandlimitedFit fit_bandlimited(const BandlimitedTarget& target, int N, const BandlimitedFitConfig& config,
                               std::span<const BandlimitedDictionaryAtom> warm)
{
    if (N < 1)
        throw InputError("fit_bandlimited: N must be at least 1");
    const auto start = std::chrono::steady_clock::now();
    const auto candidates = bandlimited_candidates(target.dim(), config);
    const double weight = std::sqrt(target.cell_volume());

    Pursuit pursuit(target, config);
    const double target_norm = pursuit.residual_norm();
    FitReport report;
    report.method = "bandlimited";
    report.width = N;
    std::vector<bool> excluded(candidates.size(), false);

    auto record = [&](const BandlimitedDictionaryAtom& a) {
        std::vector<double> p = a.w;
        p.push_back(a.b);
        report.parameters.push_back(std::move(p));
        report.residuals.push_back(weight * pursuit.residual_norm());
    };

    for (const auto& a : warm) {
        if (static_cast<int>(pursuit.atoms().size()) >= N)
            break;
        if (a.w.size() != target.dim())
            throw InputError("fit_bandlimited: warm atom dimension mismatch");
        const double gain = pursuit.add(a);
        if (gain < 0.0)
            continue;
        if (!(gain > 0.0)) {
            pursuit.undo();
            continue;
        }
        record(a);
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (candidates[i].w == a.w && candidates[i].b == a.b)
                excluded[i] = true;
    }

    int dependent_streak = 0;
    while (static_cast<int>(pursuit.atoms().size()) < N) {
        std::size_t best_index = candidates.size();
        double best = 0.0;
        std::mutex guard;
        parallel_for(candidates.size(), config.workers, [&](std::size_t begin, std::size_t end) {
            std::size_t local_index = candidates.size();
            double local = 0.0;
            for (std::size_t i = begin; i < end; ++i) {
                if (excluded[i])
                    continue;
                const double s = pursuit.score(candidates[i]);
                if (s > local) {
                    local = s;
                    local_index = i;
                }
            }
            std::lock_guard lock(guard);
            if (local > best || (local == best && local_index < best_index)) {
                best = local;
                best_index = local_index;
            }
        });
        if (best_index == candidates.size()) {
            report.early_stop = true;
            break;
        }
        excluded[best_index] = true;
        const double gain = pursuit.add(candidates[best_index]);
        if (gain < 0.0) {
            // Numerically dependent on the selected atoms; try the next best
            // a bounded number of times.
            if (++dependent_streak > 32) {
                report.early_stop = true;
                break;
            }
            continue;
        }
        dependent_streak = 0;
        if (gain < config.improvement_tolerance * target_norm) {
            pursuit.undo();
            report.early_stop = true;
            break;
        }
        record(candidates[best_index]);
    }

    BandlimitedFit fit{pursuit.atoms(), pursuit.amplitudes(), {}, target.as_profile(target.samples()), {}};
    // Rebuild the approximant directly from the amplitudes.
    std::vector<Complex> approx(target.size(), Complex{0.0, 0.0});
    for (std::size_t n = 0; n < fit.atoms.size(); ++n) {
        const auto values = pursuit.atom_values(fit.atoms[n]);
        for (std::size_t i = 0; i < approx.size(); ++i)
            approx[i] += fit.amplitudes[n] * values[i];
    }
    fit.residual.resize(target.size());
    for (std::size_t i = 0; i < approx.size(); ++i)
        fit.residual[i] = target.samples()[i] - approx[i];
    fit.approximant = target.as_profile(approx);
    report.final_error = target.l2_norm(fit.residual);
    const double spatial = spatial_l2_norm(target, fit.residual);
    report.parseval_relative_gap =
        report.final_error > 0.0 ? std::abs(spatial - report.final_error) / report.final_error : spatial;
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    fit.report = std::move(report);
    return fit;
}

double spatial_l2_norm(const BandlimitedTarget& grid, std::span<const Complex> values)
{
    if (values.size() != grid.size())
        throw InputError("spatial_l2_norm: value count does not match the grid");
    // e(x) = (2 pi)^{-d/2} h^d sum_k v_k exp(i xi_k . x) is periodic with
    // period P = 2 pi / h per axis; sampling it at x_j = j P / n turns the
    // sum into an inverse DFT up to a unimodular phase.
    const std::size_t d = grid.dim();
    const int n = grid.points_per_axis();
    std::vector<int> dims(d, n);
    std::vector<Complex> data(values.begin(), values.end());
    fft_inplace(data, dims, FftDirection::Backward);
    const double h = grid.step();
    const double amp = std::pow(2.0 * kPi, -0.5 * d) * std::pow(h, static_cast<double>(d));
    const double cell = std::pow(2.0 * kPi / (h * n), static_cast<double>(d));
    double s = 0.0;
    for (const Complex& v : data)
        s += std::norm(amp * v);
    return std::sqrt(s * cell);
}

} // namespace fapx
