#include "frechet_approx/barron/fourier_profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "frechet_approx/core/errors.hpp"
#include "frechet_approx/core/grid_function.hpp"
#include "frechet_approx/core/numeric.hpp"

namespace fapx {
namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267794;

// 1-d factor of a tensor-product catalog profile (unit amplitude).
double raised_cosine_1d(double xi, double w)
{
    if (std::abs(xi) > w)
        return 0.0;
    return 0.5 * (1.0 + std::cos(kPi * xi / w));
}

double bump_1d(double xi, double w)
{
    const double t = xi / w;
    if (std::abs(t) >= 1.0)
        return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - t * t));
}

// (2 pi)^{-1/2} \int_{-w}^{w} (i xi)^k g(xi) exp(i x xi) dxi by composite
// 20-point Gauss-Legendre; panel count scales with the oscillation count.
template <class G>
Complex inverse_transform_1d(const G& g, double w, double x, int k)
{
    using Rule = boost::math::quadrature::gauss<double, 20>;
    const auto& nodes = Rule::abscissa();
    const auto& weights = Rule::weights();
    const int panels = std::max(16, static_cast<int>(std::ceil(2.0 * w * (std::abs(x) + k + 1.0) / kPi)) + 16);
    const double width = 2.0 * w / panels;
    Complex sum{0.0, 0.0};
    auto integrand = [&](double xi) {
        Complex factor{1.0, 0.0};
        for (int p = 0; p < k; ++p)
            factor *= Complex{0.0, xi};
        return factor * g(xi) * std::polar(1.0, x * xi);
    };
    for (int p = 0; p < panels; ++p) {
        const double mid = -w + (p + 0.5) * width;
        const double half = 0.5 * width;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            sum += weights[i] * half * integrand(mid + half * nodes[i]);
            if (nodes[i] != 0.0)
                sum += weights[i] * half * integrand(mid - half * nodes[i]);
        }
    }
    return kInvSqrt2Pi * sum;
}

// Closed-form raised-cosine inverse transform, a = pi / w:
// (2 pi)^{-1/2} sin(w x) a^2 / (x (a^2 - x^2)); removable singularities at 0, +-a.
Complex raised_cosine_spatial_1d(double x, double w)
{
    const double a = kPi / w;
    const double guard = 1e-4 * a;
    if (std::abs(x) < guard || std::abs(std::abs(x) - a) < guard)
        return inverse_transform_1d([w](double xi) { return raised_cosine_1d(xi, w); }, w, x, 0);
    return kInvSqrt2Pi * std::sin(w * x) * a * a / (x * (a * a - x * x));
}

double hermite(int n, double x) { return hermite_values(n, x).back(); }

} // namespace

std::vector<double> hermite_values(int n, double x)
{
    if (n < 0)
        throw InputError("hermite_values: order must be nonnegative");
    std::vector<double> h(static_cast<std::size_t>(n) + 1);
    h[0] = 1.0;
    if (n >= 1)
        h[1] = 2.0 * x;
    for (int k = 1; k < n; ++k)
        h[k + 1] = 2.0 * x * h[k] - 2.0 * k * h[k - 1];
    return h;
}

FourierProfile::FourierProfile(Kind kind, std::size_t dim, double param, Complex amplitude)
    : kind_(kind), dim_(dim), param_(param), amplitude_(amplitude), center_(dim, 0.0)
{
    if (dim_ == 0)
        throw InputError("FourierProfile: dimension must be positive");
    if (kind_ != Kind::Gridded && (!(param_ > 0.0) || !std::isfinite(param_)))
        throw InputError("FourierProfile: catalog parameter must be positive");
}

FourierProfile FourierProfile::gaussian(std::size_t dim, double a, Complex amplitude)
{
    return FourierProfile(Kind::Gaussian, dim, a, amplitude);
}

FourierProfile FourierProfile::raised_cosine(std::size_t dim, double omega, Complex amplitude)
{
    return FourierProfile(Kind::RaisedCosine, dim, omega, amplitude);
}

FourierProfile FourierProfile::compact_bump(std::size_t dim, double omega, Complex amplitude)
{
    return FourierProfile(Kind::CompactBump, dim, omega, amplitude);
}

FourierProfile FourierProfile::gridded(BoxDomain frequency_box, std::vector<int> resolution,
                                       std::vector<Complex> samples)
{
    FourierProfile p(Kind::Gridded, frequency_box.dim(), 0.0, 1.0);
    if (resolution.size() != frequency_box.dim() || grid_size(resolution) != samples.size())
        throw InputError("FourierProfile::gridded: resolution and samples disagree with the box");
    double halfwidth = 0.0;
    for (std::size_t j = 0; j < frequency_box.dim(); ++j)
        halfwidth = std::max({halfwidth, std::abs(frequency_box.lower(j)), std::abs(frequency_box.upper(j))});
    p.param_ = halfwidth;
    p.box_.push_back(std::move(frequency_box));
    p.resolution_ = std::move(resolution);
    p.samples_ = std::move(samples);
    return p;
}

std::string FourierProfile::name() const
{
    switch (kind_) {
    case Kind::Gaussian: return "gaussian";
    case Kind::RaisedCosine: return "raised_cosine";
    case Kind::CompactBump: return "compact_bump";
    case Kind::Gridded: return "gridded";
    }
    return {};
}

FourierProfile FourierProfile::centered_at(std::vector<double> center) const
{
    if (center.size() != dim_)
        throw InputError("FourierProfile: center dimension mismatch");
    if (kind_ == Kind::Gridded)
        throw InputError("FourierProfile: gridded profiles cannot be re-centered");
    FourierProfile p = *this;
    p.center_ = std::move(center);
    return p;
}

FourierProfile FourierProfile::scaled(Complex factor) const
{
    FourierProfile p = *this;
    if (kind_ == Kind::Gridded)
        for (auto& s : p.samples_)
            s *= factor;
    else
        p.amplitude_ *= factor;
    return p;
}

double FourierProfile::support_halfwidth() const noexcept
{
    return kind_ == Kind::Gaussian ? std::numeric_limits<double>::infinity() : param_;
}

BoxDomain FourierProfile::support_box() const
{
    if (kind_ == Kind::Gaussian)
        throw PreconditionError("Gaussian profiles have unbounded support");
    if (kind_ == Kind::Gridded)
        return box_.front();
    return BoxDomain::cube(dim_, -param_, param_);
}

const BoxDomain& FourierProfile::grid_box() const
{
    if (kind_ != Kind::Gridded)
        throw InputError("FourierProfile: not a gridded profile");
    return box_.front();
}

Complex FourierProfile::base_value(std::span<const double> xi) const
{
    switch (kind_) {
    case Kind::Gaussian: {
        double r2 = 0.0;
        for (double v : xi)
            r2 += v * v;
        return amplitude_ * std::pow(2.0 * param_, -0.5 * static_cast<double>(dim_)) * std::exp(-r2 / (4.0 * param_));
    }
    case Kind::RaisedCosine: {
        double v = 1.0;
        for (double t : xi)
            v *= raised_cosine_1d(t, param_);
        return amplitude_ * v;
    }
    case Kind::CompactBump: {
        double v = 1.0;
        for (double t : xi)
            v *= bump_1d(t, param_);
        return amplitude_ * v;
    }
    case Kind::Gridded: {
        // Multilinear interpolation between midpoint nodes; zero outside the box.
        const BoxDomain& box = box_.front();
        std::vector<int> base(dim_);
        std::vector<double> frac(dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            if (xi[j] < box.lower(j) || xi[j] > box.upper(j))
                return 0.0;
            const double h = box.side(j) / resolution_[j];
            double u = (xi[j] - box.lower(j)) / h - 0.5;
            u = std::clamp(u, 0.0, static_cast<double>(resolution_[j] - 1));
            base[j] = std::min(static_cast<int>(std::floor(u)), std::max(resolution_[j] - 2, 0));
            frac[j] = resolution_[j] > 1 ? u - base[j] : 0.0;
        }
        Complex v{0.0, 0.0};
        const std::size_t corners = std::size_t{1} << dim_;
        for (std::size_t c = 0; c < corners; ++c) {
            double w = 1.0;
            std::size_t flat = 0;
            for (std::size_t j = 0; j < dim_; ++j) {
                const int bit = static_cast<int>((c >> j) & 1U);
                int idx = base[j] + bit;
                if (idx >= resolution_[j])
                    idx = resolution_[j] - 1;
                w *= bit ? frac[j] : 1.0 - frac[j];
                flat = flat * resolution_[j] + idx;
            }
            if (w != 0.0)
                v += w * samples_[flat];
        }
        return v;
    }
    }
    return 0.0;
}

Complex FourierProfile::value(std::span<const double> xi) const
{
    if (xi.size() != dim_)
        throw InputError("FourierProfile::value: dimension mismatch");
    double phase = 0.0;
    for (std::size_t j = 0; j < dim_; ++j)
        phase -= center_[j] * xi[j];
    return base_value(xi) * std::polar(1.0, phase);
}

double FourierProfile::log_abs_value(std::span<const double> xi) const
{
    if (xi.size() != dim_)
        throw InputError("FourierProfile::log_abs_value: dimension mismatch");
    if (kind_ == Kind::Gaussian) {
        double r2 = 0.0;
        for (double v : xi)
            r2 += v * v;
        return radial_log_abs(std::sqrt(r2));
    }
    return std::log(std::abs(base_value(xi)));
}

double FourierProfile::radial_log_abs(double radius) const
{
    if (kind_ != Kind::Gaussian)
        throw InputError("FourierProfile: profile is not radial");
    return std::log(std::abs(amplitude_)) - 0.5 * static_cast<double>(dim_) * std::log(2.0 * param_) -
           radius * radius / (4.0 * param_);
}

double FourierProfile::radial_abs(double radius) const { return std::exp(radial_log_abs(radius)); }

Complex FourierProfile::base_spatial_derivative(std::span<const double> x, const MultiIndex& alpha) const
{
    Complex v = amplitude_;
    switch (kind_) {
    case Kind::Gaussian: {
        const double sa = std::sqrt(param_);
        for (std::size_t j = 0; j < dim_; ++j) {
            const int k = alpha[j];
            const double u = sa * x[j];
            // d^k/dx^k exp(-a x^2) = (-sqrt a)^k H_k(sqrt a x) exp(-a x^2)
            v *= std::pow(-sa, k) * hermite(k, u) * std::exp(-u * u);
        }
        return v;
    }
    case Kind::RaisedCosine:
        for (std::size_t j = 0; j < dim_; ++j) {
            if (alpha[j] == 0)
                v *= raised_cosine_spatial_1d(x[j], param_);
            else
                v *= inverse_transform_1d([w = param_](double xi) { return raised_cosine_1d(xi, w); },
                                          param_, x[j], alpha[j]);
        }
        return v;
    case Kind::CompactBump:
        for (std::size_t j = 0; j < dim_; ++j)
            v *= inverse_transform_1d([w = param_](double xi) { return bump_1d(xi, w); }, param_, x[j], alpha[j]);
        return v;
    case Kind::Gridded: {
        // Midpoint rule over the stored samples.
        const BoxDomain& box = box_.front();
        Complex sum{0.0, 0.0};
        double cell = 1.0;
        for (std::size_t j = 0; j < dim_; ++j)
            cell *= box.side(j) / resolution_[j];
        std::vector<double> xi(dim_);
        for (std::size_t flat = 0; flat < samples_.size(); ++flat) {
            std::size_t rem = flat;
            for (std::size_t j = dim_; j-- > 0;) {
                const int k = static_cast<int>(rem % resolution_[j]);
                rem /= resolution_[j];
                xi[j] = box.lower(j) + (k + 0.5) * box.side(j) / resolution_[j];
            }
            double phase = 0.0;
            for (std::size_t j = 0; j < dim_; ++j)
                phase += x[j] * xi[j];
            sum += samples_[flat] * derivative_factor(xi, alpha) * std::polar(1.0, phase);
        }
        return sum * cell * std::pow(kInvSqrt2Pi, static_cast<double>(dim_));
    }
    }
    return 0.0;
}

Complex FourierProfile::spatial_derivative(std::span<const double> x, const MultiIndex& alpha) const
{
    if (x.size() != dim_ || alpha.dim() != dim_)
        throw InputError("FourierProfile::spatial_derivative: dimension mismatch");
    std::vector<double> shifted(x.begin(), x.end());
    for (std::size_t j = 0; j < dim_; ++j)
        shifted[j] -= center_[j];
    return base_spatial_derivative(shifted, alpha);
}

Complex FourierProfile::spatial(std::span<const double> x) const
{
    return spatial_derivative(x, MultiIndex(std::vector<int>(dim_, 0)));
}

double FourierProfile::log_abs_spatial(std::span<const double> x) const
{
    if (x.size() != dim_)
        throw InputError("FourierProfile::log_abs_spatial: dimension mismatch");
    if (kind_ == Kind::Gaussian) {
        double r2 = 0.0;
        for (std::size_t j = 0; j < dim_; ++j)
            r2 += (x[j] - center_[j]) * (x[j] - center_[j]);
        return std::log(std::abs(amplitude_)) - param_ * r2;
    }
    return std::log(std::abs(spatial(x)));
}

FourierProfile profile_from_json(const nlohmann::ordered_json& j)
{
    try {
        const auto name = j.at("name").get<std::string>();
        const auto dim = j.value("dim", std::size_t{1});
        const double amplitude = j.value("amplitude", 1.0);
        FourierProfile p = [&] {
            if (name == "gaussian")
                return FourierProfile::gaussian(dim, j.value("a", 1.0), amplitude);
            if (name == "raised_cosine")
                return FourierProfile::raised_cosine(dim, j.value("omega", kPi), amplitude);
            if (name == "compact_bump")
                return FourierProfile::compact_bump(dim, j.value("omega", kPi), amplitude);
            throw InputError("unknown catalog profile '" + name + "'");
        }();
        if (j.contains("center"))
            p = p.centered_at(j.at("center").get<std::vector<double>>());
        return p;
    } catch (const nlohmann::ordered_json::exception& e) {
        throw InputError(std::string("profile JSON: ") + e.what());
    }
}

void to_json(nlohmann::ordered_json& j, const FourierProfile& p)
{
    j = nlohmann::ordered_json{{"name", p.name()}, {"dim", p.dim()}};
    switch (p.kind()) {
    case FourierProfile::Kind::Gaussian: j["a"] = p.parameter(); break;
    case FourierProfile::Kind::RaisedCosine:
    case FourierProfile::Kind::CompactBump: j["omega"] = p.parameter(); break;
    case FourierProfile::Kind::Gridded:
        j["resolution"] = p.grid_resolution();
        to_json(j["box"], p.grid_box());
        return;
    }
    j["amplitude"] = p.amplitude().real();
    j["center"] = p.center();
}

SpectralFunction discretize_profile(const FourierProfile& profile, const BoxDomain& domain,
                                    SpectralDiscretization disc)
{
    const std::size_t d = profile.dim();
    if (domain.dim() != d)
        throw InputError("discretize_profile: dimension mismatch");
    if (profile.kind() == FourierProfile::Kind::Gridded)
        throw InputError("discretize_profile: gridded profiles are not supported");

    double radius = disc.radius;
    if (radius <= 0.0)
        radius = profile.kind() == FourierProfile::Kind::Gaussian
                     ? std::sqrt(4.0 * profile.parameter() * std::log(1e17))
                     : profile.support_halfwidth();

    double step = disc.spacing;
    if (step <= 0.0) {
        // Lattice images of f repeat every 2 pi / step; keep them away from the box.
        double extent = 0.0;
        for (std::size_t j = 0; j < d; ++j)
            extent = std::max({extent, std::abs(domain.lower(j) - profile.center()[j]),
                               std::abs(domain.upper(j) - profile.center()[j])});
        const double decay = profile.kind() == FourierProfile::Kind::Gaussian
                                 ? std::sqrt(std::log(1e17) / profile.parameter())
                                 : 64.0 * extent;
        step = 2.0 * kPi / (2.0 * (extent + decay));
    }
    const int K = static_cast<int>(std::floor(radius / step));
    const int side = 2 * K + 1;
    std::vector<int> res(d, side);
    const std::size_t total = grid_size(res);
    if (total > (std::size_t{1} << 22))
        throw ResourceError("discretize_profile: lattice too large");
    const double scale = std::pow(kInvSqrt2Pi * step, static_cast<double>(d));
    std::vector<Atom> atoms;
    atoms.reserve(total);
    std::vector<double> xi(d);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        for (std::size_t j = d; j-- > 0;) {
            xi[j] = (static_cast<int>(rem % side) - K) * step;
            rem /= side;
        }
        const Complex a = scale * profile.value(xi);
        if (a != Complex{0.0, 0.0})
            atoms.push_back(Atom{a, xi});
    }
    return SpectralFunction(domain, std::move(atoms));
}

} // namespace fapx
