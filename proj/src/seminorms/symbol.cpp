#include "frechet_approx/seminorms/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frechet_approx/core/errors.hpp"
#include "frechet_approx/core/multi_index.hpp"
#include "frechet_approx/core/numeric.hpp"
#include "frechet_approx/seminorms/sobolev.hpp"

namespace fapx {
namespace {

enum class Exponent { One, Two, Sup };

Exponent classify(double p)
{
    if (p == kSupNorm || std::isinf(p))
        return Exponent::Sup;
    if (p == 1.0)
        return Exponent::One;
    if (p == 2.0)
        return Exponent::Two;
    throw InputError("symbol_seminorm: only p in {1, 2, inf} is supported, got " + std::to_string(p));
}

// Accumulates one weighted L^p norm from (value, quadrature weight) pairs.
class NormAccumulator {
public:
    explicit NormAccumulator(Exponent e) : exponent_(e) {}

    void add(double magnitude, double weight)
    {
        switch (exponent_) {
        case Exponent::Sup: acc_ = std::max<long double>(acc_, magnitude); break;
        case Exponent::One: acc_ += static_cast<long double>(weight) * magnitude; break;
        case Exponent::Two: acc_ += static_cast<long double>(weight) * magnitude * magnitude; break;
        }
    }

    double result() const
    {
        return exponent_ == Exponent::Two ? std::sqrt(static_cast<double>(acc_)) : static_cast<double>(acc_);
    }

private:
    Exponent exponent_;
    long double acc_ = 0.0L;
};

} // namespace

double WeightSpec::operator()(std::span<const double> x) const
{
    switch (kind) {
    case Kind::Constant: return c;
    case Kind::Exponential: return std::exp(c * std::pow(euclidean_norm(x), beta));
    case Kind::BracketPower: return std::pow(japanese_bracket(x), s);
    }
    return c;
}

void to_json(nlohmann::ordered_json& j, const WeightSpec& w)
{
    switch (w.kind) {
    case WeightSpec::Kind::Constant: j = {{"kind", "constant"}, {"c", w.c}}; break;
    case WeightSpec::Kind::Exponential: j = {{"kind", "exponential"}, {"c", w.c}, {"beta", w.beta}}; break;
    case WeightSpec::Kind::BracketPower: j = {{"kind", "bracket_power"}, {"s", w.s}}; break;
    }
}

WeightSpec weight_from_json(const nlohmann::ordered_json& j)
{
    try {
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "constant")
            return WeightSpec::constant(j.at("c").get<double>());
        if (kind == "exponential")
            return WeightSpec::exponential(j.at("c").get<double>(), j.at("beta").get<double>());
        if (kind == "bracket_power")
            return WeightSpec::bracket_power(j.at("s").get<double>());
        throw InputError("WeightSpec JSON: unknown kind '" + kind + "'");
    } catch (const nlohmann::ordered_json::exception& e) {
        throw InputError(std::string("WeightSpec JSON: ") + e.what());
    }
}

double symbol_seminorm(const SpectralFunction& f, const WeightSpec& weight, double p, int ell,
                       SymbolQuadrature quadrature)
{
    const Exponent exponent = classify(p);
    if (ell < 0)
        throw InputError("symbol_seminorm: ell must be nonnegative");
    const std::size_t d = f.dim();
    const int n = quadrature.points_per_axis > 0 ? quadrature.points_per_axis : (d == 1 ? 1025 : 129);
    if (n < 2)
        throw InputError("symbol_seminorm: need at least 2 quadrature points per axis");
    const std::vector<int> res(d, n);
    const std::size_t total = grid_size(res);
    const auto& box = f.domain();

    // Closed tensor grid with trapezoid weights; nodes include both endpoints.
    std::vector<std::vector<double>> nodes(total, std::vector<double>(d));
    std::vector<double> weights(total, 1.0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        for (std::size_t j = d; j-- > 0;) {
            const int k = static_cast<int>(rem % n);
            rem /= n;
            const double h = box.side(j) / (n - 1);
            nodes[flat][j] = k == n - 1 ? box.upper(j) : box.lower(j) + k * h;
            weights[flat] *= (k == 0 || k == n - 1) ? 0.5 * h : h;
        }
    }
    std::vector<double> omega(total);
    for (std::size_t i = 0; i < total; ++i)
        omega[i] = weight(nodes[i]);

    double best = 0.0;
    for (const auto& alpha : multi_indices_up_to(d, ell)) {
        SpectralFunction deriv = f.derivative(alpha);
        NormAccumulator acc(exponent);
        for (std::size_t i = 0; i < total; ++i)
            acc.add(omega[i] * std::abs(deriv.evaluate(nodes[i])), weights[i]);
        best = std::max(best, acc.result());
    }
    return best;
}

double symbol_seminorm(const GridFunction& f, const WeightSpec& weight, double p, int ell)
{
    const Exponent exponent = classify(p);
    if (ell < 0)
        throw InputError("symbol_seminorm: ell must be nonnegative");
    std::vector<double> omega(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        omega[i] = weight(f.node(i));
    const double cell = f.cell_volume();
    double best = 0.0;
    for (const auto& alpha : multi_indices_up_to(f.dim(), ell)) {
        GridFunction deriv = spectral_derivative(f, alpha);
        NormAccumulator acc(exponent);
        for (std::size_t i = 0; i < f.size(); ++i)
            acc.add(omega[i] * std::abs(deriv[i]), cell);
        best = std::max(best, acc.result());
    }
    return best;
}

} // namespace fapx
