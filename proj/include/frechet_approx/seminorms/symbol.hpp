#pragma once

#include <span>

#include <json.hpp>

#include "frechet_approx/core/grid_function.hpp"
#include "frechet_approx/core/spectral_function.hpp"

namespace fapx {

/// Spatial weight omega(x) for symbol-class semi-norms.
struct WeightSpec {
    enum class Kind { Constant, Exponential, BracketPower };

    Kind kind = Kind::Constant;
    double c = 1.0;    // Constant: omega = c; Exponential: exp(c |x|^beta)
    double beta = 1.0;
    double s = 0.0;    // BracketPower: <x>^s

    static WeightSpec constant(double c) { return {Kind::Constant, c, 1.0, 0.0}; }
    static WeightSpec exponential(double c, double beta) { return {Kind::Exponential, c, beta, 0.0}; }
    static WeightSpec bracket_power(double s) { return {Kind::BracketPower, 1.0, 1.0, s}; }

    double operator()(std::span<const double> x) const;
};

void to_json(nlohmann::ordered_json& j, const WeightSpec& w);
WeightSpec weight_from_json(const nlohmann::ordered_json& j);

inline constexpr double kSupNorm = -1.0;

struct SymbolQuadrature {
    // Nodes per axis for the closed (endpoint-inclusive) trapezoid grid used
    // with spectral inputs. 0 selects 1025 in 1-d and 129 otherwise.
    int points_per_axis = 0;
};

/// max_{|alpha| <= ell} || omega d^alpha f ||_{L^p(U)}, p in {1, 2, kSupNorm}.
double symbol_seminorm(const SpectralFunction& f, const WeightSpec& weight, double p, int ell,
                       SymbolQuadrature quadrature = {});

/// Same for periodic samples: spectral derivatives and grid quadrature/max.
double symbol_seminorm(const GridFunction& f, const WeightSpec& weight, double p, int ell);

} // namespace fapx
