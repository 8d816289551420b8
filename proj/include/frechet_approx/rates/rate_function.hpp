#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace fapx {

/// Decreasing bijection [1, inf) -> (0, r(1)] with closed-form inverse.
///   Power(C, r):             N -> C N^{-r}
///   StretchedExp(C, c, g):   N -> C exp(-c N^g)
class RateFunction {
public:
    enum class Kind { Power, StretchedExp };

    static RateFunction power(double C, double r);
    static RateFunction stretched_exp(double C, double c, double gamma);

    /// "power:C:r" or "sexp:C:c:gamma"
    static RateFunction parse(std::string_view spec);

    Kind kind() const noexcept { return kind_; }
    double constant() const noexcept { return C_; }
    double exponent() const noexcept { return rate_; }
    double gamma() const noexcept { return gamma_; }

    double operator()(double N) const;

    /// r^{-1}(y) for y in (0, r(1)]; values above r(1) by less than 1e-12
    /// relative are clamped to 1.
    double inverse(double y) const;

    /// r(1)
    double upper() const;

    std::string describe() const;

private:
    RateFunction(Kind kind, double C, double rate, double gamma);

    Kind kind_;
    double C_;
    double rate_;
    double gamma_;
};

void to_json(nlohmann::ordered_json& j, const RateFunction& r);

/// M_ell sequence of a growth condition.
class GrowthSequence {
public:
    enum class Kind { Constant, BracketPower, Explicit };

    static GrowthSequence constant(double M);
    /// ell -> <Omega>^ell
    static GrowthSequence bracket_power(double omega);
    static GrowthSequence explicit_values(std::vector<double> values);

    /// "const:M", "bracket:Omega" or "list:M0,M1,..."
    static GrowthSequence parse(std::string_view spec);

    Kind kind() const noexcept { return kind_; }
    double at(int ell) const;
    std::string describe() const;

private:
    GrowthSequence(Kind kind, double param, std::vector<double> values);

    Kind kind_;
    double param_;
    std::vector<double> values_;
};

} // namespace fapx
