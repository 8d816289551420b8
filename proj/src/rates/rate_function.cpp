#include "frechet_approx/rates/rate_function.hpp"

#include <cmath>
#include <sstream>

#include "frechet_approx/core/errors.hpp"
#include "frechet_approx/core/numeric.hpp"

namespace fapx {
namespace {

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

double parse_number(const std::string& s, std::string_view context)
{
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError(std::string(context) + ": cannot parse number '" + s + "'");
    }
}

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw InputError(std::string("RateFunction: ") + what + " must be a positive finite number");
}

} // namespace

RateFunction::RateFunction(Kind kind, double C, double rate, double gamma)
    : kind_(kind), C_(C), rate_(rate), gamma_(gamma)
{
}

RateFunction RateFunction::power(double C, double r)
{
    require_positive(C, "C");
    require_positive(r, "r");
    return RateFunction(Kind::Power, C, r, 1.0);
}

RateFunction RateFunction::stretched_exp(double C, double c, double gamma)
{
    require_positive(C, "C");
    require_positive(c, "c");
    require_positive(gamma, "gamma");
    return RateFunction(Kind::StretchedExp, C, c, gamma);
}

RateFunction RateFunction::parse(std::string_view spec)
{
    auto parts = split(spec, ':');
    if (parts[0] == "power" && parts.size() == 3)
        return power(parse_number(parts[1], "rate"), parse_number(parts[2], "rate"));
    if (parts[0] == "sexp" && parts.size() == 4)
        return stretched_exp(parse_number(parts[1], "rate"), parse_number(parts[2], "rate"),
                             parse_number(parts[3], "rate"));
    throw InputError("rate spec must be power:C:r or sexp:C:c:gamma, got '" + std::string(spec) + "'");
}

double RateFunction::operator()(double N) const
{
    if (!(N >= 1.0))
        throw InputError("RateFunction: argument must be >= 1");
    if (kind_ == Kind::Power)
        return C_ * std::pow(N, -rate_);
    return C_ * std::exp(-rate_ * std::pow(N, gamma_));
}

double RateFunction::upper() const { return (*this)(1.0); }

double RateFunction::inverse(double y) const
{
    const double top = upper();
    if (!(y > 0.0))
        throw InputError("RateFunction::inverse: argument must be positive");
    if (y > top * (1.0 + 1e-12))
        throw InputError("RateFunction::inverse: argument above r(1)");
    if (y >= top)
        return 1.0;
    if (kind_ == Kind::Power)
        return std::pow(C_ / y, 1.0 / rate_);
    return std::pow(std::log(C_ / y) / rate_, 1.0 / gamma_);
}

std::string RateFunction::describe() const
{
    std::ostringstream os;
    if (kind_ == Kind::Power)
        os << "power:" << shortest_repr(C_) << ':' << shortest_repr(rate_);
    else
        os << "sexp:" << shortest_repr(C_) << ':' << shortest_repr(rate_) << ':' << shortest_repr(gamma_);
    return os.str();
}

void to_json(nlohmann::ordered_json& j, const RateFunction& r)
{
    if (r.kind() == RateFunction::Kind::Power)
        j = {{"family", "power"}, {"C", r.constant()}, {"r", r.exponent()}};
    else
        j = {{"family", "stretched_exp"}, {"C", r.constant()}, {"c", r.exponent()}, {"gamma", r.gamma()}};
}

GrowthSequence::GrowthSequence(Kind kind, double param, std::vector<double> values)
    : kind_(kind), param_(param), values_(std::move(values))
{
}

GrowthSequence GrowthSequence::constant(double M)
{
    if (!(M > 0.0) || !std::isfinite(M))
        throw InputError("GrowthSequence: constant M must be positive");
    return GrowthSequence(Kind::Constant, M, {});
}

GrowthSequence GrowthSequence::bracket_power(double omega)
{
    if (!(omega >= 0.0) || !std::isfinite(omega))
        throw InputError("GrowthSequence: Omega must be nonnegative");
    return GrowthSequence(Kind::BracketPower, omega, {});
}

GrowthSequence GrowthSequence::explicit_values(std::vector<double> values)
{
    if (values.empty())
        throw InputError("GrowthSequence: explicit list is empty");
    for (double v : values)
        if (!(v > 0.0) || !std::isfinite(v))
            throw InputError("GrowthSequence: explicit values must be positive");
    return GrowthSequence(Kind::Explicit, 0.0, std::move(values));
}

GrowthSequence GrowthSequence::parse(std::string_view spec)
{
    auto parts = split(spec, ':');
    if (parts.size() == 2 && parts[0] == "const")
        return constant(parse_number(parts[1], "growth"));
    if (parts.size() == 2 && parts[0] == "bracket")
        return bracket_power(parse_number(parts[1], "growth"));
    if (parts.size() == 2 && parts[0] == "list") {
        std::vector<double> values;
        for (const auto& v : split(parts[1], ','))
            values.push_back(parse_number(v, "growth"));
        return explicit_values(std::move(values));
    }
    // a bare number is shorthand for a constant sequence
    if (parts.size() == 1)
        return constant(parse_number(parts[0], "growth"));
    throw InputError("growth spec must be const:M, bracket:Omega or list:M0,M1,..., got '" +
                     std::string(spec) + "'");
}

double GrowthSequence::at(int ell) const
{
    if (ell < 0)
        throw InputError("GrowthSequence: index must be nonnegative");
    switch (kind_) {
    case Kind::Constant: return param_;
    case Kind::BracketPower: return std::pow(japanese_bracket(param_), ell);
    case Kind::Explicit:
        if (static_cast<std::size_t>(ell) >= values_.size())
            throw InputError("GrowthSequence: explicit list has no entry " + std::to_string(ell));
        return values_[ell];
    }
    return param_;
}

std::string GrowthSequence::describe() const
{
    switch (kind_) {
    case Kind::Constant: return "const:" + shortest_repr(param_);
    case Kind::BracketPower: return "bracket:" + shortest_repr(param_);
    case Kind::Explicit: {
        std::string s = "list:";
        for (std::size_t i = 0; i < values_.size(); ++i)
            s += (i ? "," : "") + shortest_repr(values_[i]);
        return s;
    }
    }
    return {};
}

} // namespace fapx
