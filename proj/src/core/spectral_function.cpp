#include "frechet_approx/core/spectral_function.hpp"

#include <algorithm>
#include <cmath>

#include "frechet_approx/core/errors.hpp"

namespace fapx {
namespace {

void check_atom(const Atom& a, std::size_t dim)
{
    if (a.frequency.size() != dim)
        throw InputError("SpectralFunction: atom frequency length differs from domain dimension");
    for (double t : a.frequency)
        if (!std::isfinite(t))
            throw InputError("SpectralFunction: non-finite frequency");
    if (!std::isfinite(a.amplitude.real()) || !std::isfinite(a.amplitude.imag()))
        throw InputError("SpectralFunction: non-finite amplitude");
}

void require_same_domain(const SpectralFunction& a, const SpectralFunction& b)
{
    if (!(a.domain() == b.domain()))
        throw InputError("SpectralFunction: domain mismatch");
}

} // namespace

SpectralFunction::SpectralFunction(BoxDomain domain, std::vector<Atom> atoms)
    : domain_(std::move(domain)), atoms_(std::move(atoms))
{
    for (const auto& a : atoms_)
        check_atom(a, dim());
}

Complex SpectralFunction::evaluate(std::span<const double> x) const
{
    if (x.size() != dim())
        throw InputError("evaluate: point dimension differs from domain dimension");
    Complex sum{0.0, 0.0};
    for (const auto& a : atoms_) {
        double phase = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j)
            phase += a.frequency[j] * x[j];
        sum += a.amplitude * std::polar(1.0, phase);
    }
    return sum;
}

SpectralFunction SpectralFunction::canonicalize(double tolerance) const
{
    std::vector<Atom> sorted = atoms_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Atom& a, const Atom& b) { return a.frequency < b.frequency; });

    auto close = [tolerance](const Atom& a, const Atom& b) {
        for (std::size_t j = 0; j < a.frequency.size(); ++j)
            if (std::abs(a.frequency[j] - b.frequency[j]) > tolerance)
                return false;
        return true;
    };

    // Clusters are keyed by their first (lexicographically smallest) member;
    // quadratic in the worst case, which is fine at the sizes used here.
    std::vector<Atom> merged;
    std::vector<bool> used(sorted.size(), false);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (used[i])
            continue;
        Atom rep = sorted[i];
        for (std::size_t k = i + 1; k < sorted.size(); ++k) {
            if (used[k])
                continue;
            if (sorted[k].frequency[0] - rep.frequency[0] > tolerance)
                break;
            if (close(rep, sorted[k])) {
                rep.amplitude += sorted[k].amplitude;
                used[k] = true;
            }
        }
        if (rep.amplitude != Complex{0.0, 0.0})
            merged.push_back(std::move(rep));
    }
    return SpectralFunction(domain_, std::move(merged));
}

SpectralFunction SpectralFunction::derivative(const MultiIndex& alpha) const
{
    if (alpha.dim() != dim())
        throw InputError("derivative: multi-index dimension differs from domain dimension");
    std::vector<Atom> out = atoms_;
    for (auto& a : out)
        a.amplitude *= derivative_factor(a.frequency, alpha);
    return SpectralFunction(domain_, std::move(out));
}

double SpectralFunction::l1_amplitude() const noexcept
{
    double s = 0.0;
    for (const auto& a : atoms_)
        s += std::abs(a.amplitude);
    return s;
}

SpectralFunction& SpectralFunction::operator+=(const SpectralFunction& other)
{
    require_same_domain(*this, other);
    atoms_.insert(atoms_.end(), other.atoms_.begin(), other.atoms_.end());
    return *this;
}

SpectralFunction& SpectralFunction::operator*=(Complex scale)
{
    for (auto& a : atoms_)
        a.amplitude *= scale;
    return *this;
}

Complex evaluate(const SpectralFunction& f, std::span<const double> x) { return f.evaluate(x); }

SpectralFunction operator+(SpectralFunction lhs, const SpectralFunction& rhs)
{
    lhs += rhs;
    return lhs;
}

SpectralFunction operator-(SpectralFunction lhs, const SpectralFunction& rhs)
{
    SpectralFunction neg = rhs;
    neg *= -1.0;
    lhs += neg;
    return lhs;
}

SpectralFunction operator*(Complex scale, SpectralFunction f)
{
    f *= scale;
    return f;
}

Complex derivative_factor(std::span<const double> theta, const MultiIndex& alpha)
{
    Complex factor{1.0, 0.0};
    for (std::size_t j = 0; j < theta.size(); ++j)
        for (int k = 0; k < alpha[j]; ++k)
            factor *= Complex{0.0, theta[j]};
    return factor;
}

void to_json(nlohmann::ordered_json& j, const SpectralFunction& f)
{
    nlohmann::ordered_json atoms = nlohmann::ordered_json::array();
    for (const auto& a : f.atoms())
        atoms.push_back(nlohmann::ordered_json{
            {"re", a.amplitude.real()}, {"im", a.amplitude.imag()}, {"freq", a.frequency}});
    nlohmann::ordered_json domain;
    to_json(domain, f.domain());
    j = nlohmann::ordered_json{{"domain", domain}, {"atoms", atoms}};
}

SpectralFunction spectral_function_from_json(const nlohmann::ordered_json& j)
{
    try {
        BoxDomain domain = box_from_json(j.at("domain"));
        std::vector<Atom> atoms;
        for (const auto& a : j.at("atoms"))
            atoms.push_back(Atom{Complex{a.at("re").get<double>(), a.at("im").get<double>()},
                                 a.at("freq").get<std::vector<double>>()});
        return SpectralFunction(std::move(domain), std::move(atoms));
    } catch (const nlohmann::ordered_json::exception& e) {
        throw InputError(std::string("SpectralFunction JSON: ") + e.what());
    }
}

} // namespace fapx
