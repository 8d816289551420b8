#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

#include "frechet_approx/core/box_domain.hpp"
#include "frechet_approx/core/multi_index.hpp"

namespace fapx {

using Complex = std::complex<double>;

/// One term a * exp(i theta . x).
struct Atom {
    Complex amplitude;
    std::vector<double> frequency;
};

/// Finite sum of Fourier atoms over a box. Shared representation of targets,
/// cosine networks and residuals.
class SpectralFunction {
public:
    explicit SpectralFunction(BoxDomain domain, std::vector<Atom> atoms = {});

    const BoxDomain& domain() const noexcept { return domain_; }
    std::size_t dim() const noexcept { return domain_.dim(); }
    std::size_t size() const noexcept { return atoms_.size(); }
    bool empty() const noexcept { return atoms_.empty(); }
    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    const Atom& atom(std::size_t n) const { return atoms_.at(n); }

    Complex evaluate(std::span<const double> x) const;

    /// Merges frequencies closer than `tolerance` (max-norm), drops zero
    /// amplitudes and sorts atoms lexicographically by frequency.
    SpectralFunction canonicalize(double tolerance = 1e-12) const;

    /// Exact derivative: amplitudes multiplied by (i theta)^alpha.
    SpectralFunction derivative(const MultiIndex& alpha) const;

    /// sum_n |a_n|
    double l1_amplitude() const noexcept;

    SpectralFunction& operator+=(const SpectralFunction& other);
    SpectralFunction& operator*=(Complex scale);

private:
    BoxDomain domain_;
    std::vector<Atom> atoms_;
};

Complex evaluate(const SpectralFunction& f, std::span<const double> x);

// Atom concatenation; domains must match.
SpectralFunction operator+(SpectralFunction lhs, const SpectralFunction& rhs);
SpectralFunction operator-(SpectralFunction lhs, const SpectralFunction& rhs);
SpectralFunction operator*(Complex scale, SpectralFunction f);

/// (i theta)^alpha
Complex derivative_factor(std::span<const double> theta, const MultiIndex& alpha);

void to_json(nlohmann::ordered_json& j, const SpectralFunction& f);
SpectralFunction spectral_function_from_json(const nlohmann::ordered_json& j);

} // namespace fapx
