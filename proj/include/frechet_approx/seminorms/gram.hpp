#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "frechet_approx/core/box_domain.hpp"

namespace fapx {

/// Exact inner products of unit atoms on a box:
/// entries(n, m) = \int_U exp(i (theta_n - theta_m) . x) dx.
struct GramMatrix {
    Eigen::MatrixXcd entries;
    std::vector<std::vector<double>> frequencies;
    BoxDomain domain;
};

GramMatrix gram(const std::vector<std::vector<double>>& frequencies, const BoxDomain& domain);

/// \int_U exp(i delta . x) dx in closed form:
/// prod_j exp(i delta_j m_j) (b_j - a_j) sinc(delta_j (b_j - a_j) / 2), m_j the midpoint.
std::complex<double> box_exponential_integral(std::span<const double> delta, const BoxDomain& domain);
std::complex<long double> box_exponential_integral_ld(std::span<const double> lhs,
                                                      std::span<const double> rhs,
                                                      const BoxDomain& domain);

} // namespace fapx
