#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>

namespace fapx {

inline constexpr double kPi = std::numbers::pi;

/// <t> = (1 + t^2)^{1/2}
inline double japanese_bracket(double t) noexcept { return std::hypot(1.0, t); }

/// <t> = (1 + |t|^2)^{1/2} with the Euclidean norm.
double japanese_bracket(std::span<const double> t) noexcept;

double euclidean_norm(std::span<const double> v) noexcept;

/// ceil(x) after snapping x to the nearest integer when it is within
/// 1e-12 (relative to max(1,|x|)). Throws InputError if the result does not
/// fit in int64.
std::int64_t snapped_ceil(double x);

/// sin(t)/t with a Taylor branch for |t| < 1e-6.
double sinc(double t) noexcept;
long double sinc(long double t) noexcept;

/// Shortest decimal that round-trips to the same double.
std::string shortest_repr(double value);

} // namespace fapx
