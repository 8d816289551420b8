#pragma once

#include <complex>
#include <span>
#include <vector>

namespace fapx {

enum class FftDirection { Forward, Backward };

/// Unnormalized in-place multidimensional DFT (row-major, last axis fastest).
/// Forward uses exp(-2 pi i k n / N).
void fft_inplace(std::span<std::complex<double>> data, std::span<const int> dims,
                 FftDirection direction);

/// Signed integer wavenumber of bin k in an n-point transform:
/// 0..n/2-1 then -n/2..-1 (the Nyquist bin maps to -n/2).
inline int signed_bin(int k, int n) noexcept { return k < (n + 1) / 2 ? k : k - n; }

} // namespace fapx
