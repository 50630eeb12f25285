#pragma once

#include <vector>

#include "utq/types.hpp"

namespace utq {

/// In-place radix-2 decimation-in-time FFT, forward sign convention
/// X_m = sum_j x_j e^{-2 pi i j m / M}.  M must be a power of two.
void fft_pow2(std::vector<cplx>& data);

bool is_pow2(int n);

/// Fourier coefficients c_k = (1/M) sum_j samples_j e^{-i k theta_j},
/// theta_j = 2 pi j / M, returned for k = -kmax .. kmax (index k + kmax).
/// Uses the radix-2 FFT (M must be a power of two, M > 2*kmax).
std::vector<cplx> grid_to_coeffs(const std::vector<cplx>& samples, int kmax);

/// Same coefficients by direct summation; works for any M > 2*kmax.
/// Used by quadrature oracles that run on non power-of-two grids.
std::vector<cplx> grid_to_coeffs_direct(const std::vector<cplx>& samples, int kmax);

}  // namespace utq
