#include "utq/fft.hpp"

#include <stdexcept>

namespace utq {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

void fft_pow2(std::vector<cplx>& a) {
  const std::size_t n = a.size();
  if (!is_pow2(static_cast<int>(n))) {
    throw std::invalid_argument("fft_pow2: size must be a power of two");
  }
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -kTwoPi / static_cast<double>(len);
    const cplx wlen = std::polar(1.0, ang);
    for (std::size_t i = 0; i < n; i += len) {
      cplx w{1.0, 0.0};
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::vector<cplx> grid_to_coeffs(const std::vector<cplx>& samples, int kmax) {
  const int m = static_cast<int>(samples.size());
  if (2 * kmax >= m) {
    throw std::invalid_argument("grid_to_coeffs: kmax too large for grid");
  }
  std::vector<cplx> work = samples;
  fft_pow2(work);
  std::vector<cplx> out(2 * kmax + 1);
  const double inv = 1.0 / m;
  for (int k = -kmax; k <= kmax; ++k) {
    const int idx = (k >= 0) ? k : k + m;
    out[k + kmax] = work[idx] * inv;
  }
  return out;
}

std::vector<cplx> grid_to_coeffs_direct(const std::vector<cplx>& samples, int kmax) {
  const int m = static_cast<int>(samples.size());
  if (2 * kmax >= m) {
    throw std::invalid_argument("grid_to_coeffs_direct: kmax too large for grid");
  }
  std::vector<cplx> out(2 * kmax + 1, cplx{0.0, 0.0});
  for (int k = -kmax; k <= kmax; ++k) {
    const cplx step = std::polar(1.0, -kTwoPi * k / m);
    cplx tw{1.0, 0.0};
    cplx acc{0.0, 0.0};
    for (int j = 0; j < m; ++j) {
      acc += samples[j] * tw;
      tw *= step;
    }
    out[k + kmax] = acc / static_cast<double>(m);
  }
  return out;
}

}  // namespace utq
