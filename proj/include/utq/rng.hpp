#pragma once

#include <cstdint>
#include <random>

#include "utq/types.hpp"

namespace utq {

/// Deterministic random source. mt19937_64 output is fixed by the standard
/// and the mappings below avoid std::*_distribution, whose streams differ
/// between library implementations; reports generated from the same seed are
/// therefore byte-identical across builds.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double normal() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  /// Complex with independent N(0,1) real and imaginary parts.
  cplx complex_normal() {
    const double re = normal();
    return {re, normal()};
  }

  /// Uniform on the open disc of the given radius.
  cplx disc(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double phi = uniform(0.0, kTwoPi);
    return std::polar(r, phi);
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace utq
