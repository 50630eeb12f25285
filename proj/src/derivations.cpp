#include "utq/derivations.hpp"

#include <cmath>
#include <stdexcept>

#include "utq/fft.hpp"
#include "utq/qcalc.hpp"

namespace utq {

MapQuantumGenerators map_quantum_generators(const CircleMap& h, int n_modes,
                                            int mode_cutoff, int grid) {
  if (n_modes > mode_cutoff) {
    throw std::invalid_argument("map_quantum_generators: n_modes exceeds mode cutoff");
  }
  const ModeSpec spec{mode_cutoff, true};

  // displacement loop u = lift - id, mean removed, band-limited to the cutoff
  const int sample_grid = std::max(grid, 8 * mode_cutoff);
  int pow2 = 1;
  while (pow2 < sample_grid) pow2 *= 2;
  const std::vector<double> lifts = h.lift_grid(pow2);
  std::vector<cplx> samples(pow2);
  for (int j = 0; j < pow2; ++j) samples[j] = lifts[j] - kTwoPi * j / pow2;
  const std::vector<cplx> coeffs = grid_to_coeffs(samples, mode_cutoff);

  MapQuantumGenerators out{FourierLoop(spec, true), OneParticleOperator(), Mat(), Mat()};
  for (int k = 1; k <= mode_cutoff; ++k) out.displacement.set(k, coeffs[k + mode_cutoff]);

  const OneParticleOperator delta = finite_difference_op(out.displacement, grid, spec);
  const SymmetryOperator S = hilbert_transform(spec);
  out.dq = OneParticleOperator::zero(spec, "d^q h");
  for (int mm = -mode_cutoff; mm <= mode_cutoff; ++mm) {
    for (int n = -mode_cutoff; n <= mode_cutoff; ++n) {
      const int ds = S.sign(mm) - S.sign(n);
      if (ds != 0) out.dq.entry(mm, n) = static_cast<double>(ds) * delta.entry(mm, n);
    }
  }

  out.wplus_compression = Mat::Zero(n_modes, n_modes);
  out.hankel_block = Mat::Zero(n_modes, n_modes);
  for (int mm = 1; mm <= n_modes; ++mm) {
    for (int k = 1; k <= n_modes; ++k) {
      const double w = std::sqrt(static_cast<double>(mm) / k);
      out.wplus_compression(mm - 1, k - 1) = out.dq.entry(mm, k) * w;
      out.hankel_block(mm - 1, k - 1) = out.dq.entry(mm, -k) * w;
    }
  }
  return out;
}

FockOperator map_derivation_operator(const MapQuantumGenerators& gen,
                                     const FockBasisPtr& basis) {
  return second_quantize(gen.hankel_block, basis);
}

}  // namespace utq
