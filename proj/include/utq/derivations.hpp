#pragma once

#include "utq/circle_map.hpp"
#include "utq/fock.hpp"
#include "utq/operator.hpp"

namespace utq {

/// One-particle matrices derived from the quantum differential of a circle
/// map: d^q h = [S, delta u] over modes |k| <= mode_cutoff (zero included),
/// where u is the displacement loop lift(theta) - theta, mean removed and
/// band-limited to the cutoff.
struct MapQuantumGenerators {
  FourierLoop displacement;   // the band-limited loop u
  OneParticleOperator dq;     // the full commutator [S, delta u]
  Mat wplus_compression;      // rows/cols k = 1..n_modes; vanishes identically:
                              // S has scalar sign blocks, so any [S, B] is
                              // block off-diagonal
  Mat hankel_block;           // W- -> W+ block in conjugate coordinates,
                              // rows k = 1..n_modes, cols -1..-n_modes,
                              // H^{1/2}-orthonormal scaling
};

MapQuantumGenerators map_quantum_generators(const CircleMap& h, int n_modes,
                                            int mode_cutoff, int grid);

/// dGamma of the generator matrix (the content-carrying block).
FockOperator map_derivation_operator(const MapQuantumGenerators& gen,
                                     const FockBasisPtr& basis);

}  // namespace utq
