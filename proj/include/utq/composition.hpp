#pragma once

#include <cstdint>

#include "utq/circle_map.hpp"
#include "utq/operator.hpp"

namespace utq {

/// Matrix of T_h(xi) = xi o h - mean over 0 < |k| <= N, assembled by FFT of
/// e^{i k h(theta)} on an equispaced grid of `grid` points (power of two,
/// grid >= 4 N against aliasing).  Columns k < 0 are filled by the reality
/// symmetry entry(-m,-k) = conj(entry(m,k)), which then holds exactly.
OneParticleOperator build_Th(const CircleMap& h, ModeSpec spec, int grid);

/// Max over random band-limited real pairs of |omega(T xi, T eta) - omega(xi, eta)|.
/// Requires band <= N/4 so truncation leakage stays out of the measurement.
double check_symplectic(const OneParticleOperator& T, int trials, int band,
                        std::uint64_t seed);

struct NormBoundCheck {
  double norm_est;  // largest H^{1/2} singular value on the band-limited subspace
  double bound;     // sqrt(K + 1/K)
  bool within(double tol) const { return norm_est <= bound + tol; }
};

/// Sobolev operator-norm estimate against the dilatation bound.  Throws when
/// the map carries no dilatation hint.  `band` defaults to N/2.
NormBoundCheck operator_norm_bound_check(const CircleMap& h, const OneParticleOperator& T,
                                         int band = -1);

/// Blocks of T over W+ (+) W- in the H^{1/2}-orthonormal bases w_k = z^k/sqrt(k),
/// with W- coordinates taken in the conjugate basis so both blocks are plain
/// N x N matrices: a maps W+ -> W+, b maps W- -> W+.
struct BlockDecomposition {
  Mat a, b;
};

BlockDecomposition blocks(const OneParticleOperator& T);

/// Defect of the group relations adj(a) a - b^t conj(b) = I and
/// adj(a) b = b^t conj(a) on the leading band x band block (band < 0: full).
double block_relations_defect(const BlockDecomposition& B, int band = -1);

struct SiegelPointResult {
  Mat Z;             // conj(b) a^{-1}, symmetrized
  double asymmetry;  // Frobenius norm of the skew part before symmetrizing
};

/// Siegel point of the operator; throws when the a-block is singular
/// ("map too far from Mobius at this truncation").
SiegelPointResult siegel_point_of(const OneParticleOperator& T);

/// Frobenius norm of the b block (basis-independent Hilbert-Schmidt size).
double hs_norm_b(const OneParticleOperator& T);

}  // namespace utq
