#pragma once

#include "utq/operator.hpp"

namespace utq {

/// The Hilbert-transform symmetry: diagonal signs s_k = +1 for k >= 0,
/// -1 for k < 0 (the constant part of the kernel keeps the zero mode).
/// S^2 = I; on V (zero mode excluded) S coincides with i J0.
struct SymmetryOperator {
  ModeSpec spec;
  int sign(int k) const { return k >= 0 ? 1 : -1; }
  Mat matrix() const;
};

SymmetryOperator hilbert_transform(ModeSpec spec);

/// Principal-value quadrature of the Hilbert kernel 1 + i cot((phi-psi)/2)
/// on the half-offset grid psi = phi + (j + 1/2) (2 pi / grid), whose
/// symmetric node pairs cancel the cot singularity; spectrally exact for
/// band-limited input.  Independent of the diagonal sign representation.
FourierLoop hilbert_pv_oracle(const FourierLoop& f, int grid);

/// Multiplication operator (M_f)_{mn} = f_{m-n} over modes |m|,|n| <= N with
/// the zero mode included.  f must be band-limited to |k| <= N.
OneParticleOperator mult_operator(const FourierLoop& f, ModeSpec spec);

struct QuantumDifferential {
  FourierLoop f;
  OneParticleOperator op;  // entries (s_m - s_n) f_{m-n}
};

/// d^q f = [S, M_f] assembled in closed form.
QuantumDifferential quantum_differential(const FourierLoop& f, ModeSpec spec);

/// Same operator via the matrix commutator S M_f - M_f S (test route).
OneParticleOperator quantum_differential_commutator(const FourierLoop& f, ModeSpec spec);

/// Quadrature assembly of the integral operator with kernel
/// K(phi,psi) (f(psi) - f(phi)), the kernel of [S, M_f]; the difference
/// order flips relative to the quasiclassical kernel below because the
/// multiplication acts after the transform in the first commutator term.
/// Double trapezoid over `grid` points per axis (exact for band-limited f
/// once grid > 4 band + 2); diagonal set to the continuous limit -2i f'.
OneParticleOperator quantum_differential_kernel_oracle(const FourierLoop& f, int grid,
                                                       ModeSpec spec);

struct HsVsSobolev {
  double hs;       // Frobenius norm of d^q f
  double sobolev;  // H^{1/2} norm of f
  double ratio;    // hs / sobolev, NaN for the zero loop
};

/// Compares the Hilbert-Schmidt size of d^q f with the Sobolev norm of f;
/// the ratio is the same for every band-limited real loop.
HsVsSobolev hs_norm_vs_sobolev(const FourierLoop& f);

/// Ratio frozen from the single-mode count of (s_m - s_n) f_{m-n} entries:
/// HS^2 = 4 sum |k| |f_k|^2 while the Sobolev square is sum |k| |f_k|^2.
inline constexpr double kQdiffHsRatio = 2.0;

/// Finite-difference operator with kernel (f(phi) - f(psi)) / (phi - psi) on
/// [0, 2pi)^2, diagonal f'(phi); assembled in mode space by 2-D composite
/// Simpson with `grid` panels per axis (grid even).
OneParticleOperator finite_difference_op(const FourierLoop& f, int grid, ModeSpec spec);

/// Modes -N..N of (delta f) applied to the constant loop 1, computed with
/// composite Boole weights on both axes; independent cross-check against the
/// n = 0 column of the Simpson matrix assembly.
Vec finite_difference_column_oracle(const FourierLoop& f, int grid, int N);

/// Max over the grid of |extrapolated kernel diagonal - 2 i f'(phi)| where the
/// d^q f kernel K(phi,psi)(f(phi)-f(psi)) is evaluated at psi = phi + eps for
/// eps = 2 pi / grid halved twice and Richardson-extrapolated to eps -> 0.
double quasiclassical_check(const FourierLoop& f, int grid);

/// Numerical rank by singular values above the threshold.
int matrix_rank(const Mat& m, double threshold = 1e-10);

}  // namespace utq
