#pragma once

#include <cstdint>

#include "utq/types.hpp"

namespace utq {

/// Element of the symplectic group in block form (a  b; conj(b)  conj(a))
/// over W+ (+) W-, both blocks N x N in the conjugate-coordinate convention.
struct SymplecticElement {
  Mat a, b;

  static SymplecticElement identity(int n);
  int dim() const { return static_cast<int>(a.rows()); }
  Mat full() const;  ///< the 2N x 2N block matrix
  /// Max-abs defect of adj(a) a - b^t conj(b) = I and adj(a) b = b^t conj(a).
  double relations_defect() const;
};

struct DiscCheck {
  bool ok;
  double min_eig;     // smallest eigenvalue of I - conj(Z) Z
  double asymmetry;   // |Z - Z^t|_F / 2 of the input
};

/// Membership in the Siegel disc: Z symmetric and I - conj(Z) Z positive
/// definite.  Asymmetry above 1e-8 is an error; below that the input is
/// symmetrized before the eigenvalue check.
DiscCheck in_disc(const Mat& Z);

/// Fractional-linear action Z -> (conj(a) Z + conj(b)) (b Z + a)^{-1},
/// symmetrized on return.  Throws when b Z + a is singular.
Mat siegel_act(const SymplecticElement& A, const Mat& Z);

/// True iff A fixes 0, i.e. |b| < tol; also verifies act(A, 0) = 0 then.
bool stabilizer_check(const SymplecticElement& A, double tol = 1e-10);

/// exp of a random element of the symplectic Lie algebra (alpha skew-Hermitian,
/// beta symmetric, both supported on the leading band x band block, scaled by
/// `strength`), so the group relations hold to machine precision.
SymplecticElement random_symplectic(int n, std::uint64_t seed, int band, double strength);

/// Matrix exponential by scaling-and-squaring with a Taylor tail below 1e-14.
Mat expm(const Mat& X);

/// Group product in block coordinates:
/// (a, b) = (a1 a2 + b1 conj(b2), a1 b2 + b1 conj(a2)).
SymplecticElement operator*(const SymplecticElement& A1, const SymplecticElement& A2);

}  // namespace utq
