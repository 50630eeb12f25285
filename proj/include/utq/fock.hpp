#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "utq/siegel.hpp"
#include "utq/types.hpp"

namespace utq {

struct FockConfig {
  int n_modes;
  int max_degree;
  double lambda = 1.0;  // image of the central element is lambda * I
};

using MultiIndex = std::vector<int>;

/// Orthonormal basis {P_K} of the truncated Fock space, indexed by
/// multi-indices with total degree <= max_degree, ordered by degree then
/// lexicographically (the vacuum is index 0).
class FockBasis {
 public:
  static std::shared_ptr<const FockBasis> make(FockConfig cfg);

  const FockConfig& config() const { return cfg_; }
  int dim() const { return static_cast<int>(states_.size()); }
  const MultiIndex& exponents(int idx) const { return states_[idx]; }
  int degree(int idx) const { return degrees_[idx]; }
  /// Index of K, or -1 when K is outside the truncation.
  int index_of(const MultiIndex& K) const;
  /// sqrt(K!) = sqrt(k_1! ... k_n!), the monomial-to-orthonormal factor.
  double sqrt_factorial(int idx) const { return sqrt_fact_[idx]; }

  explicit FockBasis(FockConfig cfg);

 private:
  std::uint64_t key_of(const MultiIndex& K) const;
  FockConfig cfg_;
  std::vector<MultiIndex> states_;
  std::vector<int> degrees_;
  std::vector<double> sqrt_fact_;
  std::unordered_map<std::uint64_t, int> lookup_;
};

using FockBasisPtr = std::shared_ptr<const FockBasis>;

struct FockState {
  FockBasisPtr basis;
  Vec c;
  double norm() const { return c.norm(); }
};

/// <f, g> = sum_K conj(f_K) g_K (conjugate-linear in the first argument,
/// matching <e^{Z1/2}, e^{Z2/2}> = det(1 - conj(Z1) Z2)^{-1/2}).
cplx inner(const FockState& f, const FockState& g);

FockState vacuum(const FockBasisPtr& basis);
/// P_K; throws when K has a negative entry or overflows the degree bound.
FockState basis_state(const FockBasisPtr& basis, const MultiIndex& K);

/// Linear operator on the truncated space.  [min_up, max_up] bounds the net
/// degree shift, peak_up the largest intermediate raise over the factorization
/// used to build it; identities are asserted on columns of degree
/// <= max_degree - peak_up, where the truncation projector loses nothing.
struct FockOperator {
  FockBasisPtr basis;
  Mat m;
  int min_up = 0;
  int max_up = 0;
  int peak_up = 0;

  FockState apply(const FockState& f) const;
  FockOperator adjoint() const;
};

FockOperator operator*(const FockOperator& A, const FockOperator& B);  // A after B
FockOperator operator+(const FockOperator& A, const FockOperator& B);
FockOperator operator-(const FockOperator& A, const FockOperator& B);
FockOperator operator*(cplx scale, const FockOperator& A);

FockOperator zero_operator(const FockBasisPtr& basis);
FockOperator identity_operator(const FockBasisPtr& basis);

/// a*_n P_K = sqrt(k_n + 1) P_{K + e_n} (image beyond the cutoff dropped);
/// modes are 1-based, 1 <= n <= n_modes.
FockOperator creation(int n, const FockBasisPtr& basis);
/// a_n P_K = sqrt(k_n) P_{K - e_n}; kills the vacuum.
FockOperator annihilation(int n, const FockBasisPtr& basis);

/// Heisenberg representation of the vector with W+ coordinates `plus` and
/// W- coordinates `minus` (for a real loop, minus = conj(plus)):
/// r(v) = sqrt(lambda) (sum plus_n a*_n - sum minus_n a_n), r(c) = lambda I.
FockOperator heisenberg_rep(const Vec& plus, const Vec& minus, const FockBasisPtr& basis);

/// Commutator scalar: [r(x), r(y)] = kHeisenbergScalar * lambda * omega(x,y) I
/// on interior degrees.  Value fixed once by the 1-mode, degree-3 oracle.
inline constexpr cplx kHeisenbergScalar{0.0, 1.0};

/// Coordinates of a real loop in the H^{1/2}-orthonormal frame w_k = z^k/sqrt(k):
/// plus_k = sqrt(k) f_k for k = 1..n_modes.
Vec wplus_coordinates(const class FourierLoop& f, int n_modes);

/// e^{Z/2} = sum_d (1/d!) (1/2 sum Z_mn x_m x_n)^d truncated at max_degree,
/// expanded in the orthonormal basis.  Requires spectral norm <= 0.5 (tail
/// guard); outside the closed disc is an error.
FockState coherent_state(const Mat& Z, const FockBasisPtr& basis);

/// Normalized coherent state det(1 - conj(Z) Z)^{1/4} e^{Z/2}.
FockState normalized_coherent(const Mat& Z, const FockBasisPtr& basis);

struct CoherentInner {
  cplx truncated;    // inner product of the truncated expansions
  cplx closed_form;  // det(1 - conj(Z1) Z2)^{-1/2}, principal branch
};
CoherentInner coherent_inner(const Mat& Z1, const Mat& Z2, const FockBasisPtr& basis);

/// det(M)^p through the sum of principal logs of the eigenvalues.
cplx det_power(const Mat& M, double power);

struct SegalAction {
  cplx phase;  // radial projection of det(1 + a^{-1} conj(b) Z)^{1/2}
  Mat target;  // the fractional-linear image of Z
};

/// Projective action on coherent states: e_Z -> phase * e_{A.Z}.
SegalAction segal_action(const SymplecticElement& A, const Mat& Z);

/// Element of the complexified symplectic algebra in block form
/// (alpha  beta; conj(gamma)  -alpha^t); beta and gamma symmetric.
struct SpAlgebraElement {
  Mat alpha, beta, gamma;
  int dim() const { return static_cast<int>(alpha.rows()); }
};

/// Block commutator, computed on the 2n x 2n embedding.
SpAlgebraElement sp_bracket(const SpAlgebraElement& X, const SpAlgebraElement& Y);

/// Multiplication by the quadratic form of beta: sum beta_mn a*_m a*_n.
FockOperator quadratic_mult(const Mat& beta, const FockBasisPtr& basis);
/// Its adjoint: sum conj(beta)_mn a_m a_n.
FockOperator quadratic_mult_adjoint(const Mat& beta, const FockBasisPtr& basis);

/// rho(X) = dGamma(alpha) + 1/2 quadratic_mult(beta) - 1/2 quadratic_mult_adjoint(gamma).
/// The sign of the annihilation part is the one that makes the commutator
/// defect scalar and anti-self-adjoint on the real form; with it the cocycle
/// below comes out as 1/2 tr(conj(gamma2) beta1 - conj(gamma1) beta2).
FockOperator symplectic_rep(const SpAlgebraElement& X, const FockBasisPtr& basis);

struct CocycleResult {
  cplx operator_scalar;        // [rho(X1), rho(X2)] - rho([X1, X2]) on the interior
  cplx closed_form;            // 1/2 tr(conj(gamma2) beta1 - conj(gamma1) beta2)
  double off_scalar_residual;  // how far the defect is from a multiple of I
};

/// Throws when the defect fails to be scalar beyond 1e-9 (implementation bug).
CocycleResult cocycle_defect(const SpAlgebraElement& X1, const SpAlgebraElement& X2,
                             const FockBasisPtr& basis);

/// Leibniz (one factor at a time) extension of a one-particle operator,
/// dGamma(X) = sum X_mn a*_m a_n; degree-preserving, so bracket identities
/// hold on the whole truncated space.
FockOperator second_quantize(const Mat& X, const FockBasisPtr& basis);

/// Max column-wise deviation |A - B| over columns interior to both operators.
double interior_defect(const FockOperator& A, const FockOperator& B);
/// Same against scale * identity.
double interior_defect_scalar(const FockOperator& A, cplx scale);

}  // namespace utq
