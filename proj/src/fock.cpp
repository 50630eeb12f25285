#include "utq/fock.hpp"

#include <cmath>
#include <stdexcept>

#include "utq/fourier.hpp"

namespace utq {

namespace {

void validate_config(const FockConfig& cfg) {
  if (cfg.n_modes < 1 || cfg.n_modes > 8) {
    throw std::invalid_argument("FockConfig: n_modes must be in 1..8");
  }
  if (cfg.max_degree < 2 || cfg.max_degree > 100) {
    throw std::invalid_argument("FockConfig: max_degree must be in 2..100");
  }
  if (cfg.lambda == 0.0) {
    throw std::invalid_argument("FockConfig: lambda must be non-zero");
  }
}

void require_same_basis(const FockOperator& A, const FockOperator& B) {
  if (A.basis != B.basis) throw std::invalid_argument("FockOperator: basis mismatch");
}

void require_square(const Mat& M, int n, const char* who) {
  if (M.rows() != n || M.cols() != n) {
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
  }
}

void require_symmetric(const Mat& M, const char* who) {
  const double scale = std::max(1.0, M.norm());
  if ((M - M.transpose()).norm() > 1e-10 * scale) {
    throw std::invalid_argument(std::string(who) + ": matrix must be symmetric");
  }
}

double spectral_norm(const Mat& M) {
  Eigen::JacobiSVD<Mat> svd(M);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

}  // namespace

FockBasis::FockBasis(FockConfig cfg) : cfg_(cfg) {
  validate_config(cfg);
  // enumerate by total degree, lexicographic within a degree
  MultiIndex K(cfg.n_modes, 0);
  auto emit = [this](const MultiIndex& state, int d) {
    states_.push_back(state);
    degrees_.push_back(d);
    double fact = 1.0;
    for (int e : state) {
      for (int i = 2; i <= e; ++i) fact *= i;
    }
    sqrt_fact_.push_back(std::sqrt(fact));
  };
  auto fill = [&](auto&& self, int pos, int remaining, int d) -> void {
    if (pos == cfg.n_modes - 1) {
      K[pos] = remaining;
      emit(K, d);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      K[pos] = e;
      self(self, pos + 1, remaining - e, d);
    }
  };
  for (int d = 0; d <= cfg.max_degree; ++d) fill(fill, 0, d, d);
  lookup_.reserve(states_.size());
  for (int idx = 0; idx < dim(); ++idx) lookup_.emplace(key_of(states_[idx]), idx);
}

std::shared_ptr<const FockBasis> FockBasis::make(FockConfig cfg) {
  return std::make_shared<const FockBasis>(cfg);
}

std::uint64_t FockBasis::key_of(const MultiIndex& K) const {
  std::uint64_t key = 0;
  const std::uint64_t base = static_cast<std::uint64_t>(cfg_.max_degree) + 1;
  for (int e : K) key = key * base + static_cast<std::uint64_t>(e);
  return key;
}

int FockBasis::index_of(const MultiIndex& K) const {
  if (static_cast<int>(K.size()) != cfg_.n_modes) return -1;
  int total = 0;
  for (int e : K) {
    if (e < 0) return -1;
    total += e;
  }
  if (total > cfg_.max_degree) return -1;
  const auto it = lookup_.find(key_of(K));
  return it == lookup_.end() ? -1 : it->second;
}

cplx inner(const FockState& f, const FockState& g) {
  if (f.basis != g.basis) throw std::invalid_argument("inner: basis mismatch");
  return f.c.dot(g.c);  // Eigen dot conjugates the first factor
}

FockState vacuum(const FockBasisPtr& basis) {
  FockState s{basis, Vec::Zero(basis->dim())};
  s.c(0) = 1.0;
  return s;
}

FockState basis_state(const FockBasisPtr& basis, const MultiIndex& K) {
  const int idx = basis->index_of(K);
  if (idx < 0) {
    throw std::invalid_argument("basis_state: multi-index outside the truncation");
  }
  FockState s{basis, Vec::Zero(basis->dim())};
  s.c(idx) = 1.0;
  return s;
}

FockState FockOperator::apply(const FockState& f) const {
  if (f.basis != basis) throw std::invalid_argument("FockOperator::apply: basis mismatch");
  return {basis, m * f.c};
}

FockOperator FockOperator::adjoint() const {
  return {basis, m.adjoint(), -max_up, -min_up, std::max(0, -min_up)};
}

FockOperator operator*(const FockOperator& A, const FockOperator& B) {
  require_same_basis(A, B);
  return {A.basis, A.m * B.m, A.min_up + B.min_up, A.max_up + B.max_up,
          std::max(B.peak_up, B.max_up + A.peak_up)};
}

FockOperator operator+(const FockOperator& A, const FockOperator& B) {
  require_same_basis(A, B);
  return {A.basis, A.m + B.m, std::min(A.min_up, B.min_up), std::max(A.max_up, B.max_up),
          std::max(A.peak_up, B.peak_up)};
}

FockOperator operator-(const FockOperator& A, const FockOperator& B) {
  require_same_basis(A, B);
  return {A.basis, A.m - B.m, std::min(A.min_up, B.min_up), std::max(A.max_up, B.max_up),
          std::max(A.peak_up, B.peak_up)};
}

FockOperator operator*(cplx scale, const FockOperator& A) {
  return {A.basis, scale * A.m, A.min_up, A.max_up, A.peak_up};
}

FockOperator zero_operator(const FockBasisPtr& basis) {
  return {basis, Mat::Zero(basis->dim(), basis->dim()), 0, 0, 0};
}

FockOperator identity_operator(const FockBasisPtr& basis) {
  return {basis, Mat::Identity(basis->dim(), basis->dim()), 0, 0, 0};
}

FockOperator creation(int n, const FockBasisPtr& basis) {
  const FockConfig& cfg = basis->config();
  if (n < 1 || n > cfg.n_modes) throw std::out_of_range("creation: mode index out of range");
  FockOperator op = zero_operator(basis);
  op.min_up = op.max_up = op.peak_up = 1;
  for (int idx = 0; idx < basis->dim(); ++idx) {
    if (basis->degree(idx) >= cfg.max_degree) continue;
    MultiIndex K = basis->exponents(idx);
    K[n - 1] += 1;
    const int target = basis->index_of(K);
    op.m(target, idx) = std::sqrt(static_cast<double>(K[n - 1]));
  }
  return op;
}

FockOperator annihilation(int n, const FockBasisPtr& basis) {
  const FockConfig& cfg = basis->config();
  if (n < 1 || n > cfg.n_modes) throw std::out_of_range("annihilation: mode index out of range");
  FockOperator op = zero_operator(basis);
  op.min_up = op.max_up = -1;
  op.peak_up = 0;
  for (int idx = 0; idx < basis->dim(); ++idx) {
    MultiIndex K = basis->exponents(idx);
    if (K[n - 1] == 0) continue;
    const double amp = std::sqrt(static_cast<double>(K[n - 1]));
    K[n - 1] -= 1;
    op.m(basis->index_of(K), idx) = amp;
  }
  return op;
}

FockOperator heisenberg_rep(const Vec& plus, const Vec& minus, const FockBasisPtr& basis) {
  const int n = basis->config().n_modes;
  if (plus.size() != n || minus.size() != n) {
    throw std::invalid_argument("heisenberg_rep: coordinate length must equal n_modes");
  }
  const double root_lambda = std::sqrt(basis->config().lambda);
  FockOperator op = zero_operator(basis);
  op.min_up = -1;
  op.max_up = op.peak_up = 1;
  for (int k = 1; k <= n; ++k) {
    if (plus(k - 1) != cplx{0.0, 0.0}) {
      op.m += root_lambda * plus(k - 1) * creation(k, basis).m;
    }
    if (minus(k - 1) != cplx{0.0, 0.0}) {
      op.m -= root_lambda * minus(k - 1) * annihilation(k, basis).m;
    }
  }
  return op;
}

Vec wplus_coordinates(const FourierLoop& f, int n_modes) {
  Vec out(n_modes);
  for (int k = 1; k <= n_modes; ++k) out(k - 1) = std::sqrt(static_cast<double>(k)) * f.coeff(k);
  return out;
}

FockState coherent_state(const Mat& Z, const FockBasisPtr& basis) {
  const FockConfig& cfg = basis->config();
  require_square(Z, cfg.n_modes, "coherent_state");
  require_symmetric(Z, "coherent_state");
  const double snorm = spectral_norm(Z);
  if (snorm >= 1.0) throw std::invalid_argument("coherent_state: Z outside the Siegel disc");
  if (snorm > 0.5 + 1e-12) {
    throw std::invalid_argument("coherent_state: spectral norm above 0.5 (tail guard)");
  }
  const int n = cfg.n_modes;
  const int dim = basis->dim();
  Vec acc = Vec::Zero(dim), cur = Vec::Zero(dim);
  cur(0) = 1.0;
  acc(0) = 1.0;
  for (int d = 1; 2 * d <= cfg.max_degree; ++d) {
    Vec next = Vec::Zero(dim);
    for (int idx = 0; idx < dim; ++idx) {
      if (cur(idx) == cplx{0.0, 0.0}) continue;
      if (basis->degree(idx) + 2 > cfg.max_degree) continue;
      const MultiIndex& K = basis->exponents(idx);
      for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
          const cplx zab = Z(a, b);
          if (zab == cplx{0.0, 0.0}) continue;
          MultiIndex K2 = K;
          K2[a] += 1;
          K2[b] += 1;
          const int target = basis->index_of(K2);
          if (target < 0) continue;
          const double half = (a == b) ? 0.5 : 1.0;
          next(target) += cur(idx) * zab * half;
        }
      }
    }
    cur = next / static_cast<double>(d);
    acc += cur;
  }
  FockState s{basis, acc};
  for (int idx = 0; idx < dim; ++idx) s.c(idx) *= basis->sqrt_factorial(idx);
  return s;
}

cplx det_power(const Mat& M, double power) {
  Eigen::ComplexEigenSolver<Mat> es(M);
  if (es.info() != Eigen::Success) throw std::runtime_error("det_power: eigensolver failed");
  cplx log_det{0.0, 0.0};
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const cplx lam = es.eigenvalues()(i);
    if (lam == cplx{0.0, 0.0}) throw std::runtime_error("det_power: singular matrix");
    log_det += std::log(lam);
  }
  return std::exp(power * log_det);
}

FockState normalized_coherent(const Mat& Z, const FockBasisPtr& basis) {
  FockState s = coherent_state(Z, basis);
  const Mat G = Mat::Identity(Z.rows(), Z.cols()) - Z.conjugate() * Z;
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (G + G.adjoint()));
  double log_det = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double lam = es.eigenvalues()(i);
    if (lam <= 0.0) throw std::runtime_error("normalized_coherent: Z outside the disc");
    log_det += std::log(lam);
  }
  s.c *= std::exp(0.25 * log_det);
  return s;
}

CoherentInner coherent_inner(const Mat& Z1, const Mat& Z2, const FockBasisPtr& basis) {
  CoherentInner out;
  out.truncated = inner(coherent_state(Z1, basis), coherent_state(Z2, basis));
  const Mat M = Mat::Identity(Z1.rows(), Z1.cols()) - Z1.conjugate() * Z2;
  out.closed_form = det_power(M, -0.5);
  return out;
}

SegalAction segal_action(const SymplecticElement& A, const Mat& Z) {
  SegalAction out;
  out.target = siegel_act(A, Z);
  Eigen::FullPivLU<Mat> lu(A.a);
  if (!lu.isInvertible()) throw std::runtime_error("segal_action: a-block singular");
  const Mat M = Mat::Identity(A.dim(), A.dim()) + lu.solve(A.b.conjugate() * Z);
  const cplx factor = det_power(M, 0.5);
  const double mod = std::abs(factor);
  if (mod == 0.0) throw std::runtime_error("segal_action: vanishing determinant factor");
  out.phase = factor / mod;
  return out;
}

SpAlgebraElement sp_bracket(const SpAlgebraElement& X, const SpAlgebraElement& Y) {
  const int n = X.dim();
  require_square(Y.alpha, n, "sp_bracket");
  auto embed = [n](const SpAlgebraElement& E) {
    Mat M = Mat::Zero(2 * n, 2 * n);
    M.topLeftCorner(n, n) = E.alpha;
    M.topRightCorner(n, n) = E.beta;
    M.bottomLeftCorner(n, n) = E.gamma.conjugate();
    M.bottomRightCorner(n, n) = -E.alpha.transpose();
    return M;
  };
  const Mat C = embed(X) * embed(Y) - embed(Y) * embed(X);
  SpAlgebraElement out;
  out.alpha = C.topLeftCorner(n, n);
  const Mat beta = C.topRightCorner(n, n);
  const Mat gbar = C.bottomLeftCorner(n, n);
  out.beta = 0.5 * (beta + beta.transpose());
  out.gamma = (0.5 * (gbar + gbar.transpose())).conjugate();
  return out;
}

FockOperator quadratic_mult(const Mat& beta, const FockBasisPtr& basis) {
  const FockConfig& cfg = basis->config();
  require_square(beta, cfg.n_modes, "quadratic_mult");
  FockOperator op = zero_operator(basis);
  op.min_up = op.max_up = op.peak_up = 2;
  const int n = cfg.n_modes;
  for (int idx = 0; idx < basis->dim(); ++idx) {
    if (basis->degree(idx) + 2 > cfg.max_degree) continue;
    const MultiIndex& K = basis->exponents(idx);
    for (int a = 0; a < n; ++a) {       // outer creation a*_a
      for (int b = 0; b < n; ++b) {     // inner creation a*_b
        if (beta(a, b) == cplx{0.0, 0.0}) continue;
        MultiIndex K2 = K;
        K2[b] += 1;
        const int f1 = K2[b];
        K2[a] += 1;
        // single sqrt of the integer product keeps repeated-mode amplitudes exact
        const double amp = std::sqrt(static_cast<double>(f1) * K2[a]);
        op.m(basis->index_of(K2), idx) += beta(a, b) * amp;
      }
    }
  }
  return op;
}

FockOperator quadratic_mult_adjoint(const Mat& beta, const FockBasisPtr& basis) {
  FockOperator op = quadratic_mult(beta, basis).adjoint();
  return op;
}

FockOperator symplectic_rep(const SpAlgebraElement& X, const FockBasisPtr& basis) {
  const FockConfig& cfg = basis->config();
  require_square(X.alpha, cfg.n_modes, "symplectic_rep");
  require_symmetric(X.beta, "symplectic_rep(beta)");
  require_symmetric(X.gamma, "symplectic_rep(gamma)");
  const FockOperator D = second_quantize(X.alpha, basis);
  const FockOperator Mb = quadratic_mult(X.beta, basis);
  const FockOperator Mg = quadratic_mult_adjoint(X.gamma, basis);
  return D + (0.5 * Mb - 0.5 * Mg);
}

CocycleResult cocycle_defect(const SpAlgebraElement& X1, const SpAlgebraElement& X2,
                             const FockBasisPtr& basis) {
  if (basis->config().max_degree < 6) {
    throw std::invalid_argument("cocycle_defect: max_degree must be >= 6");
  }
  const FockOperator r1 = symplectic_rep(X1, basis);
  const FockOperator r2 = symplectic_rep(X2, basis);
  const FockOperator r12 = symplectic_rep(sp_bracket(X1, X2), basis);
  const FockOperator C = (r1 * r2 - r2 * r1) - r12;

  CocycleResult out;
  out.operator_scalar = C.m(0, 0);
  out.off_scalar_residual = interior_defect_scalar(C, out.operator_scalar);
  out.closed_form = 0.5 * ((X2.gamma.conjugate() * X1.beta).trace() -
                           (X1.gamma.conjugate() * X2.beta).trace());
  if (out.off_scalar_residual > 1e-9) {
    throw std::runtime_error("cocycle_defect: commutator defect is not scalar");
  }
  return out;
}

FockOperator second_quantize(const Mat& X, const FockBasisPtr& basis) {
  const FockConfig& cfg = basis->config();
  require_square(X, cfg.n_modes, "second_quantize");
  FockOperator op = zero_operator(basis);
  const int n = cfg.n_modes;
  // Leibniz rule: replace one factor at a time, K -> K - e_b + e_a with the
  // one-particle amplitude X_ab; equivalently sum X_ab a*_a a_b
  for (int idx = 0; idx < basis->dim(); ++idx) {
    const MultiIndex& K = basis->exponents(idx);
    for (int b = 0; b < n; ++b) {
      if (K[b] == 0) continue;
      for (int a = 0; a < n; ++a) {
        if (X(a, b) == cplx{0.0, 0.0}) continue;
        MultiIndex K2 = K;
        K2[b] -= 1;
        K2[a] += 1;
        // single sqrt of the integer product: dGamma(I) gets exact integers
        const double amp = std::sqrt(static_cast<double>(K[b]) * K2[a]);
        op.m(basis->index_of(K2), idx) += X(a, b) * amp;
      }
    }
  }
  return op;
}

double interior_defect(const FockOperator& A, const FockOperator& B) {
  require_same_basis(A, B);
  const int peak = std::max(A.peak_up, B.peak_up);
  const int cutoff = A.basis->config().max_degree - peak;
  double worst = 0.0;
  for (int col = 0; col < A.basis->dim(); ++col) {
    if (A.basis->degree(col) > cutoff) continue;
    worst = std::max(worst, (A.m.col(col) - B.m.col(col)).cwiseAbs().maxCoeff());
  }
  return worst;
}

double interior_defect_scalar(const FockOperator& A, cplx scale) {
  const int cutoff = A.basis->config().max_degree - A.peak_up;
  double worst = 0.0;
  for (int col = 0; col < A.basis->dim(); ++col) {
    if (A.basis->degree(col) > cutoff) continue;
    Vec v = A.m.col(col);
    v(col) -= scale;
    worst = std::max(worst, v.cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace utq
