#include "utq/siegel.hpp"

#include <cmath>
#include <stdexcept>

#include "utq/rng.hpp"

namespace utq {

SymplecticElement SymplecticElement::identity(int n) {
  return {Mat::Identity(n, n), Mat::Zero(n, n)};
}

Mat SymplecticElement::full() const {
  const int n = dim();
  Mat A(2 * n, 2 * n);
  A.topLeftCorner(n, n) = a;
  A.topRightCorner(n, n) = b;
  A.bottomLeftCorner(n, n) = b.conjugate();
  A.bottomRightCorner(n, n) = a.conjugate();
  return A;
}

double SymplecticElement::relations_defect() const {
  const int n = dim();
  const Mat r1 = a.adjoint() * a - b.transpose() * b.conjugate() - Mat::Identity(n, n);
  const Mat r2 = a.adjoint() * b - b.transpose() * a.conjugate();
  return std::max(r1.cwiseAbs().maxCoeff(), r2.cwiseAbs().maxCoeff());
}

DiscCheck in_disc(const Mat& Z) {
  if (Z.rows() != Z.cols()) throw std::invalid_argument("in_disc: matrix must be square");
  DiscCheck out;
  out.asymmetry = 0.5 * (Z - Z.transpose()).norm();
  if (out.asymmetry > 1e-8) {
    throw std::invalid_argument("in_disc: input asymmetry exceeds 1e-8");
  }
  const Mat Zs = 0.5 * (Z + Z.transpose());
  const Mat G = Mat::Identity(Z.rows(), Z.cols()) - Zs.conjugate() * Zs;
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (G + G.adjoint()));
  out.min_eig = es.eigenvalues().minCoeff();
  out.ok = out.asymmetry <= 1e-10 && out.min_eig > 0.0;
  return out;
}

Mat siegel_act(const SymplecticElement& A, const Mat& Z) {
  if (Z.rows() != A.dim() || Z.cols() != A.dim()) {
    throw std::invalid_argument("siegel_act: dimension mismatch");
  }
  const Mat denom = A.b * Z + A.a;
  Eigen::FullPivLU<Mat> lu(denom);
  if (!lu.isInvertible()) {
    throw std::runtime_error("siegel_act: b Z + a is singular");
  }
  const Mat W = (A.a.conjugate() * Z + A.b.conjugate()) * lu.inverse();
  return 0.5 * (W + W.transpose());
}

bool stabilizer_check(const SymplecticElement& A, double tol) {
  if (A.b.norm() >= tol) return false;
  const Mat fixed = siegel_act(A, Mat::Zero(A.dim(), A.dim()));
  if (fixed.norm() > 100.0 * tol) {
    throw std::runtime_error("stabilizer_check: b vanishes but 0 moves");
  }
  return true;
}

Mat expm(const Mat& X) {
  const double norm = X.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  }
  const Mat Xs = X / std::pow(2.0, squarings);
  const int n = static_cast<int>(X.rows());
  Mat term = Mat::Identity(n, n);
  Mat sum = term;
  for (int k = 1; k <= 40; ++k) {
    term = (term * Xs) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18 * sum.cwiseAbs().maxCoeff()) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

SymplecticElement operator*(const SymplecticElement& A1, const SymplecticElement& A2) {
  return {A1.a * A2.a + A1.b * A2.b.conjugate(), A1.a * A2.b + A1.b * A2.a.conjugate()};
}

SymplecticElement random_symplectic(int n, std::uint64_t seed, int band, double strength) {
  if (band < 1 || band > n) throw std::invalid_argument("random_symplectic: band out of range");
  Rng rng(seed);
  Mat alpha = Mat::Zero(n, n), beta = Mat::Zero(n, n);
  for (int i = 0; i < band; ++i) {
    for (int j = 0; j < band; ++j) {
      alpha(i, j) = rng.complex_normal();
      beta(i, j) = rng.complex_normal();
    }
  }
  alpha = (0.5 * (alpha - alpha.adjoint()) * strength).eval();
  beta = (0.5 * (beta + beta.transpose()) * strength).eval();

  Mat X = Mat::Zero(2 * n, 2 * n);
  X.topLeftCorner(n, n) = alpha;
  X.topRightCorner(n, n) = beta;
  X.bottomLeftCorner(n, n) = beta.conjugate();
  X.bottomRightCorner(n, n) = alpha.conjugate();
  const Mat A = expm(X);
  return {A.topLeftCorner(n, n), A.topRightCorner(n, n)};
}

}  // namespace utq
