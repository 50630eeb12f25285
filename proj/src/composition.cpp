#include "utq/composition.hpp"

#include <cmath>
#include <stdexcept>

#include "utq/fft.hpp"
#include "utq/rng.hpp"

namespace utq {

OneParticleOperator OneParticleOperator::zero(ModeSpec spec, std::string label) {
  OneParticleOperator op;
  op.spec = spec;
  op.m = Mat::Zero(spec.dim(), spec.dim());
  op.label = std::move(label);
  return op;
}

OneParticleOperator OneParticleOperator::identity(ModeSpec spec) {
  OneParticleOperator op = zero(spec, "identity");
  op.m = Mat::Identity(spec.dim(), spec.dim());
  op.reality = true;
  return op;
}

int OneParticleOperator::index_of(int k) const {
  const int N = spec.N;
  if (k < -N || k > N || (k == 0 && !spec.include_zero)) {
    throw std::out_of_range("OneParticleOperator: mode outside spec");
  }
  if (spec.include_zero) return k + N;
  return k < 0 ? k + N : k + N - 1;
}

int OneParticleOperator::mode_at(int idx) const {
  const int N = spec.N;
  if (idx < 0 || idx >= dim()) throw std::out_of_range("OneParticleOperator: bad index");
  if (spec.include_zero) return idx - N;
  return idx < N ? idx - N : idx - N + 1;
}

FourierLoop OneParticleOperator::apply(const FourierLoop& f) const {
  if (!(f.spec() == spec)) {
    throw std::invalid_argument("OneParticleOperator::apply: spec mismatch");
  }
  Vec x(dim());
  for (int i = 0; i < dim(); ++i) x(i) = f.coeff(mode_at(i));
  const Vec y = m * x;
  // conjugation symmetry of the matrix makes the image of a real loop real
  // exactly, so the reality flag survives
  const bool real_out = reality && f.is_real();
  FourierLoop g(spec, real_out);
  for (int i = 0; i < dim(); ++i) {
    const int k = mode_at(i);
    if (real_out && k < 0) continue;
    if (k == 0 && real_out) {
      g.set(0, {y(i).real(), 0.0});
    } else {
      g.set(k, y(i));
    }
  }
  return g;
}

OneParticleOperator build_Th(const CircleMap& h, ModeSpec spec, int grid) {
  const int N = spec.N;
  if (spec.include_zero) {
    throw std::invalid_argument("build_Th: T_h lives on V, spec must exclude the zero mode");
  }
  if (grid < 4 * N) {
    throw std::invalid_argument("build_Th: grid must be >= 4 N (aliasing guard)");
  }
  if (!is_pow2(grid)) {
    throw std::invalid_argument("build_Th: grid must be a power of two");
  }
  OneParticleOperator op = OneParticleOperator::zero(spec, "T_h");
  op.reality = true;

  const std::vector<double> lifts = h.lift_grid(grid);
  std::vector<cplx> base(grid), column(grid, cplx{1.0, 0.0});
  for (int j = 0; j < grid; ++j) base[j] = std::polar(1.0, lifts[j]);

  for (int k = 1; k <= N; ++k) {
    for (int j = 0; j < grid; ++j) column[j] *= base[j];  // e^{i k h(theta_j)}
    const std::vector<cplx> coeffs = grid_to_coeffs(column, N);
    for (int mm = -N; mm <= N; ++mm) {
      if (mm == 0) continue;  // mean subtracted
      op.entry(mm, k) = coeffs[mm + N];
      op.entry(-mm, -k) = std::conj(coeffs[mm + N]);
    }
  }
  return op;
}

double check_symplectic(const OneParticleOperator& T, int trials, int band,
                        std::uint64_t seed) {
  const int N = T.spec.N;
  if (band < 1 || 4 * band > N) {
    throw std::invalid_argument("check_symplectic: need 1 <= band <= N/4");
  }
  Rng rng(seed);
  double worst = 0.0;
  ModeSpec loop_spec{N, false};
  for (int t = 0; t < trials; ++t) {
    const FourierLoop xi = FourierLoop::random_real(loop_spec, band, rng);
    const FourierLoop eta = FourierLoop::random_real(loop_spec, band, rng);
    const cplx before = symplectic_form_complex(xi, eta);
    const cplx after = symplectic_form_complex(T.apply(xi), T.apply(eta));
    worst = std::max(worst, std::abs(after - before));
  }
  return worst;
}

namespace {

// H^{1/2}-weighted matrix: W = D^{1/2} T D^{-1/2}, D = diag(|k|), restricted
// to columns |k| <= band.  Euclidean singular values of W are the Sobolev
// singular values of T on the band-limited subspace.
Mat weighted_submatrix(const OneParticleOperator& T, int band) {
  const int dim = T.dim();
  std::vector<int> cols;
  for (int idx = 0; idx < dim; ++idx) {
    const int k = T.mode_at(idx);
    if (k != 0 && std::abs(k) <= band) cols.push_back(idx);
  }
  Mat W(dim, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const double kc = std::abs(T.mode_at(cols[c]));
    for (int r = 0; r < dim; ++r) {
      const int kr = T.mode_at(r);
      if (kr == 0) {
        W(r, static_cast<int>(c)) = 0.0;  // zero mode carries no H^{1/2} weight
        continue;
      }
      W(r, static_cast<int>(c)) = T.m(r, cols[c]) * std::sqrt(std::abs(kr) / kc);
    }
  }
  return W;
}

}  // namespace

NormBoundCheck operator_norm_bound_check(const CircleMap& h, const OneParticleOperator& T,
                                         int band) {
  if (!h.dilatation_hint.has_value()) {
    throw std::invalid_argument("operator_norm_bound_check: dilatation hint required");
  }
  const double K = *h.dilatation_hint;
  if (!(K >= 1.0)) throw std::invalid_argument("operator_norm_bound_check: K must be >= 1");
  if (band < 0) band = T.spec.N / 2;
  const Mat W = weighted_submatrix(T, band);
  Eigen::JacobiSVD<Mat> svd(W);
  NormBoundCheck out;
  out.norm_est = svd.singularValues()(0);
  out.bound = std::sqrt(K + 1.0 / K);
  return out;
}

BlockDecomposition blocks(const OneParticleOperator& T) {
  if (T.spec.include_zero) {
    throw std::invalid_argument("blocks: operator must live on V (no zero mode)");
  }
  const int N = T.spec.N;
  BlockDecomposition B{Mat(N, N), Mat(N, N)};
  for (int mm = 1; mm <= N; ++mm) {
    for (int k = 1; k <= N; ++k) {
      const double w = std::sqrt(static_cast<double>(mm) / k);
      B.a(mm - 1, k - 1) = T.entry(mm, k) * w;
      B.b(mm - 1, k - 1) = T.entry(mm, -k) * w;
    }
  }
  return B;
}

double block_relations_defect(const BlockDecomposition& B, int band) {
  const int N = static_cast<int>(B.a.rows());
  if (band < 0 || band > N) band = N;
  const Mat r1 = B.a.adjoint() * B.a - B.b.transpose() * B.b.conjugate() - Mat::Identity(N, N);
  const Mat r2 = B.a.adjoint() * B.b - B.b.transpose() * B.a.conjugate();
  const double d1 = r1.topLeftCorner(band, band).cwiseAbs().maxCoeff();
  const double d2 = r2.topLeftCorner(band, band).cwiseAbs().maxCoeff();
  return std::max(d1, d2);
}

SiegelPointResult siegel_point_of(const OneParticleOperator& T) {
  const BlockDecomposition B = blocks(T);
  Eigen::FullPivLU<Mat> lu(B.a);
  if (!lu.isInvertible()) {
    throw std::runtime_error(
        "siegel_point: a-block singular (map too far from Mobius at this truncation)");
  }
  const Mat Z = B.b.conjugate() * lu.inverse();
  SiegelPointResult out;
  out.asymmetry = 0.5 * (Z - Z.transpose()).norm();
  out.Z = 0.5 * (Z + Z.transpose());
  return out;
}

double hs_norm_b(const OneParticleOperator& T) { return blocks(T).b.norm(); }

}  // namespace utq
