#include "utq/qcalc.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "utq/fft.hpp"

namespace utq {

namespace {

FourierLoop derivative_loop(const FourierLoop& f) {
  FourierLoop df(f.spec(), false);
  for (int k = 1; k <= f.spec().N; ++k) {
    df.set(k, kI * static_cast<double>(k) * f.coeff(k));
    df.set(-k, -kI * static_cast<double>(k) * f.coeff(-k));
  }
  return df;
}

void require_zero_mode(const ModeSpec& spec, const char* op) {
  if (!spec.include_zero) {
    throw std::invalid_argument(std::string(op) + ": spec must include the zero mode");
  }
}

// table(p, n + N) = e^{i n theta_p}
Mat mode_table(const std::vector<double>& theta, int N) {
  const int nodes = static_cast<int>(theta.size());
  Mat F(nodes, 2 * N + 1);
  for (int p = 0; p < nodes; ++p) {
    const cplx tw = std::polar(1.0, theta[p]);
    cplx v = std::polar(1.0, -N * theta[p]);
    for (int col = 0; col < 2 * N + 1; ++col) {
      F(p, col) = v;
      v *= tw;
    }
  }
  return F;
}

// A_{mn} = (1/(2pi)^2) sum_{p,q} w_p w_q e^{-i m theta_p} k(p, q) e^{i n theta_q},
// kernel rows streamed so the nodes x nodes matrix is never stored.
template <class Kernel>
Mat quadrature_operator(const std::vector<double>& theta, const std::vector<double>& w,
                        int N, Kernel&& kernel) {
  const int nodes = static_cast<int>(theta.size());
  const int width = 2 * N + 1;
  const Mat F = mode_table(theta, N);
  Vec wv(nodes);
  for (int q = 0; q < nodes; ++q) wv(q) = w[q];
  const Mat Fw = wv.asDiagonal() * F;

  Mat inner(nodes, width);
  Eigen::RowVectorXcd row(nodes);
  for (int p = 0; p < nodes; ++p) {
    for (int q = 0; q < nodes; ++q) row(q) = kernel(p, q);
    inner.row(p) = row * Fw;
  }
  return (F.adjoint() * (wv.asDiagonal() * inner)) / (kTwoPi * kTwoPi);
}

std::vector<double> uniform_nodes(int count, double step, double offset = 0.0) {
  std::vector<double> theta(count);
  for (int j = 0; j < count; ++j) theta[j] = offset + j * step;
  return theta;
}

std::vector<double> simpson_weights(int panels, double step) {
  std::vector<double> w(panels + 1, 2.0);
  for (int j = 1; j < panels; j += 2) w[j] = 4.0;
  w[0] = w[panels] = 1.0;
  for (auto& x : w) x *= step / 3.0;
  return w;
}

std::vector<double> boole_weights(int panels, double step) {
  // composite 5-point Newton-Cotes; panels divisible by 4
  std::vector<double> w(panels + 1);
  for (int j = 0; j <= panels; ++j) {
    if (j == 0 || j == panels) {
      w[j] = 7.0;
    } else if (j % 2 == 1) {
      w[j] = 32.0;
    } else if (j % 4 == 2) {
      w[j] = 12.0;
    } else {
      w[j] = 14.0;
    }
  }
  for (auto& x : w) x *= 2.0 * step / 45.0;
  return w;
}

void fill_from_coeff_table(OneParticleOperator& op, const Mat& A) {
  const int N = op.spec.N;
  for (int mm = -N; mm <= N; ++mm) {
    if (mm == 0 && !op.spec.include_zero) continue;
    for (int n = -N; n <= N; ++n) {
      if (n == 0 && !op.spec.include_zero) continue;
      op.entry(mm, n) = A(mm + N, n + N);
    }
  }
}

}  // namespace

Mat SymmetryOperator::matrix() const {
  OneParticleOperator op = OneParticleOperator::zero(spec);
  for (int i = 0; i < op.dim(); ++i) op.m(i, i) = sign(op.mode_at(i));
  return op.m;
}

SymmetryOperator hilbert_transform(ModeSpec spec) { return SymmetryOperator{spec}; }

FourierLoop hilbert_pv_oracle(const FourierLoop& f, int grid) {
  const int m = grid;
  if (m % 2 != 0 || m < 8 * f.spec().N) {
    throw std::invalid_argument("hilbert_pv_oracle: grid must be even and >= 8 N");
  }
  const double step = kTwoPi / m;
  // f on the half-offset grid and the cot weights; nodes sit symmetrically
  // around the singularity, so the odd cot terms cancel in pairs and no
  // principal-value regularization is needed
  std::vector<cplx> shifted(m);
  std::vector<cplx> weight(m);
  for (int j = 0; j < m; ++j) {
    shifted[j] = f.evaluate((j + 0.5) * step);
    weight[j] = cplx{1.0, -1.0 / std::tan(0.25 * (2 * j + 1) * step)} / static_cast<double>(m);
  }
  std::vector<cplx> out(m, cplx{0.0, 0.0});
  for (int p = 0; p < m; ++p) {
    cplx acc{0.0, 0.0};
    for (int j = 0; j < m; ++j) {
      int idx = p + j;
      if (idx >= m) idx -= m;
      acc += weight[j] * shifted[idx];
    }
    out[p] = acc;
  }
  const std::vector<cplx> coeffs = grid_to_coeffs_direct(out, f.spec().N);
  FourierLoop g(f.spec(), false);
  for (int k = -f.spec().N; k <= f.spec().N; ++k) {
    if (k == 0 && !f.spec().include_zero) continue;
    g.set(k, coeffs[k + f.spec().N]);
  }
  return g;
}

OneParticleOperator mult_operator(const FourierLoop& f, ModeSpec spec) {
  require_zero_mode(spec, "mult_operator");
  if (f.band() > spec.N) {
    throw std::invalid_argument("mult_operator: f must be band-limited to |k| <= N");
  }
  OneParticleOperator op = OneParticleOperator::zero(spec, "M_f");
  for (int mm = -spec.N; mm <= spec.N; ++mm) {
    for (int n = -spec.N; n <= spec.N; ++n) {
      op.entry(mm, n) = f.coeff(mm - n);
    }
  }
  op.reality = f.is_real();
  return op;
}

QuantumDifferential quantum_differential(const FourierLoop& f, ModeSpec spec) {
  require_zero_mode(spec, "quantum_differential");
  if (f.band() > spec.N) {
    throw std::invalid_argument("quantum_differential: f must be band-limited to |k| <= N");
  }
  const SymmetryOperator S = hilbert_transform(spec);
  OneParticleOperator op = OneParticleOperator::zero(spec, "d^q f");
  for (int mm = -spec.N; mm <= spec.N; ++mm) {
    for (int n = -spec.N; n <= spec.N; ++n) {
      const int ds = S.sign(mm) - S.sign(n);
      if (ds != 0) op.entry(mm, n) = static_cast<double>(ds) * f.coeff(mm - n);
    }
  }
  return {f, std::move(op)};
}

OneParticleOperator quantum_differential_commutator(const FourierLoop& f, ModeSpec spec) {
  const OneParticleOperator M = mult_operator(f, spec);
  const Mat S = hilbert_transform(spec).matrix();
  OneParticleOperator op = OneParticleOperator::zero(spec, "[S, M_f]");
  op.m = S * M.m - M.m * S;
  return op;
}

OneParticleOperator quantum_differential_kernel_oracle(const FourierLoop& f, int grid,
                                                       ModeSpec spec) {
  require_zero_mode(spec, "quantum_differential_kernel_oracle");
  const int m = grid;
  if (m < 4 * (f.band() + spec.N) + 4) {
    throw std::invalid_argument("quantum_differential_kernel_oracle: grid too small");
  }
  const double step = kTwoPi / m;
  const FourierLoop df = derivative_loop(f);
  std::vector<cplx> fval(m), dfval(m);
  for (int j = 0; j < m; ++j) {
    fval[j] = f.evaluate(j * step);
    dfval[j] = df.evaluate(j * step);
  }
  // kernel of [S, M_f]: K(phi,psi) (f(psi) - f(phi)); smooth after assigning
  // the continuous diagonal value -2 i f'(phi)
  auto kernel = [&](int p, int q) -> cplx {
    if (p == q) return -2.0 * kI * dfval[p];
    const double u = (p - q) * step;
    return cplx{1.0, 1.0 / std::tan(0.5 * u)} * (fval[q] - fval[p]);
  };
  const std::vector<double> theta = uniform_nodes(m, step);
  const std::vector<double> w(m, step);  // periodic trapezoid
  const Mat A = quadrature_operator(theta, w, spec.N, kernel);
  OneParticleOperator op = OneParticleOperator::zero(spec, "d^q f (kernel quadrature)");
  fill_from_coeff_table(op, A);
  return op;
}

HsVsSobolev hs_norm_vs_sobolev(const FourierLoop& f) {
  if (!f.is_real()) throw std::invalid_argument("hs_norm_vs_sobolev: loop must be real");
  HsVsSobolev out{0.0, 0.0, std::numeric_limits<double>::quiet_NaN()};
  const int band = f.band();
  if (band == 0) return out;
  const ModeSpec spec{2 * band, true};
  FourierLoop g(spec, true);
  for (int k = 1; k <= band; ++k) g.set(k, f.coeff(k));
  const QuantumDifferential dq = quantum_differential(g, spec);
  out.hs = dq.op.m.norm();
  out.sobolev = h_half_norm(f);
  out.ratio = out.hs / out.sobolev;
  return out;
}

OneParticleOperator finite_difference_op(const FourierLoop& f, int grid, ModeSpec spec) {
  require_zero_mode(spec, "finite_difference_op");
  if (grid % 2 != 0 || grid < 8 * std::max(1, f.band())) {
    throw std::invalid_argument("finite_difference_op: grid must be even and >= 8 band");
  }
  const int m = grid;  // Simpson panels over the closed square [0, 2pi]^2
  const double step = kTwoPi / m;
  const FourierLoop df = derivative_loop(f);
  std::vector<cplx> fval(m + 1), dfval(m + 1);
  for (int j = 0; j <= m; ++j) {
    fval[j] = f.evaluate(j * step);
    dfval[j] = df.evaluate(j * step);
  }
  auto kernel = [&](int p, int q) -> cplx {
    if (p == q) return dfval[p];
    return (fval[p] - fval[q]) / ((p - q) * step);
  };
  const std::vector<double> theta = uniform_nodes(m + 1, step);
  const std::vector<double> w = simpson_weights(m, step);
  const Mat A = quadrature_operator(theta, w, spec.N, kernel);
  OneParticleOperator op = OneParticleOperator::zero(spec, "delta f");
  fill_from_coeff_table(op, A);
  return op;
}

Vec finite_difference_column_oracle(const FourierLoop& f, int grid, int N) {
  if (grid % 4 != 0) {
    throw std::invalid_argument("finite_difference_column_oracle: grid must be divisible by 4");
  }
  const int m = grid;
  const double step = kTwoPi / m;
  const FourierLoop df = derivative_loop(f);
  std::vector<cplx> fval(m + 1), dfval(m + 1);
  for (int j = 0; j <= m; ++j) {
    fval[j] = f.evaluate(j * step);
    dfval[j] = df.evaluate(j * step);
  }
  const std::vector<double> w = boole_weights(m, step);
  // (delta f) 1 at the nodes, then its modes; Boole weights on both axes make
  // this an independent scheme against the Simpson matrix assembly
  Vec applied(m + 1);
  for (int p = 0; p <= m; ++p) {
    cplx acc{0.0, 0.0};
    for (int q = 0; q <= m; ++q) {
      acc += w[q] * (p == q ? dfval[p] : (fval[p] - fval[q]) / ((p - q) * step));
    }
    applied(p) = acc / kTwoPi;
  }
  Vec out(2 * N + 1);
  for (int mm = -N; mm <= N; ++mm) {
    cplx acc{0.0, 0.0};
    for (int p = 0; p <= m; ++p) acc += w[p] * std::polar(1.0, -mm * p * step) * applied(p);
    out(mm + N) = acc / kTwoPi;
  }
  return out;
}

double quasiclassical_check(const FourierLoop& f, int grid) {
  const FourierLoop df = derivative_loop(f);
  const double eps0 = kTwoPi / grid;
  double worst = 0.0;
  const int samples = std::min(grid, 512);
  for (int j = 0; j < samples; ++j) {
    const double phi = kTwoPi * j / samples;
    // kernel K(phi, phi+eps) (f(phi) - f(phi+eps)) along three dyadic eps,
    // Richardson-extrapolated to eps -> 0 (kills the eps and eps^2 terms)
    cplx e[3];
    for (int level = 0; level < 3; ++level) {
      const double eps = eps0 / static_cast<double>(1 << level);
      const cplx kernel{1.0, 1.0 / std::tan(-0.5 * eps)};
      e[level] = kernel * (f.evaluate(phi) - f.evaluate(phi + eps));
    }
    const cplx extrap = (e[0] - 6.0 * e[1] + 8.0 * e[2]) / 3.0;
    const cplx limit = 2.0 * kI * df.evaluate(phi);
    worst = std::max(worst, std::abs(extrap - limit));
  }
  return worst;
}

int matrix_rank(const Mat& m, double threshold) {
  Eigen::JacobiSVD<Mat> svd(m);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > threshold) ++rank;
  }
  return rank;
}

}  // namespace utq
