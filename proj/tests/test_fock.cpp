#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "utq/derivations.hpp"
#include "utq/fock.hpp"
#include "utq/fourier.hpp"
#include "utq/rng.hpp"

using namespace utq;

namespace {

Mat random_symmetric(int n, double radius, Rng& rng) {
  Mat g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  }
  Mat z = 0.5 * (g + g.transpose());
  Eigen::JacobiSVD<Mat> svd(z);
  return z * (radius / svd.singularValues()(0));
}

Mat random_square(int n, Rng& rng) {
  Mat g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  }
  return g;
}

}  // namespace

TEST_CASE("basis enumeration and lookup") {
  const auto basis = FockBasis::make({3, 4, 1.0});
  CHECK(basis->dim() == 35);  // C(4 + 3, 3)
  CHECK(basis->degree(0) == 0);
  CHECK(basis->exponents(0) == MultiIndex{0, 0, 0});
  for (int idx = 0; idx < basis->dim(); ++idx) {
    CHECK(basis->index_of(basis->exponents(idx)) == idx);
  }
  CHECK(basis->index_of({5, 0, 0}) == -1);
  CHECK(basis->index_of({-1, 1, 0}) == -1);
  CHECK_THROWS_AS(basis_state(basis, {3, 2, 0}), std::invalid_argument);
  CHECK(basis_state(basis, {2, 1, 1}).norm() == 1.0);
}

TEST_CASE("pre-build oracle: 1 mode, degree 3, explicit 4-dimensional matrices") {
  const auto basis = FockBasis::make({1, 3, 1.0});
  CHECK(basis->dim() == 4);
  Mat a = Mat::Zero(4, 4), astar = Mat::Zero(4, 4);
  for (int k = 1; k <= 3; ++k) {
    a(k - 1, k) = std::sqrt(static_cast<double>(k));      // a P_k = sqrt(k) P_{k-1}
    astar(k, k - 1) = std::sqrt(static_cast<double>(k));  // a* P_{k-1} = sqrt(k) P_k
  }
  CHECK((annihilation(1, basis).m - a).norm() == 0.0);
  CHECK((creation(1, basis).m - astar).norm() == 0.0);

  // Heisenberg scalar from the explicit matrices: x, y single-mode real loops
  const ModeSpec lspec{1, false};
  Rng rng(2);
  for (int t = 0; t < 5; ++t) {
    FourierLoop x(lspec, true), y(lspec, true);
    x.set(1, rng.complex_normal());
    y.set(1, rng.complex_normal());
    const cplx p = x.coeff(1), q = y.coeff(1);
    const Mat rx = p * astar - std::conj(p) * a;
    const Mat ry = q * astar - std::conj(q) * a;
    const Mat comm = rx * ry - ry * rx;
    const double w = symplectic_form(x, y);
    if (std::abs(w) < 1e-3) continue;
    // scalar on the interior (degrees 0 and 1)
    CHECK(std::abs(comm(0, 0) / w - kHeisenbergScalar) < 1e-13);
    CHECK(std::abs(comm(1, 1) / w - kHeisenbergScalar) < 1e-13);
    CHECK(std::abs(comm(1, 0)) < 1e-14);
    // the library operator agrees with the hand-built one
    const FockOperator r_lib = heisenberg_rep(wplus_coordinates(x, 1),
                                              wplus_coordinates(x, 1).conjugate(), basis);
    CHECK((r_lib.m - rx).norm() < 1e-14);
  }
}

TEST_CASE("orthonormality and the degree-2 permutation oracle") {
  const auto basis = FockBasis::make({3, 6, 1.0});
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const int idx = static_cast<int>(rng.uniform(0.0, basis->dim()));
    const int jdx = static_cast<int>(rng.uniform(0.0, basis->dim()));
    const FockState pi = basis_state(basis, basis->exponents(idx));
    const FockState pj = basis_state(basis, basis->exponents(jdx));
    CHECK(inner(pi, pj) == cplx{idx == jdx ? 1.0 : 0.0, 0.0});
  }

  // <z_a z_b, z_c z_d> = delta_ac delta_bd + delta_ad delta_bc via monomials:
  // the monomial x_a x_b is sqrt((e_a + e_b)!) P_{e_a + e_b}
  auto monomial2 = [&](int a, int b) {
    MultiIndex K(3, 0);
    K[a] += 1;
    K[b] += 1;
    FockState s = basis_state(basis, K);
    const double fact = (a == b) ? std::sqrt(2.0) : 1.0;
    s.c *= fact;
    return s;
  };
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        for (int d = 0; d < 3; ++d) {
          const double expected = (a == c && b == d ? 1.0 : 0.0) +
                                  (a == d && b == c ? 1.0 : 0.0);
          const cplx got = inner(monomial2(a, b), monomial2(c, d));
          CHECK(std::abs(got - expected) < 1e-14);
        }
      }
    }
  }
}

TEST_CASE("creation and annihilation: vacuum, adjoints, CCR") {
  const auto basis = FockBasis::make({3, 8, 1.0});
  const FockState vac = vacuum(basis);
  for (int n = 1; n <= 3; ++n) {
    CHECK(annihilation(n, basis).apply(vac).norm() == 0.0);
    CHECK((creation(n, basis).m - annihilation(n, basis).m.adjoint()).norm() == 0.0);
  }
  CHECK_THROWS_AS(creation(0, basis), std::out_of_range);
  CHECK_THROWS_AS(annihilation(4, basis), std::out_of_range);

  const int D = basis->config().max_degree;
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const FockOperator comm =
          annihilation(m, basis) * creation(n, basis) - creation(n, basis) * annihilation(m, basis);
      const cplx delta = (m == n) ? 1.0 : 0.0;
      for (int col = 0; col < basis->dim(); ++col) {
        if (basis->degree(col) > D - 2) continue;
        Vec v = comm.m.col(col);
        v(col) -= delta;
        CHECK(v.cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("heisenberg representation: vacuum image and commutator universality") {
  const auto basis = FockBasis::make({3, 10, 1.0});
  const ModeSpec lspec{3, false};
  Rng rng(5);

  // r(z) vacuum is the degree-1 state with the W+ coordinates of z
  FourierLoop z(lspec, true);
  z.set(1, {0.4, 0.1});
  z.set(3, {-0.2, 0.7});
  const Vec plus = wplus_coordinates(z, 3);
  const FockOperator r =
      heisenberg_rep(plus, Vec::Zero(3), basis);  // pure creation part
  const FockState image = r.apply(vacuum(basis));
  for (int n = 1; n <= 3; ++n) {
    MultiIndex K(3, 0);
    K[n - 1] = 1;
    CHECK(std::abs(image.c(basis->index_of(K)) - plus(n - 1)) < 1e-15);
  }

  cplx ref{0.0, 0.0};
  for (int t = 0; t < 50; ++t) {
    FourierLoop x(lspec, true), y(lspec, true);
    double w = 0.0;
    do {
      x = FourierLoop::random_real(lspec, 3, rng);
      y = FourierLoop::random_real(lspec, 3, rng);
      w = symplectic_form(x, y);
    } while (std::abs(w) < 0.5);
    const FockOperator rx =
        heisenberg_rep(wplus_coordinates(x, 3), wplus_coordinates(x, 3).conjugate(), basis);
    const FockOperator ry =
        heisenberg_rep(wplus_coordinates(y, 3), wplus_coordinates(y, 3).conjugate(), basis);
    const FockOperator comm = rx * ry - ry * rx;
    const cplx scalar = comm.m(0, 0) / w;
    if (t == 0) {
      ref = scalar;
      CHECK(std::abs(scalar - kHeisenbergScalar) < 1e-13);
    }
    CHECK(std::abs(scalar - ref) < 1e-12);
    CHECK(interior_defect_scalar(comm, comm.m(0, 0)) < 1e-12 * std::abs(w) + 1e-13);
  }

  // r(c) = lambda I and the bracket scales with lambda
  const auto basis2 = FockBasis::make({3, 10, 2.5});
  FourierLoop x(lspec, true), y(lspec, true);
  x.set(1, {1.0, 0.0});
  y.set(1, {0.0, 1.0});
  const FockOperator rx =
      heisenberg_rep(wplus_coordinates(x, 3), wplus_coordinates(x, 3).conjugate(), basis2);
  const FockOperator ry =
      heisenberg_rep(wplus_coordinates(y, 3), wplus_coordinates(y, 3).conjugate(), basis2);
  const cplx scalar = (rx * ry - ry * rx).m(0, 0) / symplectic_form(x, y);
  CHECK(std::abs(scalar - kHeisenbergScalar * 2.5) < 1e-12);
}

TEST_CASE("coherent states: vacuum case and 1-mode series oracle") {
  const auto basis1 = FockBasis::make({1, 24, 1.0});
  const FockState vac_state = coherent_state(Mat::Zero(1, 1), basis1);
  CHECK((vac_state.c - vacuum(basis1).c).norm() == 0.0);
  CHECK(coherent_inner(Mat::Zero(1, 1), Mat::Zero(1, 1), basis1).closed_form == cplx{1.0, 0.0});

  const double zeta = 0.3;
  Mat Z(1, 1);
  Z(0, 0) = zeta;
  // independent scalar series: sum_d (zeta^2/4)^d (2d)!/(d!)^2
  double series = 0.0, term = 1.0;
  for (int d = 0; 2 * d <= 24; ++d) {
    if (d > 0) term *= static_cast<double>(2 * d) * (2 * d - 1) / (static_cast<double>(d) * d);
    series += std::pow(zeta * zeta / 4.0, d) * term;
  }
  const CoherentInner ci = coherent_inner(Z, Z, basis1);
  CHECK(std::abs(ci.truncated - series) < 1e-13);
  CHECK(std::abs(ci.closed_form - 1.0 / std::sqrt(1.0 - zeta * zeta)) < 1e-14);
  CHECK(std::abs(ci.truncated - ci.closed_form) / std::abs(ci.closed_form) < 1e-8);

  Mat big(1, 1);
  big(0, 0) = 1.2;
  CHECK_THROWS_AS(coherent_state(big, basis1), std::invalid_argument);
  Mat outside_guard(1, 1);
  outside_guard(0, 0) = 0.8;
  CHECK_THROWS_AS(coherent_state(outside_guard, basis1), std::invalid_argument);
}

TEST_CASE("coherent determinant formula for 3 modes") {
  const auto basis = FockBasis::make({3, 24, 1.0});
  Rng rng(7);
  const Mat Z1 = random_symmetric(3, 0.3, rng);
  const Mat Z2 = random_symmetric(3, 0.3, rng);
  const CoherentInner ci = coherent_inner(Z1, Z2, basis);
  CHECK(std::abs(ci.truncated - ci.closed_form) / std::abs(ci.closed_form) < 1e-8);

  // normalized states have unit norm up to the same truncation error
  const FockState eps = normalized_coherent(Z1, basis);
  CHECK(std::abs(eps.norm() - 1.0) < 1e-8);
}

TEST_CASE("segal action: identity, stabilizer case, projective unitarity") {
  const int n = 3;
  const auto basis = FockBasis::make({n, 24, 1.0});
  Rng rng(9);
  const Mat Z = random_symmetric(n, 0.25, rng);

  const SegalAction triv = segal_action(SymplecticElement::identity(n), Z);
  CHECK(triv.phase == cplx{1.0, 0.0});
  CHECK((triv.target - Z).norm() < 1e-14);

  SymplecticElement U = SymplecticElement::identity(n);
  for (int i = 0; i < n; ++i) U.a(i, i) = std::polar(1.0, rng.uniform(0.0, kTwoPi));
  const SegalAction stab = segal_action(U, Mat::Zero(n, n));
  CHECK(std::abs(stab.phase - cplx{1.0, 0.0}) < 1e-14);
  CHECK(stab.target.norm() < 1e-14);

  for (int t = 0; t < 3; ++t) {
    const SymplecticElement A = random_symplectic(n, 40 + t, n, 0.1);
    const Mat Z1 = random_symmetric(n, 0.25, rng);
    const Mat Z2 = random_symmetric(n, 0.25, rng);
    const SegalAction u1 = segal_action(A, Z1);
    const SegalAction u2 = segal_action(A, Z2);
    CHECK(std::abs(std::abs(u1.phase) - 1.0) < 1e-13);
    const cplx before = inner(normalized_coherent(Z1, basis), normalized_coherent(Z2, basis));
    const cplx after = std::conj(u1.phase) * u2.phase *
                       inner(normalized_coherent(u1.target, basis),
                             normalized_coherent(u2.target, basis));
    CHECK(std::abs(std::abs(after) - std::abs(before)) < 1e-6);
  }
}

TEST_CASE("symplectic representation: diagonal alpha, adjoint pair, validation") {
  const int n = 3;
  const auto basis = FockBasis::make({n, 8, 1.0});
  SpAlgebraElement X{Mat::Zero(n, n), Mat::Zero(n, n), Mat::Zero(n, n)};
  CHECK(symplectic_rep(X, basis).m.norm() == 0.0);

  // alpha = diag(i theta_k): rho is diagonal with eigenvalue i sum theta_k K_k
  Rng rng(11);
  Vec theta(n);
  for (int i = 0; i < n; ++i) theta(i) = rng.normal();
  SpAlgebraElement D{Mat::Zero(n, n), Mat::Zero(n, n), Mat::Zero(n, n)};
  for (int i = 0; i < n; ++i) D.alpha(i, i) = kI * theta(i);
  const FockOperator rho = symplectic_rep(D, basis);
  for (int idx = 0; idx < basis->dim(); ++idx) {
    cplx expected{0.0, 0.0};
    for (int i = 0; i < n; ++i) expected += kI * theta(i) * static_cast<double>(basis->exponents(idx)[i]);
    CHECK(std::abs(rho.m(idx, idx) - expected) < 1e-13);
  }

  // M*_gamma is the adjoint of M_gamma
  const Mat gamma = random_symmetric(n, 1.0, rng);
  CHECK((quadratic_mult_adjoint(gamma, basis).m - quadratic_mult(gamma, basis).m.adjoint())
            .norm() == 0.0);

  // anti-self-adjointness on the real form (gamma = beta, alpha skew-Hermitian)
  SpAlgebraElement R;
  const Mat g = random_square(n, rng);
  R.alpha = 0.5 * (g - g.adjoint());
  R.beta = random_symmetric(n, 1.0, rng);
  R.gamma = R.beta;
  const FockOperator rr = symplectic_rep(R, basis);
  const FockOperator sum = rr + rr.adjoint();
  CHECK(interior_defect(sum, zero_operator(basis)) < 1e-13);

  SpAlgebraElement bad = X;
  bad.beta(0, 1) = 1.0;  // asymmetric
  CHECK_THROWS_AS(symplectic_rep(bad, basis), std::invalid_argument);
}

TEST_CASE("cocycle: vanishing, rank-one 1/2, random pairs vs trace formula") {
  const int n = 3;
  const auto basis = FockBasis::make({n, 10, 1.0});
  Rng rng(13);

  // alpha-only elements form a true representation
  SpAlgebraElement A1{random_square(n, rng), Mat::Zero(n, n), Mat::Zero(n, n)};
  SpAlgebraElement A2{random_square(n, rng), Mat::Zero(n, n), Mat::Zero(n, n)};
  const CocycleResult pure = cocycle_defect(A1, A2, basis);
  CHECK(std::abs(pure.operator_scalar) < 1e-12);
  CHECK(pure.closed_form == cplx{0.0, 0.0});

  SpAlgebraElement B1{Mat::Zero(n, n), Mat::Zero(n, n), Mat::Zero(n, n)};
  SpAlgebraElement B2 = B1;
  B1.beta(0, 0) = 1.0;
  B2.gamma(0, 0) = 1.0;
  const CocycleResult rank_one = cocycle_defect(B1, B2, basis);
  CHECK(std::abs(rank_one.operator_scalar - 0.5) < 1e-12);
  CHECK(rank_one.closed_form == cplx{0.5, 0.0});

  for (int t = 0; t < 5; ++t) {
    SpAlgebraElement X{random_square(n, rng), random_symmetric(n, 1.0, rng),
                       random_symmetric(n, 1.0, rng)};
    SpAlgebraElement Y{random_square(n, rng), random_symmetric(n, 1.0, rng),
                       random_symmetric(n, 1.0, rng)};
    const CocycleResult r = cocycle_defect(X, Y, basis);
    CHECK(std::abs(r.operator_scalar - r.closed_form) < 1e-10);
    CHECK(r.off_scalar_residual < 1e-9);
  }

  CHECK_THROWS_AS(cocycle_defect(A1, A2, FockBasis::make({n, 4, 1.0})), std::invalid_argument);
}

TEST_CASE("second quantization: number operator, vacuum, bracket, adjoint") {
  const int n = 3;
  const auto basis = FockBasis::make({n, 8, 1.0});
  const FockOperator num = second_quantize(Mat::Identity(n, n), basis);
  for (int idx = 0; idx < basis->dim(); ++idx) {
    CHECK(num.m(idx, idx) == cplx{static_cast<double>(basis->degree(idx)), 0.0});
  }

  Rng rng(15);
  for (int t = 0; t < 5; ++t) {
    const Mat X = random_square(n, rng);
    const Mat Y = random_square(n, rng);
    CHECK(second_quantize(X, basis).apply(vacuum(basis)).norm() == 0.0);
    const FockOperator lhs = second_quantize(X * Y - Y * X, basis);
    const FockOperator rhs =
        second_quantize(X, basis) * second_quantize(Y, basis) -
        second_quantize(Y, basis) * second_quantize(X, basis);
    CHECK(interior_defect(lhs, rhs) < 1e-12);
    CHECK((second_quantize(X, basis).m.adjoint() - second_quantize(X.adjoint().eval(), basis).m)
              .norm() < 1e-13);
  }
  CHECK_THROWS_AS(second_quantize(Mat::Zero(2, 2), basis), std::invalid_argument);
}

TEST_CASE("map-derived generators feed the derivation algebra") {
  const auto basis = FockBasis::make({3, 8, 1.0});
  const MapQuantumGenerators mob =
      map_quantum_generators(CircleMap::make_mobius({0.2, 0.1}, 0.5), 3, 8, 512);
  const MapQuantumGenerators zig =
      map_quantum_generators(CircleMap::make_zigzag(2.0), 3, 8, 512);

  // the literal W+ compression of a commutator with S vanishes identically
  CHECK(mob.wplus_compression.norm() == 0.0);
  CHECK(zig.wplus_compression.norm() == 0.0);
  // the Hankel block carries the content
  CHECK(zig.hankel_block.norm() > 1e-6);

  const Mat B1 = mob.hankel_block, B2 = zig.hankel_block;
  const FockOperator lhs = second_quantize(B1 * B2 - B2 * B1, basis);
  const FockOperator rhs =
      second_quantize(B1, basis) * second_quantize(B2, basis) -
      second_quantize(B2, basis) * second_quantize(B1, basis);
  CHECK(interior_defect(lhs, rhs) < 1e-12);

  // vacuum is killed by every derivation generator
  CHECK(map_derivation_operator(zig, basis).apply(vacuum(basis)).norm() == 0.0);
}
