#include <doctest.h>

#include "utq/fourier.hpp"
#include "utq/json_io.hpp"
#include "utq/rng.hpp"

using namespace utq;

namespace {

// independent summation oracle for the half norm
double half_norm_sq_oracle(const FourierLoop& f) {
  double s = 0.0;
  for (int k = -f.spec().N; k <= f.spec().N; ++k) {
    if (k == 0) continue;
    s += std::abs(k) * std::norm(f.coeff(k));
  }
  return s;
}

}  // namespace

TEST_CASE("half norm: zero, single mode, 1/k tail") {
  const ModeSpec spec{8, false};
  CHECK(h_half_norm(FourierLoop::zero(spec)) == 0.0);

  FourierLoop f(spec, true);
  f.set(1, {1.0, 0.0});
  CHECK(h_half_norm(f) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

  FourierLoop g(spec, true);
  for (int k = 1; k <= 3; ++k) g.set(k, {1.0 / k, 0.0});
  const double expected_sq = half_norm_sq_oracle(g);
  CHECK(expected_sq == doctest::Approx(11.0 / 3.0).epsilon(1e-14));
  CHECK(h_half_norm(g) * h_half_norm(g) == doctest::Approx(expected_sq).epsilon(1e-14));
}

TEST_CASE("symplectic form: hand value, antisymmetry, bilinear consistency") {
  const ModeSpec spec{4, false};
  FourierLoop xi(spec, true), eta(spec, true);
  xi.set(1, {1.0, 0.0});
  eta.set(1, {0.0, 1.0});
  CHECK(symplectic_form(xi, eta) == doctest::Approx(-2.0).epsilon(1e-15));

  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    const FourierLoop a = FourierLoop::random_real(spec, 4, rng);
    const FourierLoop b = FourierLoop::random_real(spec, 4, rng);
    CHECK(symplectic_form(a, a) == 0.0);
    CHECK(symplectic_form(a, b) == -symplectic_form(b, a));
    // the complex-bilinear extension restricts to the real form
    CHECK(symplectic_form_complex(a, b).real() ==
          doctest::Approx(symplectic_form(a, b)).epsilon(1e-12));
    CHECK(std::abs(symplectic_form_complex(a, b).imag()) < 1e-12);
  }
}

TEST_CASE("symplectic form rejects mismatched specs and complex loops") {
  FourierLoop a(ModeSpec{4, false}, true);
  FourierLoop b(ModeSpec{5, false}, true);
  CHECK_THROWS_AS(symplectic_form(a, b), std::invalid_argument);
  FourierLoop c(ModeSpec{4, false}, false);
  CHECK_THROWS_AS(symplectic_form(a, c), std::invalid_argument);
}

TEST_CASE("J0 is a complex structure compatible with omega") {
  const ModeSpec spec{6, false};
  CHECK(h_half_norm(apply_J0(FourierLoop::zero(spec))) == 0.0);

  FourierLoop f(spec, true);
  f.set(1, {1.0, 0.0});
  CHECK(apply_J0(f).coeff(1) == cplx{0.0, -1.0});

  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const FourierLoop a = FourierLoop::random_real(spec, 6, rng);
    const FourierLoop b = FourierLoop::random_real(spec, 6, rng);
    const FourierLoop jja = apply_J0(apply_J0(a));
    for (int k = -6; k <= 6; ++k) {
      if (k == 0) continue;
      CHECK(jja.coeff(k) == -a.coeff(k));  // exact sign flips
    }
    CHECK(kahler_metric(a, b) == doctest::Approx(symplectic_form(a, apply_J0(b))).epsilon(1e-14));
    CHECK(symplectic_form(apply_J0(a), apply_J0(b)) ==
          doctest::Approx(symplectic_form(a, b)).epsilon(1e-14));
  }
}

TEST_CASE("kahler metric and hermitian product against the norm") {
  const ModeSpec spec{6, false};
  FourierLoop xi(spec, true);
  xi.set(1, {1.0, 0.0});
  CHECK(kahler_metric(xi, xi) == doctest::Approx(2.0).epsilon(1e-15));

  Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    const FourierLoop a = FourierLoop::random_real(spec, 6, rng);
    const cplx self = hermitian_product(a, a);
    CHECK(self.imag() == 0.0);
    CHECK(self.real() == doctest::Approx(h_half_norm(a) * h_half_norm(a)).epsilon(1e-13));
    CHECK(self.real() > 0.0);
    const FourierLoop b = FourierLoop::random_real(spec, 6, rng);
    CHECK(hermitian_product(a, b) == std::conj(hermitian_product(b, a)));
  }
}

TEST_CASE("splitting into W+ and W-") {
  const ModeSpec spec{5, false};
  FourierLoop f(spec, true);
  f.set(1, {1.0, 0.0});
  auto [plus, minus] = split_W(f);
  CHECK(plus.coeff(1) == cplx{1.0, 0.0});
  CHECK(plus.coeff(-1) == cplx{0.0, 0.0});
  CHECK(minus.coeff(-1) == cplx{1.0, 0.0});

  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    FourierLoop a = FourierLoop::random_real(spec, 5, rng);
    auto [p, m] = split_W(a);
    // isotropy of W+ and orthogonality of the splitting
    FourierLoop b = FourierLoop::random_real(spec, 5, rng);
    auto [pb, mb] = split_W(b);
    CHECK(std::abs(symplectic_form_complex(p, pb)) == 0.0);
    CHECK(std::abs(symplectic_form_complex(m, mb)) == 0.0);
    CHECK(std::abs(hermitian_product(p, mb)) == 0.0);
    // sum reconstructs
    FourierLoop sum = p;
    sum += m;
    for (int k = -5; k <= 5; ++k) {
      if (k == 0) continue;
      CHECK(sum.coeff(k) == a.coeff(k));
    }
  }
}

TEST_CASE("loop json round trip") {
  Rng rng(23);
  FourierLoop f = FourierLoop::random_real(ModeSpec{6, false}, 4, rng);
  const FourierLoop g = loop_from_json(loop_to_json(f));
  CHECK(g.spec() == f.spec());
  CHECK(g.is_real() == f.is_real());
  for (int k = -6; k <= 6; ++k) {
    if (k == 0) continue;
    CHECK(g.coeff(k) == f.coeff(k));
  }

  FourierLoop h(ModeSpec{3, true}, true);
  h.set(0, {0.5, 0.0});
  h.set(2, {1.0, -2.0});
  const FourierLoop h2 = loop_from_json(loop_to_json(h));
  CHECK(h2.spec().include_zero);
  CHECK(h2.coeff(0) == h.coeff(0));
  CHECK(h2.coeff(-2) == std::conj(h.coeff(2)));
}

TEST_CASE("zero-mode slot guarded by the spec") {
  FourierLoop f(ModeSpec{3, false}, true);
  CHECK_THROWS_AS(f.set(0, {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(f.set(4, {1.0, 0.0}), std::out_of_range);
}
