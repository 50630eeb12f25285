#include <doctest.h>

#include <cmath>

#include "utq/composition.hpp"
#include "utq/fft.hpp"
#include "utq/rng.hpp"

using namespace utq;

namespace {

FourierLoop small_field() {
  FourierLoop v(ModeSpec{4, false}, true);
  v.set(1, {0.06, 0.04});
  v.set(2, {0.03, -0.02});
  v.set(3, {0.012, 0.008});
  v.set(4, {0.0, 0.006});
  return v;
}

}  // namespace

TEST_CASE("T_h guards") {
  const ModeSpec spec{8, false};
  CHECK_THROWS_AS(build_Th(CircleMap::identity(), spec, 16), std::invalid_argument);  // < 4N
  CHECK_THROWS_AS(build_Th(CircleMap::identity(), spec, 100), std::invalid_argument); // not 2^k
  CHECK_THROWS_AS(build_Th(CircleMap::identity(), ModeSpec{8, true}, 64), std::invalid_argument);
}

TEST_CASE("T_h of the identity and of rotations") {
  const ModeSpec spec{8, false};
  const OneParticleOperator tid = build_Th(CircleMap::identity(), spec, 128);
  CHECK((tid.m - Mat::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-14);

  const double phi = 0.83;
  const OneParticleOperator rot = build_Th(CircleMap::rotation(phi), spec, 128);
  // FFT oracle: shifting the variable multiplies mode k by e^{i k phi}
  for (int k = -8; k <= 8; ++k) {
    if (k == 0) continue;
    for (int m = -8; m <= 8; ++m) {
      if (m == 0) continue;
      const cplx expected = (m == k) ? std::polar(1.0, k * phi) : cplx{0.0, 0.0};
      CHECK(std::abs(rot.entry(m, k) - expected) < 1e-13);
    }
  }
}

TEST_CASE("T_h reality symmetry is exact and matches an independent FFT") {
  const CircleMap h = CircleMap::make_flow(small_field(), 1.0, 512);
  const ModeSpec spec{16, false};
  const OneParticleOperator T = build_Th(h, spec, 256);
  for (int k = 1; k <= 16; ++k) {
    for (int m = -16; m <= 16; ++m) {
      if (m == 0) continue;
      CHECK(T.entry(-m, -k) == std::conj(T.entry(m, k)));
    }
  }
  // column -3 recomputed from scratch agrees with the reflected fill
  const auto lifts = h.lift_grid(256);
  std::vector<cplx> samples(256);
  for (int j = 0; j < 256; ++j) samples[j] = std::polar(1.0, -3.0 * lifts[j]);
  const auto coeffs = grid_to_coeffs(samples, 16);
  for (int m = -16; m <= 16; ++m) {
    if (m == 0) continue;
    CHECK(std::abs(T.entry(m, -3) - coeffs[m + 16]) < 1e-14);
  }
}

TEST_CASE("symplectic invariance of T_h") {
  const ModeSpec spec{64, false};
  const OneParticleOperator tid = OneParticleOperator::identity(spec);
  CHECK(check_symplectic(tid, 10, 8, 1) == 0.0);

  const OneParticleOperator T = build_Th(CircleMap::make_flow(small_field(), 1.0), spec, 4096);
  CHECK(check_symplectic(T, 25, 8, 2) < 1e-6);

  OneParticleOperator twice = OneParticleOperator::identity(spec);
  twice.m *= 2.0;
  CHECK(check_symplectic(twice, 10, 8, 3) > 1.0);  // scaling breaks omega

  CHECK_THROWS_AS(check_symplectic(tid, 5, 63, 4), std::invalid_argument);
}

TEST_CASE("composition is anti-multiplicative on band-limited vectors") {
  const ModeSpec spec{48, false};
  const CircleMap h1 = CircleMap::make_flow(small_field(), 1.0, 512);
  const CircleMap h2 = CircleMap::make_mobius({0.2, 0.1}, 0.4);
  const OneParticleOperator T1 = build_Th(h1, spec, 2048);
  const OneParticleOperator T2 = build_Th(h2, spec, 2048);
  const OneParticleOperator T12 = build_Th(compose(h1, h2), spec, 2048);
  // T_{h1 o h2} xi = (xi o h1) o h2 = T_{h2} T_{h1} xi
  Rng rng(5);
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const FourierLoop xi = FourierLoop::random_real(spec, 6, rng);
    const FourierLoop lhs = T12.apply(xi);
    const FourierLoop rhs = T2.apply(T1.apply(xi));
    for (int k = 1; k <= 24; ++k) {
      worst = std::max(worst, std::abs(lhs.coeff(k) - rhs.coeff(k)));
    }
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("operator norm bound") {
  const ModeSpec spec{32, false};
  const CircleMap id = CircleMap::identity();
  const NormBoundCheck c0 = operator_norm_bound_check(id, build_Th(id, spec, 512));
  CHECK(c0.norm_est == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c0.bound == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  const CircleMap mob = CircleMap::make_mobius({0.4, 0.1}, 0.2);
  const NormBoundCheck cm = operator_norm_bound_check(mob, build_Th(mob, spec, 512));
  CHECK(cm.within(1e-6));

  CircleMap flow = CircleMap::make_flow(small_field(), 1.0, 512);
  const OneParticleOperator Tf = build_Th(flow, spec, 512);
  CHECK_THROWS_AS(operator_norm_bound_check(flow, Tf), std::invalid_argument);  // no hint
  flow.dilatation_hint = dilatation_from_derivative(flow);
  CHECK(operator_norm_bound_check(flow, Tf).within(1e-6));
}

TEST_CASE("blocks, relations, Siegel point") {
  const ModeSpec spec{16, false};
  const OneParticleOperator tid = build_Th(CircleMap::identity(), spec, 256);
  const BlockDecomposition bid = blocks(tid);
  CHECK((bid.a - Mat::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(bid.b.cwiseAbs().maxCoeff() < 1e-13);
  const SiegelPointResult zid = siegel_point_of(tid);
  CHECK(zid.Z.cwiseAbs().maxCoeff() < 1e-12);

  // Mobius maps keep W+: b vanishes, a is unitary on the interior band.
  // |a| must stay small at this truncation: column k of T carries the
  // coefficients of h(z)^k, whose mass peaks near m = (k-1)/|log|a||, and the
  // interior-band unitarity check needs that peak well inside the cutoff.
  const OneParticleOperator tm = build_Th(CircleMap::make_mobius({0.09, -0.08}, 0.9), spec, 4096);
  const BlockDecomposition bm = blocks(tm);
  CHECK(bm.b.norm() < 1e-8);
  CHECK((bm.a.adjoint() * bm.a - Mat::Identity(16, 16)).topLeftCorner(8, 8).norm() < 1e-8);
  CHECK(siegel_point_of(tm).Z.norm() < 1e-8);

  // smooth flow: relations on the interior band, Z in the disc, near-symmetric
  const OneParticleOperator tf =
      build_Th(CircleMap::make_flow(small_field(), 1.0, 512), ModeSpec{64, false}, 4096);
  CHECK(block_relations_defect(blocks(tf), 32) < 1e-6);
  const SiegelPointResult zf = siegel_point_of(tf);
  CHECK(zf.asymmetry < 1e-8);
  Eigen::SelfAdjointEigenSolver<Mat> es(
      Mat(Mat::Identity(64, 64) - zf.Z.conjugate() * zf.Z));
  CHECK(es.eigenvalues().minCoeff() > 0.0);
}

TEST_CASE("hs norm of b grows then stabilizes with the cutoff for smooth maps") {
  const CircleMap flow = CircleMap::make_flow(small_field(), 1.0, 512);
  std::vector<double> norms;
  for (int N : {16, 32, 64}) {
    norms.push_back(hs_norm_b(build_Th(flow, ModeSpec{N, false}, 1024)));
  }
  const double d1 = std::abs(norms[1] - norms[0]);
  const double d2 = std::abs(norms[2] - norms[1]);
  CHECK(d2 < d1);  // Cauchy-type convergence
  CHECK(norms[2] > 0.0);
}

TEST_CASE("singular a-block is reported") {
  OneParticleOperator op = OneParticleOperator::zero(ModeSpec{4, false});
  // a = 0: every W+ mode mapped to W-
  for (int k = 1; k <= 4; ++k) op.entry(-k, k) = 1.0;
  CHECK_THROWS_AS(siegel_point_of(op), std::runtime_error);
}
