#include "utq/fourier.hpp"

#include <cmath>
#include <stdexcept>

namespace utq {

namespace {

void require_same_spec(const FourierLoop& a, const FourierLoop& b) {
  if (!(a.spec() == b.spec())) {
    throw std::invalid_argument("fourier: loops live on different ModeSpecs");
  }
}

void require_real(const FourierLoop& f, const char* op) {
  if (!f.is_real()) {
    throw std::invalid_argument(std::string(op) + ": loop must be real");
  }
}

}  // namespace

FourierLoop::FourierLoop(ModeSpec spec, bool real) : spec_(spec), real_(real) {
  if (spec.N < 1) throw std::invalid_argument("ModeSpec: N must be >= 1");
  c_.assign(2 * spec.N + 1, cplx{0.0, 0.0});
}

FourierLoop FourierLoop::random_real(ModeSpec spec, int band, Rng& rng) {
  if (band < 1 || band > spec.N) {
    throw std::invalid_argument("random_real: band out of range");
  }
  FourierLoop f(spec, true);
  for (int k = 1; k <= band; ++k) f.set(k, rng.complex_normal());
  return f;
}

cplx FourierLoop::coeff(int k) const {
  if (k < -spec_.N || k > spec_.N) return {0.0, 0.0};
  return c_[k + spec_.N];
}

void FourierLoop::set(int k, cplx value) {
  if (k < -spec_.N || k > spec_.N) {
    throw std::out_of_range("FourierLoop::set: mode outside spec");
  }
  if (k == 0) {
    if (!spec_.include_zero) {
      throw std::invalid_argument("FourierLoop::set: spec excludes the zero mode");
    }
    if (real_ && std::abs(value.imag()) != 0.0) {
      throw std::invalid_argument("FourierLoop::set: real loop needs real f_0");
    }
    c_[spec_.N] = value;
    return;
  }
  c_[k + spec_.N] = value;
  if (real_) c_[-k + spec_.N] = std::conj(value);
}

cplx FourierLoop::evaluate(double theta) const {
  // Horner in e^{i theta} over the two half-spectra.
  const cplx z = std::polar(1.0, theta);
  const cplx zbar = std::conj(z);
  cplx plus{0.0, 0.0}, minus{0.0, 0.0};
  for (int k = spec_.N; k >= 1; --k) {
    plus = plus * z + coeff(k);
    minus = minus * zbar + coeff(-k);
  }
  return plus * z + minus * zbar + coeff(0);
}

std::vector<cplx> FourierLoop::sample_grid(int m) const {
  std::vector<cplx> out(m);
  for (int j = 0; j < m; ++j) out[j] = evaluate(kTwoPi * j / m);
  return out;
}

FourierLoop FourierLoop::conjugated() const {
  FourierLoop g(spec_, real_);
  for (int k = -spec_.N; k <= spec_.N; ++k) {
    g.c_[k + spec_.N] = std::conj(c_[-k + spec_.N]);
  }
  return g;
}

int FourierLoop::band() const {
  for (int k = spec_.N; k >= 1; --k) {
    if (coeff(k) != cplx{0.0, 0.0} || coeff(-k) != cplx{0.0, 0.0}) return k;
  }
  return 0;
}

FourierLoop& FourierLoop::operator+=(const FourierLoop& other) {
  require_same_spec(*this, other);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
  real_ = real_ && other.real_;
  return *this;
}

FourierLoop& FourierLoop::operator*=(cplx scale) {
  for (auto& v : c_) v *= scale;
  if (scale.imag() != 0.0) real_ = false;
  return *this;
}

double h_half_norm(const FourierLoop& f) {
  double s = 0.0;
  for (int k = 1; k <= f.spec().N; ++k) {
    s += k * (std::norm(f.coeff(k)) + std::norm(f.coeff(-k)));
  }
  return std::sqrt(s);
}

double symplectic_form(const FourierLoop& xi, const FourierLoop& eta) {
  require_same_spec(xi, eta);
  require_real(xi, "symplectic_form");
  require_real(eta, "symplectic_form");
  double s = 0.0;
  for (int k = 1; k <= xi.spec().N; ++k) {
    s += k * std::imag(xi.coeff(k) * std::conj(eta.coeff(k)));
  }
  return 2.0 * s;
}

cplx symplectic_form_complex(const FourierLoop& xi, const FourierLoop& eta) {
  require_same_spec(xi, eta);
  cplx s{0.0, 0.0};
  for (int k = 1; k <= xi.spec().N; ++k) {
    s += static_cast<double>(k) *
         (xi.coeff(k) * eta.coeff(-k) - xi.coeff(-k) * eta.coeff(k));
  }
  return -kI * s;
}

FourierLoop apply_J0(const FourierLoop& f) {
  // J0 of a real loop is real: (J0 f)_{-k} = i f_{-k} = conj(-i f_k).
  FourierLoop g(f.spec(), f.is_real());
  for (int k = 1; k <= f.spec().N; ++k) {
    g.set(k, -kI * f.coeff(k));
    if (!f.is_real()) g.set(-k, kI * f.coeff(-k));
  }
  return g;
}

double kahler_metric(const FourierLoop& xi, const FourierLoop& eta) {
  require_same_spec(xi, eta);
  double s = 0.0;
  for (int k = 1; k <= xi.spec().N; ++k) {
    s += k * std::real(xi.coeff(k) * std::conj(eta.coeff(k)));
  }
  return 2.0 * s;
}

cplx hermitian_product(const FourierLoop& xi, const FourierLoop& eta) {
  require_same_spec(xi, eta);
  cplx s{0.0, 0.0};
  for (int k = 1; k <= xi.spec().N; ++k) {
    s += static_cast<double>(k) * (xi.coeff(k) * std::conj(eta.coeff(k)) +
                                   xi.coeff(-k) * std::conj(eta.coeff(-k)));
  }
  return s;
}

std::pair<FourierLoop, FourierLoop> split_W(const FourierLoop& f) {
  FourierLoop plus(f.spec(), false), minus(f.spec(), false);
  for (int k = 1; k <= f.spec().N; ++k) {
    plus.set(k, f.coeff(k));
    minus.set(-k, f.coeff(-k));
  }
  return {plus, minus};
}

}  // namespace utq
