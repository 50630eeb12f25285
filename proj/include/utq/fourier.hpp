#pragma once

#include <utility>
#include <vector>

#include "utq/rng.hpp"
#include "utq/types.hpp"

namespace utq {

/// Truncated mode set: all k with 0 < |k| <= N, plus k = 0 when
/// include_zero is set (needed only by the L^2-level operators).
struct ModeSpec {
  int N = 1;
  bool include_zero = false;

  friend bool operator==(const ModeSpec&, const ModeSpec&) = default;
  int dim() const { return include_zero ? 2 * N + 1 : 2 * N; }
};

/// Finitely supported Fourier series f(e^{i theta}) = sum_k f_k e^{i k theta}.
/// Coefficients are stored densely over -N..N; the k = 0 slot stays zero
/// unless the spec carries it.  A loop flagged `real` keeps f_{-k} = conj(f_k)
/// by construction: set() writes both slots.
class FourierLoop {
 public:
  FourierLoop(ModeSpec spec, bool real);

  static FourierLoop zero(ModeSpec spec, bool real = true) { return FourierLoop(spec, real); }

  /// Random real loop supported on 0 < |k| <= band, coefficients ~ N(0,1).
  static FourierLoop random_real(ModeSpec spec, int band, Rng& rng);

  const ModeSpec& spec() const { return spec_; }
  bool is_real() const { return real_; }

  cplx coeff(int k) const;
  /// Sets f_k (and f_{-k} = conj(f_k) when the loop is real).
  void set(int k, cplx value);

  /// Pointwise value sum_k f_k e^{i k theta}.
  cplx evaluate(double theta) const;

  /// Samples on the equispaced grid theta_j = 2 pi j / m.
  std::vector<cplx> sample_grid(int m) const;

  FourierLoop conjugated() const;
  int band() const;  ///< largest |k| with f_k != 0 (0 for the zero loop)

  FourierLoop& operator+=(const FourierLoop& other);
  FourierLoop& operator*=(cplx scale);

 private:
  ModeSpec spec_;
  bool real_;
  std::vector<cplx> c_;  // index k + N
};

/// Sobolev 1/2-norm sqrt( sum_{k != 0} |k| |f_k|^2 ).
double h_half_norm(const FourierLoop& f);

/// omega(xi, eta) = 2 Im sum_{k>0} k xi_k conj(eta_k), for real loops on the
/// same spec.  Throws on spec mismatch or non-real input.
double symplectic_form(const FourierLoop& xi, const FourierLoop& eta);

/// Complex-bilinear extension of omega to the complexification:
/// omega(xi, eta) = -i sum_{k>0} k (xi_k eta_{-k} - xi_{-k} eta_k).
/// Restricts to symplectic_form on real loops.
cplx symplectic_form_complex(const FourierLoop& xi, const FourierLoop& eta);

/// (J0 f)_k = -i f_k for k > 0, +i f_k for k < 0.
FourierLoop apply_J0(const FourierLoop& f);

/// g0(xi, eta) = 2 Re sum_{k>0} k xi_k conj(eta_k)  (= omega(xi, J0 eta)).
double kahler_metric(const FourierLoop& xi, const FourierLoop& eta);

/// <xi, eta> = sum_{k != 0} |k| xi_k conj(eta_k); sesquilinear in eta.
cplx hermitian_product(const FourierLoop& xi, const FourierLoop& eta);

/// Splits into the k > 0 and k < 0 parts; both returned as non-real loops.
std::pair<FourierLoop, FourierLoop> split_W(const FourierLoop& f);

}  // namespace utq
