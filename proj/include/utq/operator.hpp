#pragma once

#include <string>

#include "utq/fourier.hpp"
#include "utq/types.hpp"

namespace utq {

/// Dense complex matrix over the truncated mode set of a ModeSpec.
/// Column k holds the coefficients of the image of z^k; modes are ordered
/// [-N..-1, 1..N] (plus a k = 0 slot in the middle when the spec carries it).
struct OneParticleOperator {
  ModeSpec spec;
  Mat m;
  std::string label;
  /// True when entry(-r,-c) = conj(entry(r,c)) holds by construction, i.e.
  /// the operator is the complexification of a real one.
  bool reality = false;

  static OneParticleOperator zero(ModeSpec spec, std::string label = {});
  static OneParticleOperator identity(ModeSpec spec);

  int dim() const { return spec.dim(); }
  int index_of(int k) const;   ///< throws on k outside the mode set
  int mode_at(int idx) const;

  cplx entry(int row_mode, int col_mode) const { return m(index_of(row_mode), index_of(col_mode)); }
  cplx& entry(int row_mode, int col_mode) { return m(index_of(row_mode), index_of(col_mode)); }

  /// Matrix-vector action on a loop over the same spec.
  FourierLoop apply(const FourierLoop& f) const;
};

}  // namespace utq
