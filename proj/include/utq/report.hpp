#pragma once

#include <string>
#include <vector>

#include "utq/json_io.hpp"

namespace utq {

/// Where an expected value comes from: an identity that holds exactly, a
/// closed-form evaluation, or an independent numerical oracle.
enum class ExpectationSource { kExactIdentity, kClosedForm, kNumericalOracle };

std::string to_string(ExpectationSource s);

struct CheckRow {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  ExpectationSource source = ExpectationSource::kExactIdentity;
  bool pass = false;
  std::string note;

  static CheckRow defect(std::string name, double measured, double tolerance,
                         ExpectationSource source, std::string note = {});
  /// A value that is reported without a pass/fail verdict.
  static CheckRow observation(std::string name, double measured, std::string note = {});
};

struct Report {
  std::string experiment;
  Json params;
  std::vector<CheckRow> rows;
  double wall_ms = 0.0;

  bool pass() const;
  /// Deterministic given the same rows; the timing field is emitted last so
  /// byte-level comparisons can drop it.
  Json to_json(bool include_timing = true) const;
  std::string summary_table() const;
};

}  // namespace utq
