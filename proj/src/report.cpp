#include "utq/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace utq {

std::string to_string(ExpectationSource s) {
  switch (s) {
    case ExpectationSource::kExactIdentity:
      return "exact-identity";
    case ExpectationSource::kClosedForm:
      return "closed-form";
    case ExpectationSource::kNumericalOracle:
      return "numerical-oracle";
  }
  return "unknown";
}

CheckRow CheckRow::defect(std::string name, double measured, double tolerance,
                          ExpectationSource source, std::string note) {
  CheckRow row;
  row.name = std::move(name);
  row.measured = measured;
  row.tolerance = tolerance;
  row.source = source;
  row.pass = std::isfinite(measured) && measured <= tolerance;
  row.note = std::move(note);
  return row;
}

CheckRow CheckRow::observation(std::string name, double measured, std::string note) {
  CheckRow row;
  row.name = std::move(name);
  row.measured = measured;
  row.tolerance = std::numeric_limits<double>::infinity();
  row.source = ExpectationSource::kNumericalOracle;
  row.pass = true;
  row.note = std::move(note);
  return row;
}

bool Report::pass() const {
  for (const auto& row : rows) {
    if (!row.pass) return false;
  }
  return true;
}

Json Report::to_json(bool include_timing) const {
  Json j;
  j["experiment"] = experiment;
  j["params"] = params;
  Json rows_json = Json::array();
  for (const auto& row : rows) {
    Json r;
    r["name"] = row.name;
    r["measured"] = row.measured;
    if (std::isfinite(row.tolerance)) {
      r["tolerance"] = row.tolerance;
    } else {
      r["tolerance"] = nullptr;  // observational row
    }
    r["source"] = to_string(row.source);
    r["pass"] = row.pass;
    if (!row.note.empty()) r["note"] = row.note;
    rows_json.push_back(r);
  }
  j["rows"] = rows_json;
  j["pass"] = pass();
  if (include_timing) j["wall_ms"] = wall_ms;
  return j;
}

std::string Report::summary_table() const {
  std::ostringstream out;
  out << experiment << (pass() ? "  [PASS]" : "  [FAIL]") << '\n';
  for (const auto& row : rows) {
    out << "  " << (row.pass ? "ok  " : "FAIL") << "  " << row.name << "  measured="
        << row.measured;
    if (std::isfinite(row.tolerance)) out << "  tol=" << row.tolerance;
    out << "  [" << to_string(row.source) << "]";
    if (!row.note.empty()) out << "  " << row.note;
    out << '\n';
  }
  return out.str();
}

}  // namespace utq
