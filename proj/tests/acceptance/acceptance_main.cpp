// Acceptance suite: runs every numbered criterion at the shipped desk-scale
// profile and prints one pass/fail line per criterion.  Checks are always on;
// the process exits non-zero if any criterion fails.

#include <iostream>

#include "utq/acceptance.hpp"

int main() {
  utq::AcceptanceParams params;  // shipped defaults
  const auto reports = utq::run_acceptance(params, &std::cout);
  double total_ms = 0.0;
  for (const auto& r : reports) total_ms += r.wall_ms;
  std::cout << "----\n"
            << (utq::all_pass(reports) ? "all criteria passed" : "FAILURES present") << "  ("
            << total_ms / 1000.0 << " s total)\n";
  for (const auto& r : reports) {
    if (!r.pass()) std::cout << '\n' << r.summary_table();
  }
  return utq::all_pass(reports) ? 0 : 1;
}
