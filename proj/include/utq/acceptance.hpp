#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

#include "utq/report.hpp"

namespace utq {

struct AcceptanceParams {
  std::uint64_t seed = 20240915;
  // one-particle scale
  int modes = 64;
  int grid = 4096;
  int hilbert_modes = 32;
  int hilbert_grid = 8192;
  // Fock scale
  int fock_modes = 3;
  int fock_degree = 24;
  int ccr_degree = 12;
  int cocycle_degree = 10;
  int dgamma_degree = 8;
  // sampling volumes
  int pair_trials = 100;
  int ba_samples = 10000;
};

/// Runs one numbered criterion (1..14); the tolerances are fixed in the
/// implementation, not configurable.
Report run_criterion(int id, const AcceptanceParams& p);

/// All criteria in order; prints one pass/fail line per criterion to `log`
/// when given.
std::vector<Report> run_acceptance(const AcceptanceParams& p, std::ostream* log = nullptr);

bool all_pass(const std::vector<Report>& reports);

}  // namespace utq
