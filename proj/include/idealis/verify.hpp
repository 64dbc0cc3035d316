#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "idealis/ideal.hpp"

namespace idealis {

/// Sweep over strong quasi-n-partite families: every block-size tuple with
/// n in n_range and each m_i in m_range, capped at max_variables total.
struct SweepConfig {
  std::vector<std::size_t> n_range{2, 3};
  std::vector<std::size_t> m_range{1, 2, 3};
  unsigned long k_max_oracle = 6;
  std::vector<std::string> checks;  // subset of known_checks(); must be nonempty
  std::size_t max_variables = 9;
  bool adjacent_only = false;
  unsigned threads = 0;  // 0: IDEALIS_THREADS env var, else hardware
};

struct CheckResult {
  std::string instance;  // replayable spec, e.g. "blocks=(2,3)"
  std::string check;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::vector<CheckResult> results;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool all_passed() const { return failed == 0; }
};

/// structure, betti, invariants, cover, powers, star, tilde,
/// closedness-boundary.
const std::vector<std::string>& known_checks();

/// Runs the selected checks over the sweep.  Instances are independent and
/// may run on several threads; the report order is instance-stable.
/// Throws std::invalid_argument on an empty or unknown check list.
VerificationReport run_verification(const SweepConfig& config);

}  // namespace idealis
