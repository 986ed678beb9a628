#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hbst/key_space.hpp"

namespace hbst {

struct DifferentialConfig {
  std::uint64_t ops = 100000;
  KeyWidth bits{16};
  std::uint64_t seed = 0;
  std::uint64_t checkpoint_interval = 1000;
};

/// Outcome of running a Tree and an OracleSet in lockstep.
struct DifferentialSummary {
  std::uint64_t ops = 0;
  std::uint64_t inserts = 0;
  std::uint64_t searches = 0;
  std::uint64_t lazy_deletes = 0;
  std::uint64_t hard_deletes = 0;
  std::uint64_t mismatches = 0;         // outcome disagrees with the oracle
  std::uint64_t invariant_failures = 0;  // depth or node-count bound broken
  std::uint64_t checkpoints = 0;
  std::uint64_t failed_checkpoints = 0;  // validate() reported violations
  std::uint64_t final_live = 0;
  std::uint64_t final_nodes = 0;
  std::vector<std::string> first_failures;  // at most 10 descriptions

  bool ok() const noexcept {
    return mismatches == 0 && invariant_failures == 0 && failed_checkpoints == 0;
  }
};

/// Runs `ops` seeded operations (40% insert, 30% search, 15% lazy delete,
/// 15% hard delete). Half the keys are drawn from previously inserted ones,
/// half uniformly from [0, 2^bits). The tree is validated every
/// `checkpoint_interval` ops and once more at the end, where the full sorted
/// key list is also compared with the oracle.
DifferentialSummary run_differential(const DifferentialConfig& config);

std::string format_summary(const DifferentialSummary& summary);

}  // namespace hbst
