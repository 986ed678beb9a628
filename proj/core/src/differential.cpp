#include "hbst/differential.hpp"

#include <algorithm>
#include <sstream>

#include "hbst/oracle_set.hpp"
#include "hbst/tree.hpp"
#include "hbst/validate.hpp"
#include "hbst/workload.hpp"

namespace hbst {

namespace {

constexpr std::size_t kMaxRecordedFailures = 10;

}  // namespace

DifferentialSummary run_differential(const DifferentialConfig& config) {
  DifferentialSummary sum;
  Tree tree(config.bits);
  OracleSet oracle;
  SplitMix64 rng(config.seed);
  std::vector<Key> pool;
  const unsigned bound = config.bits.bits() + 1;

  auto fail = [&](std::uint64_t& counter, std::uint64_t step, const std::string& what) {
    ++counter;
    if (sum.first_failures.size() < kMaxRecordedFailures) {
      sum.first_failures.push_back("op " + std::to_string(step) + ": " + what);
    }
  };
  auto checkpoint = [&](std::uint64_t step) {
    ++sum.checkpoints;
    const ValidationReport report = validate(tree);
    if (!report.valid()) fail(sum.failed_checkpoints, step, format_report(report));
  };

  for (std::uint64_t step = 0; step < config.ops; ++step) {
    const Key key = (!pool.empty() && rng.below(2) == 0) ? pool[rng.below(pool.size())]
                                                         : rng.bits(config.bits.bits());
    const std::uint64_t roll = rng.below(100);
    const std::size_t nodes_before = tree.node_count();
    const std::string k = std::to_string(key);

    if (roll < 40) {
      ++sum.inserts;
      const InsertOutcome out = tree.insert(key);
      const bool added = oracle.apply(OracleSet::Op::kInsert, key);
      if (out.inserted() != added) fail(sum.mismatches, step, "insert " + k + " disagrees");
      if (out.visited > bound || out.depth >= bound) {
        fail(sum.invariant_failures, step, "insert " + k + " exceeded depth bound");
      }
      if (tree.node_count() > nodes_before + 1) {
        fail(sum.invariant_failures, step, "insert " + k + " added more than one node");
      }
      if (out.inserted()) pool.push_back(key);
    } else if (roll < 70) {
      ++sum.searches;
      const SearchOutcome out = tree.search(key);
      if (out.found != oracle.apply(OracleSet::Op::kContains, key)) {
        fail(sum.mismatches, step, "search " + k + " disagrees");
      }
      if (out.visited > bound) fail(sum.invariant_failures, step, "search " + k + " too deep");
    } else if (roll < 85) {
      ++sum.lazy_deletes;
      const bool deleted = tree.lazy_delete(key) == DeleteOutcome::kDeleted;
      if (deleted != oracle.apply(OracleSet::Op::kDelete, key)) {
        fail(sum.mismatches, step, "lazy_delete " + k + " disagrees");
      }
      if (tree.node_count() != nodes_before) {
        fail(sum.invariant_failures, step, "lazy_delete " + k + " changed node count");
      }
    } else {
      ++sum.hard_deletes;
      const bool deleted = tree.hard_delete(key) == DeleteOutcome::kDeleted;
      if (deleted != oracle.apply(OracleSet::Op::kDelete, key)) {
        fail(sum.mismatches, step, "hard_delete " + k + " disagrees");
      }
      if (tree.node_count() != nodes_before - (deleted ? 1 : 0)) {
        fail(sum.invariant_failures, step, "hard_delete " + k + " node count off");
      }
    }
    ++sum.ops;
    if (tree.size() != oracle.size()) {
      fail(sum.mismatches, step, "live count " + std::to_string(tree.size()) +
                                     " vs oracle " + std::to_string(oracle.size()));
    }
    if (config.checkpoint_interval != 0 && (step + 1) % config.checkpoint_interval == 0) {
      checkpoint(step);
    }
  }

  checkpoint(sum.ops);
  std::vector<Key> expected(oracle.members().begin(), oracle.members().end());
  std::sort(expected.begin(), expected.end());
  if (tree.collect_keys(KeyOrder::kSorted) != expected) {
    fail(sum.mismatches, sum.ops, "final key set differs from oracle");
  }
  sum.final_live = tree.size();
  sum.final_nodes = tree.node_count();
  return sum;
}

std::string format_summary(const DifferentialSummary& s) {
  std::ostringstream out;
  out << "ops: " << s.ops << "\n"
      << "inserts: " << s.inserts << "\n"
      << "searches: " << s.searches << "\n"
      << "lazy_deletes: " << s.lazy_deletes << "\n"
      << "hard_deletes: " << s.hard_deletes << "\n"
      << "checkpoints: " << s.checkpoints << "\n"
      << "failed_checkpoints: " << s.failed_checkpoints << "\n"
      << "invariant_failures: " << s.invariant_failures << "\n"
      << "final_live: " << s.final_live << "\n"
      << "final_nodes: " << s.final_nodes << "\n"
      << "mismatches: " << s.mismatches << "\n";
  for (const std::string& f : s.first_failures) out << "  " << f << "\n";
  return out.str();
}

}  // namespace hbst
