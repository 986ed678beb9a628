// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hbst/hbst.hpp"
#include "support/reference_model.hpp"
#include "support/tree_helpers.hpp"

namespace {

using namespace hbst;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Verdict figure2_golden() {
  const auto t0 = Clock::now();
  const Tree tree = testing::ascending_tree(4, 16);
  const bool shape = testing::edges(tree) == testing::figure2_edges();
  const int height = tree.stats().height;
  const bool valid = validate(tree).valid();
  const double elapsed = seconds_since(t0);
  return {shape && height == 4 && valid && elapsed < 1.0,
          "edges " + std::string(shape ? "match" : "differ") + ", height " +
              std::to_string(height) + ", valid " + (valid ? "yes" : "no") + ", " +
              std::to_string(elapsed) + " s (limit 1 s)"};
}

Verdict figure1_golden() {
  const Tree tree = build_ideal_tree(KeyWidth(4));
  const bool shape = testing::edges(tree) == testing::figure1_edges();
  const bool root = tree.node(tree.root()).key == 8;
  return {shape && root, std::string("edges ") + (shape ? "match" : "differ") + ", root " +
                             std::to_string(tree.node(tree.root()).key)};
}

Verdict height_bound() {
  constexpr unsigned kBits = 16;
  constexpr std::uint64_t kN = 4096;
  constexpr std::uint64_t kTrials = 1000;
  const auto t0 = Clock::now();
  std::uint64_t within = 0;
  unsigned worst_height = 0;
  unsigned worst_visit = 0;
  for (std::uint64_t seed = 0; seed < kTrials; ++seed) {
    const auto keys = generate({WorkloadKind::kRandom, kN, KeyWidth(kBits), seed});
    Tree tree{KeyWidth(kBits)};
    for (Key k : keys) tree.insert(k);
    unsigned max_visit = 0;
    for (Key k : keys) max_visit = std::max(max_visit, tree.search(k).visited);
    const int h = tree.stats().height;
    worst_height = std::max(worst_height, static_cast<unsigned>(h));
    worst_visit = std::max(worst_visit, max_visit);
    if (h <= static_cast<int>(kBits) && max_visit <= kBits + 1) ++within;
  }
  const double elapsed = seconds_since(t0);
  return {within == kTrials && elapsed < 30.0,
          std::to_string(within) + "/" + std::to_string(kTrials) + " trials within bound, max depth " +
              std::to_string(worst_height) + " (<= 16), max visited " + std::to_string(worst_visit) +
              " (<= 17), " + std::to_string(elapsed) + " s (limit 30 s)"};
}

Verdict linear_contrast() {
  const BenchRecord naive =
      run_trial(Structure::kNaiveBst, {WorkloadKind::kAscending, 4096, KeyWidth(32)});
  const BenchRecord hbst =
      run_trial(Structure::kHbst, {WorkloadKind::kAscending, 4096, KeyWidth(12)});
  return {naive.height == 4095 && hbst.height == 12,
          "naive height " + std::to_string(naive.height) + " (want 4095), hbst B=12 height " +
              std::to_string(hbst.height) + " (want 12)"};
}

Verdict random_order_depth() {
  constexpr std::uint64_t kN = 100000;
  constexpr std::uint64_t kPermutations = 20;
  const double target = 1.386 * std::log2(static_cast<double>(kN));
  const auto t0 = Clock::now();
  double lo = 1e300, hi = 0;
  std::uint64_t within = 0;
  for (std::uint64_t seed = 1; seed <= kPermutations; ++seed) {
    NaiveBst bst;
    for (Key k : generate({WorkloadKind::kRandom, kN, KeyWidth(32), seed})) bst.insert(k);
    const double avg = *bst.stats().avg_depth;
    lo = std::min(lo, avg);
    hi = std::max(hi, avg);
    if (avg >= 0.8 * target && avg <= 1.1 * target) ++within;
  }
  const double elapsed = seconds_since(t0);
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%llu/%llu permutations in [%.3f, %.3f], observed avg depth %.3f..%.3f, %.2f s "
                "(limit 60 s)",
                static_cast<unsigned long long>(within),
                static_cast<unsigned long long>(kPermutations), 0.8 * target, 1.1 * target, lo, hi,
                elapsed);
  return {within == kPermutations && elapsed < 60.0, buf};
}

Verdict differential_oracle() {
  const DifferentialSummary s =
      run_differential({.ops = 100000, .bits = KeyWidth(16), .seed = 7, .checkpoint_interval = 1000});
  return {s.ok() && s.ops == 100000 && s.checkpoints >= 100,
          std::to_string(s.ops) + " ops, mismatches " + std::to_string(s.mismatches) +
              ", failed checkpoints " + std::to_string(s.failed_checkpoints) + "/" +
              std::to_string(s.checkpoints) + ", invariant failures " +
              std::to_string(s.invariant_failures)};
}

Verdict sparse_keyspace() {
  testing::ReferenceModel model(32);
  for (Key k = 0; k < 16; ++k) model.insert(k);
  const WorkloadSpec spec{WorkloadKind::kAscending, 16, KeyWidth(32)};
  const BenchRecord r = run_trial(Structure::kHbst, spec);
  const std::string csv = emit_report(std::vector<BenchRecord>{r}, ReportFormat::kCsv);
  const bool row = csv.find("\nhbst,ascending,32,16,0,15,") != std::string::npos;
  return {r.height == 15 && model.height() == 15 && row,
          "report height " + std::to_string(r.height) + ", reference simulation " +
              std::to_string(model.height()) + " (want 15), csv row " + (row ? "ok" : "wrong")};
}

Verdict serialization() {
  const Tree tree = testing::ascending_tree(4, 16);
  const std::string text = serialize(tree);
  const Tree back = deserialize(text);
  const bool identical = serialize(back) == text &&
                         testing::edges(back) == testing::figure2_edges() &&
                         back.stats().height == 4;

  nlohmann::json doc = nlohmann::json::parse(text);
  doc["nodes"][1]["key"] = 8;  // root's left child, frame [0,8)
  bool rejected = false;
  try {
    deserialize(doc.dump());
  } catch (const ValidationError&) {
    rejected = true;
  }
  return {identical && rejected, std::string("round trip ") + (identical ? "identical" : "differs") +
                                     ", corrupted dump " + (rejected ? "rejected" : "accepted")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"AC1 insertion of 0..15 (B=4) reproduces the published HBST", figure2_golden},
      {"AC2 ideal midpoint tree (B=4) reproduces the published shape", figure1_golden},
      {"AC3 random inserts (B=16, n=4096, 1000 trials) stay within depth B", height_bound},
      {"AC4 ascending 0..4095: naive height 4095, HBST (B=12) height 12", linear_contrast},
      {"AC5 naive BST random-order average depth near 1.386 log2 n", random_order_depth},
      {"AC6 differential oracle, 1e5 ops (B=16), zero mismatches", differential_oracle},
      {"AC7 sparse key space: ascending 0..15 (B=32) height 15", sparse_keyspace},
      {"AC8 tree document round trip and corrupted dump rejection", serialization},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v{false, "threw"};
    try {
      v = check();
    } catch (const std::exception& e) {
      v.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %s: %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
    if (!v.pass) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
