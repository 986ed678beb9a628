#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hbst/workload.hpp"

namespace hbst {

enum class Structure : std::uint8_t { kHbst, kNaiveBst };

std::string_view structure_name(Structure s);
std::optional<Structure> parse_structure(std::string_view name);

/// One trial: build from generate(workload), then search every key once.
/// Comparisons count visited nodes during the search phase only.
struct BenchRecord {
  Structure structure = Structure::kHbst;
  WorkloadSpec workload;
  int height = -1;
  std::optional<double> avg_depth;
  std::uint64_t comparisons_total = 0;
  double comparisons_per_search = 0.0;
  std::uint64_t build_ns = 0;
  std::uint64_t search_ns = 0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;

  /// Equality ignoring wall-clock fields.
  bool same_measurements(const BenchRecord& other) const;
};

BenchRecord run_trial(Structure structure, const WorkloadSpec& spec);

struct TrialError {
  std::size_t index;  // position in the spec-major trial order
  Structure structure;
  WorkloadSpec workload;
  std::string message;
};

struct SweepResult {
  std::vector<BenchRecord> records;  // successful trials in trial order
  std::vector<TrialError> errors;
};

/// Every (spec, structure) pair, spec-major. Trials are independent; with
/// threads > 1 they run concurrently but results keep trial order. A failing
/// trial is reported in `errors` and the sweep continues.
SweepResult sweep(std::span<const WorkloadSpec> specs, std::span<const Structure> structures,
                  unsigned threads = 1);

enum class ReportFormat : std::uint8_t { kCsv, kJson };

inline constexpr std::string_view kCsvHeader =
    "structure,workload,bits,n,seed,height,avg_depth,comparisons_total,"
    "comparisons_per_search,build_ns,search_ns";

/// CSV (header plus one row per record; empty avg_depth when undefined) or a
/// JSON array of objects with the same field names plus "base".
std::string emit_report(std::span<const BenchRecord> records, ReportFormat format);

/// Inverse of emit_report(..., kJson). Throws std::runtime_error on bad input.
std::vector<BenchRecord> parse_json_report(std::string_view text);

}  // namespace hbst
