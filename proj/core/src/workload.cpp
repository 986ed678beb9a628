#include "hbst/workload.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace hbst {

std::string_view workload_name(WorkloadKind kind) {
  switch (kind) {
    case WorkloadKind::kAscending: return "ascending";
    case WorkloadKind::kDescending: return "descending";
    case WorkloadKind::kRandom: return "random";
    case WorkloadKind::kClustered: return "clustered";
  }
  return "unknown";
}

std::optional<WorkloadKind> parse_workload_kind(std::string_view name) {
  for (WorkloadKind k : {WorkloadKind::kAscending, WorkloadKind::kDescending,
                         WorkloadKind::kRandom, WorkloadKind::kClustered}) {
    if (workload_name(k) == name) return k;
  }
  return std::nullopt;
}

void check_workload(const WorkloadSpec& spec) {
  using Wide = unsigned __int128;
  const Wide space = Wide{1} << spec.bits.bits();
  if (static_cast<Wide>(spec.n) > space) {
    throw WorkloadError("n = " + std::to_string(spec.n) + " exceeds key space 2^" +
                        std::to_string(spec.bits.bits()));
  }
  if (spec.kind == WorkloadKind::kClustered &&
      static_cast<Wide>(spec.base) + spec.n > space) {
    throw WorkloadError("clustered range base + n = " + std::to_string(spec.base) + " + " +
                        std::to_string(spec.n) + " exceeds key space 2^" +
                        std::to_string(spec.bits.bits()));
  }
}

std::vector<Key> generate(const WorkloadSpec& spec) {
  check_workload(spec);
  std::vector<Key> keys(spec.n);
  switch (spec.kind) {
    case WorkloadKind::kAscending:
      std::iota(keys.begin(), keys.end(), Key{0});
      break;
    case WorkloadKind::kDescending:
      std::iota(keys.rbegin(), keys.rend(), Key{0});
      break;
    case WorkloadKind::kClustered:
      std::iota(keys.begin(), keys.end(), spec.base);
      break;
    case WorkloadKind::kRandom: {
      SplitMix64 rng(spec.seed);
      std::unordered_set<Key> seen;
      seen.reserve(spec.n);
      std::size_t filled = 0;
      while (filled < keys.size()) {
        const Key k = rng.bits(spec.bits.bits());
        if (seen.insert(k).second) keys[filled++] = k;
      }
      break;
    }
  }
  return keys;
}

}  // namespace hbst
