#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hbst/key_space.hpp"

namespace hbst {

/// SplitMix64 (Steele, Lea, Flood 2014). Fixed so that seeded workloads
/// reproduce exactly on any platform and in any language port.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Top `bits` bits of the next output, i.e. uniform over [0, 2^bits).
  constexpr std::uint64_t bits(unsigned count) noexcept {
    return count >= 64 ? next() : next() >> (64 - count);
  }

  /// Uniform over [0, bound) by multiply-shift; bound must be nonzero.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

enum class WorkloadKind : std::uint8_t { kAscending, kDescending, kRandom, kClustered };

std::string_view workload_name(WorkloadKind kind);
std::optional<WorkloadKind> parse_workload_kind(std::string_view name);

struct WorkloadSpec {
  WorkloadKind kind = WorkloadKind::kAscending;
  std::uint64_t n = 0;
  KeyWidth bits{32};
  std::uint64_t seed = 0;
  Key base = 0;  // clustered only

  friend bool operator==(const WorkloadSpec&, const WorkloadSpec&) = default;
};

class WorkloadError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws WorkloadError when the spec's keys do not fit in [0, 2^bits).
void check_workload(const WorkloadSpec& spec);

/// Distinct keys, deterministic in the spec:
///   ascending  0, 1, ..., n-1
///   descending n-1, ..., 0
///   random     n distinct draws of SplitMix64(seed).bits(B), rejecting repeats
///   clustered  base, base+1, ..., base+n-1
std::vector<Key> generate(const WorkloadSpec& spec);

}  // namespace hbst
