#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hbst/key_space.hpp"
#include "hbst/tree.hpp"

namespace hbst {

/// Unbalanced binary search tree keyed on stored keys, with a counter of
/// key comparisons (one per visited node, three-way). Insert and search only.
class NaiveBst {
 public:
  enum class InsertResult : std::uint8_t { kInserted, kDuplicate };

  InsertResult insert(Key key);
  SearchOutcome search(Key key) const;

  /// height -1 when empty; avg_depth empty when empty.
  struct Stats {
    int height = -1;
    std::size_t node_count = 0;
    std::uint64_t depth_sum = 0;
    std::optional<double> avg_depth;
  };
  Stats stats() const;

  std::size_t size() const noexcept { return nodes_.size(); }
  std::uint64_t comparisons() const noexcept { return comparisons_; }
  void reset_comparisons() noexcept { comparisons_ = 0; }

  /// True when every left descendant is smaller and every right descendant
  /// larger than its ancestor.
  bool satisfies_search_property() const;

 private:
  struct BstNode {
    Key key;
    std::uint32_t left = kNoNode;
    std::uint32_t right = kNoNode;
  };

  std::vector<BstNode> nodes_;  // nodes_[0] is the root when non-empty
  mutable std::uint64_t comparisons_ = 0;
};

}  // namespace hbst
