#include "hbst/naive_bst.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hbst {

NaiveBst::InsertResult NaiveBst::insert(Key key) {
  if (nodes_.empty()) {
    nodes_.push_back({key});
    return InsertResult::kInserted;
  }
  if (nodes_.size() >= kNoNode) throw std::length_error("naive BST node arena exhausted");
  std::uint32_t cur = 0;
  while (true) {
    ++comparisons_;
    BstNode& n = nodes_[cur];
    if (key == n.key) return InsertResult::kDuplicate;
    std::uint32_t& next = key < n.key ? n.left : n.right;
    if (next == kNoNode) {
      next = static_cast<std::uint32_t>(nodes_.size());
      nodes_.push_back({key});
      return InsertResult::kInserted;
    }
    cur = next;
  }
}

SearchOutcome NaiveBst::search(Key key) const {
  SearchOutcome out;
  std::uint32_t cur = nodes_.empty() ? kNoNode : 0;
  unsigned depth = 0;
  while (cur != kNoNode) {
    ++comparisons_;
    ++out.visited;
    const BstNode& n = nodes_[cur];
    if (key == n.key) {
      out.found = true;
      out.depth = depth;
      return out;
    }
    cur = key < n.key ? n.left : n.right;
    ++depth;
  }
  return out;
}

NaiveBst::Stats NaiveBst::stats() const {
  Stats s;
  if (nodes_.empty()) return s;
  struct Item {
    std::uint32_t node;
    unsigned depth;
  };
  std::vector<Item> stack{{0, 0}};
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    ++s.node_count;
    s.depth_sum += it.depth;
    s.height = std::max(s.height, static_cast<int>(it.depth));
    const BstNode& n = nodes_[it.node];
    if (n.left != kNoNode) stack.push_back({n.left, it.depth + 1});
    if (n.right != kNoNode) stack.push_back({n.right, it.depth + 1});
  }
  s.avg_depth = static_cast<double>(s.depth_sum) / static_cast<double>(s.node_count);
  return s;
}

bool NaiveBst::satisfies_search_property() const {
  if (nodes_.empty()) return true;
  // Every node must fall inside the open interval its ancestors imply.
  struct Item {
    std::uint32_t node;
    std::optional<Key> above;  // exclusive lower bound
    std::optional<Key> below;  // exclusive upper bound
  };
  std::vector<Item> stack{{0, std::nullopt, std::nullopt}};
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    const BstNode& n = nodes_[it.node];
    if ((it.above && n.key <= *it.above) || (it.below && n.key >= *it.below)) return false;
    if (n.left != kNoNode) stack.push_back({n.left, it.above, n.key});
    if (n.right != kNoNode) stack.push_back({n.right, n.key, it.below});
  }
  return true;
}

}  // namespace hbst
