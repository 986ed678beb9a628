#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "hbst/key_space.hpp"

namespace hbst {

using NodeHandle = std::uint32_t;
inline constexpr NodeHandle kNoNode = std::numeric_limits<NodeHandle>::max();

struct Node {
  Key key = 0;
  bool tombstone = false;
  NodeHandle left = kNoNode;
  NodeHandle right = kNoNode;

  bool is_leaf() const noexcept { return left == kNoNode && right == kNoNode; }
  NodeHandle child(Side side) const noexcept { return side == Side::kLeft ? left : right; }
  NodeHandle& child(Side side) noexcept { return side == Side::kLeft ? left : right; }
};

struct InsertOutcome {
  enum class Kind : std::uint8_t { kNewNode, kReusedTombstone, kDuplicate };

  Kind kind;
  unsigned depth;    // depth of the node now holding the key (or the live duplicate)
  unsigned visited;  // existing nodes examined on the way down

  bool inserted() const noexcept { return kind != Kind::kDuplicate; }
};

struct SearchOutcome {
  bool found = false;
  unsigned depth = 0;  // meaningful only when found
  unsigned visited = 0;
};

enum class DeleteOutcome : std::uint8_t { kDeleted, kNotFound };

struct TreeStats {
  int height = -1;  // in edges; -1 for the empty tree
  std::size_t live_count = 0;
  std::size_t tombstone_count = 0;
  std::size_t node_count = 0;
  std::uint64_t live_depth_sum = 0;
  std::optional<double> avg_live_depth;  // empty when there are no live nodes
};

enum class KeyOrder : std::uint8_t { kPreorder, kSorted };

/// Node as seen during a preorder walk. `frame` is empty below depth B,
/// which only happens for structurally invalid trees.
struct NodeVisit {
  NodeHandle handle;
  NodeHandle parent;
  Side side;  // side of `parent` this node hangs from; kLeft for the root
  unsigned depth;
  std::optional<IntervalFrame> frame;
};

/// Hidden binary search tree over keys in [0, 2^B).
///
/// Branching at a node is decided by the midpoint of the node's positional
/// frame, never by the key stored in it, so no rotations are needed and
/// depth never exceeds B. Deleted nodes either stay in place as tombstones
/// (lazy_delete) and get reclaimed by later inserts, or are physically
/// dropped by moving a descendant leaf's contents up (hard_delete).
///
/// Single-threaded mutable value. Const members are safe to call
/// concurrently when no writer is active.
class Tree {
 public:
  explicit Tree(KeyWidth width) : width_(width) {}

  /// Builds a tree from raw nodes without checking the hidden search
  /// property (see validate()). Throws std::invalid_argument when the node
  /// links do not form a single tree rooted at `root` covering every node.
  static Tree assemble(KeyWidth width, NodeHandle root, std::vector<Node> nodes);

  KeyWidth width() const noexcept { return width_; }
  std::size_t size() const noexcept { return live_count_; }
  bool empty() const noexcept { return live_count_ == 0; }
  std::size_t tombstone_count() const noexcept { return tombstone_count_; }
  std::size_t node_count() const noexcept { return nodes_.size() - free_.size(); }

  NodeHandle root() const noexcept { return root_; }
  const Node& node(NodeHandle handle) const { return nodes_.at(handle); }

  /// Throws KeyOutOfRange for keys outside [0, 2^B).
  InsertOutcome insert(Key key);
  SearchOutcome search(Key key) const;
  bool contains(Key key) const { return search(key).found; }

  /// Marks the live node holding `key` as a tombstone. Shape is unchanged.
  DeleteOutcome lazy_delete(Key key);

  /// Physically removes the live node holding `key`. An internal node takes
  /// over key and tombstone flag of the leaf reached by descending left when
  /// possible, else right; that leaf is then unlinked.
  DeleteOutcome hard_delete(Key key);

  TreeStats stats() const;

  /// Live keys only. kSorted collects in preorder and sorts afterwards.
  std::vector<Key> collect_keys(KeyOrder order) const;

  /// Calls fn(const NodeVisit&) for each node in preorder (left before right).
  template <class Fn>
  void visit_preorder(Fn&& fn) const;

 private:
  struct Located {
    NodeHandle handle = kNoNode;
    NodeHandle parent = kNoNode;
    Side side = Side::kLeft;
    unsigned depth = 0;
    unsigned visited = 0;
  };

  void check_key(Key key) const;
  Located find_live(Key key) const;
  NodeHandle allocate(Key key);
  void release(NodeHandle handle);
  void unlink(NodeHandle parent, Side side);

  KeyWidth width_;
  NodeHandle root_ = kNoNode;
  std::vector<Node> nodes_;
  std::vector<NodeHandle> free_;
  std::size_t live_count_ = 0;
  std::size_t tombstone_count_ = 0;
};

/// Perfectly balanced midpoint tree over keys 1..2^B-1, built by inserting
/// the midpoint of [lo, hi) before recursing into both halves.
inline constexpr unsigned kIdealTreeMaxBits = 20;
Tree build_ideal_tree(KeyWidth width);

template <class Fn>
void Tree::visit_preorder(Fn&& fn) const {
  if (root_ == kNoNode) return;
  std::vector<NodeVisit> stack;
  stack.push_back({root_, kNoNode, Side::kLeft, 0, kRootFrame});
  while (!stack.empty()) {
    const NodeVisit visit = stack.back();
    stack.pop_back();
    fn(visit);
    const Node& n = nodes_[visit.handle];
    // Right first so the left subtree is visited first.
    for (Side side : {Side::kRight, Side::kLeft}) {
      const NodeHandle child = n.child(side);
      if (child == kNoNode) continue;
      std::optional<IntervalFrame> frame;
      if (visit.frame && visit.frame->depth < width_.bits()) {
        frame = child_frame(*visit.frame, side, width_);
      }
      stack.push_back({child, visit.handle, side, visit.depth + 1, frame});
    }
  }
}

}  // namespace hbst
