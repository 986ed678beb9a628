#include "hbst/tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hbst {

Tree Tree::assemble(KeyWidth width, NodeHandle root, std::vector<Node> nodes) {
  if (nodes.size() >= kNoNode) {
    throw std::invalid_argument("too many nodes");
  }
  Tree tree(width);
  if (root == kNoNode) {
    if (!nodes.empty()) throw std::invalid_argument("nodes present but root is null");
    return tree;
  }
  if (root >= nodes.size()) throw std::invalid_argument("root index out of range");

  std::vector<bool> seen(nodes.size(), false);
  std::vector<NodeHandle> stack{root};
  std::size_t reached = 0;
  while (!stack.empty()) {
    const NodeHandle h = stack.back();
    stack.pop_back();
    if (seen[h]) {
      throw std::invalid_argument("node " + std::to_string(h) + " is linked more than once");
    }
    seen[h] = true;
    ++reached;
    for (NodeHandle child : {nodes[h].left, nodes[h].right}) {
      if (child == kNoNode) continue;
      if (child >= nodes.size()) {
        throw std::invalid_argument("child index " + std::to_string(child) + " out of range");
      }
      stack.push_back(child);
    }
  }
  if (reached != nodes.size()) {
    throw std::invalid_argument(std::to_string(nodes.size() - reached) +
                                " node(s) unreachable from the root");
  }

  for (const Node& n : nodes) {
    ++(n.tombstone ? tree.tombstone_count_ : tree.live_count_);
  }
  tree.root_ = root;
  tree.nodes_ = std::move(nodes);
  return tree;
}

void Tree::check_key(Key key) const {
  if (!width_.admits(key)) {
    throw KeyOutOfRange("key " + std::to_string(key) + " outside [0, 2^" +
                        std::to_string(width_.bits()) + ")");
  }
}

NodeHandle Tree::allocate(Key key) {
  NodeHandle h;
  if (!free_.empty()) {
    h = free_.back();
    free_.pop_back();
    nodes_[h] = Node{key};
  } else {
    if (nodes_.size() >= kNoNode) throw std::length_error("node arena exhausted");
    h = static_cast<NodeHandle>(nodes_.size());
    nodes_.push_back(Node{key});
  }
  return h;
}

void Tree::release(NodeHandle handle) {
  nodes_[handle] = Node{};
  free_.push_back(handle);
  if (free_.size() == nodes_.size()) {
    nodes_.clear();
    free_.clear();
  }
}

void Tree::unlink(NodeHandle parent, Side side) {
  if (parent == kNoNode) {
    root_ = kNoNode;
  } else {
    nodes_[parent].child(side) = kNoNode;
  }
}

// The descent does not stop at the first tombstone: a live copy of the key
// may sit further down the same path, and claiming the tombstone would then
// duplicate it. The first tombstone seen is claimed once the path is known
// to hold no live duplicate.
InsertOutcome Tree::insert(Key key) {
  check_key(key);
  if (root_ == kNoNode) {
    root_ = allocate(key);
    ++live_count_;
    return {InsertOutcome::Kind::kNewNode, 0, 0};
  }

  NodeHandle claim = kNoNode;
  unsigned claim_depth = 0;
  NodeHandle cur = root_;
  IntervalFrame frame = kRootFrame;
  unsigned visited = 0;

  auto reuse = [&]() -> InsertOutcome {
    Node& n = nodes_[claim];
    n.key = key;
    n.tombstone = false;
    --tombstone_count_;
    ++live_count_;
    return {InsertOutcome::Kind::kReusedTombstone, claim_depth, visited};
  };

  while (true) {
    const Node& n = nodes_[cur];
    ++visited;
    if (n.tombstone) {
      if (claim == kNoNode) {
        claim = cur;
        claim_depth = frame.depth;
      }
    } else if (n.key == key) {
      return {InsertOutcome::Kind::kDuplicate, frame.depth, visited};
    }
    if (frame.depth == width_.bits()) break;

    const Side side = route(frame, width_, key);
    const NodeHandle next = n.child(side);
    if (next == kNoNode) {
      if (claim != kNoNode) return reuse();
      const NodeHandle fresh = allocate(key);
      nodes_[cur].child(side) = fresh;
      ++live_count_;
      return {InsertOutcome::Kind::kNewNode, frame.depth + 1, visited};
    }
    cur = next;
    frame = child_frame(frame, side, width_);
  }

  // A unit frame holds exactly one key, so an occupied unit slot that is not
  // a live duplicate must be a tombstone, and one has been recorded.
  if (claim == kNoNode) {
    throw std::logic_error("unit frame holds a foreign live key; tree is corrupt");
  }
  return reuse();
}

Tree::Located Tree::find_live(Key key) const {
  Located loc;
  NodeHandle parent = kNoNode;
  Side side = Side::kLeft;
  NodeHandle cur = root_;
  IntervalFrame frame = kRootFrame;
  while (cur != kNoNode) {
    const Node& n = nodes_[cur];
    ++loc.visited;
    if (!n.tombstone && n.key == key) {
      loc.handle = cur;
      loc.parent = parent;
      loc.side = side;
      loc.depth = frame.depth;
      return loc;
    }
    if (frame.depth == width_.bits()) break;
    side = route(frame, width_, key);
    parent = cur;
    cur = n.child(side);
    frame = child_frame(frame, side, width_);
  }
  return loc;
}

SearchOutcome Tree::search(Key key) const {
  check_key(key);
  const Located loc = find_live(key);
  return {loc.handle != kNoNode, loc.depth, loc.visited};
}

DeleteOutcome Tree::lazy_delete(Key key) {
  check_key(key);
  const Located loc = find_live(key);
  if (loc.handle == kNoNode) return DeleteOutcome::kNotFound;
  nodes_[loc.handle].tombstone = true;
  --live_count_;
  ++tombstone_count_;
  return DeleteOutcome::kDeleted;
}

// Splicing a child subtree upward would shift every descendant into a
// different frame, so internal nodes are always refilled from a leaf.
DeleteOutcome Tree::hard_delete(Key key) {
  check_key(key);
  const Located loc = find_live(key);
  if (loc.handle == kNoNode) return DeleteOutcome::kNotFound;

  Node& target = nodes_[loc.handle];
  if (target.is_leaf()) {
    unlink(loc.parent, loc.side);
    release(loc.handle);
    --live_count_;
    return DeleteOutcome::kDeleted;
  }

  NodeHandle parent = loc.handle;
  Side side = target.left != kNoNode ? Side::kLeft : Side::kRight;
  NodeHandle leaf = target.child(side);
  while (!nodes_[leaf].is_leaf()) {
    parent = leaf;
    side = nodes_[leaf].left != kNoNode ? Side::kLeft : Side::kRight;
    leaf = nodes_[leaf].child(side);
  }

  // A tombstoned leaf moves its tombstone up, so the tombstone total is
  // unchanged either way.
  target.key = nodes_[leaf].key;
  target.tombstone = nodes_[leaf].tombstone;
  unlink(parent, side);
  release(leaf);
  --live_count_;
  return DeleteOutcome::kDeleted;
}

TreeStats Tree::stats() const {
  TreeStats s;
  visit_preorder([&](const NodeVisit& v) {
    const Node& n = nodes_[v.handle];
    ++s.node_count;
    s.height = std::max(s.height, static_cast<int>(v.depth));
    if (n.tombstone) {
      ++s.tombstone_count;
    } else {
      ++s.live_count;
      s.live_depth_sum += v.depth;
    }
  });
  if (s.live_count != 0) {
    s.avg_live_depth =
        static_cast<double>(s.live_depth_sum) / static_cast<double>(s.live_count);
  }
  return s;
}

std::vector<Key> Tree::collect_keys(KeyOrder order) const {
  std::vector<Key> keys;
  keys.reserve(live_count_);
  visit_preorder([&](const NodeVisit& v) {
    const Node& n = nodes_[v.handle];
    if (!n.tombstone) keys.push_back(n.key);
  });
  if (order == KeyOrder::kSorted) std::sort(keys.begin(), keys.end());
  return keys;
}

namespace {

void insert_midpoints(Tree& tree, Key lo, Key hi) {
  if (hi - lo < 2) return;
  const Key mid = lo + (hi - lo) / 2;
  tree.insert(mid);
  insert_midpoints(tree, lo, mid);
  insert_midpoints(tree, mid, hi);
}

}  // namespace

Tree build_ideal_tree(KeyWidth width) {
  if (width.bits() > kIdealTreeMaxBits) {
    throw std::invalid_argument("ideal tree materialization is capped at " +
                                std::to_string(kIdealTreeMaxBits) + " bits");
  }
  Tree tree(width);
  insert_midpoints(tree, 0, Key{1} << width.bits());
  return tree;
}

}  // namespace hbst
