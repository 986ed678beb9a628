#include "hbst/validate.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace hbst {

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::kFrameContainment: return "frame-containment";
    case Rule::kLeftBelowRef: return "left-below-ref";
    case Rule::kRightAtOrAboveRef: return "right-at-or-above-ref";
    case Rule::kDepthBound: return "depth-bound";
    case Rule::kDistinctLiveKeys: return "distinct-live-keys";
    case Rule::kCountsMatch: return "counts-match";
  }
  return "unknown";
}

bool ValidationReport::has(Rule rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [rule](const Violation& v) { return v.rule == rule; });
}

namespace {

struct Ancestor {
  Key ref;
  Side taken;  // which side of this ancestor the current path continues on
  unsigned depth;
};

struct PathEntry {
  NodeHandle handle;
  unsigned depth;
  std::optional<IntervalFrame> frame;
};

}  // namespace

ValidationReport validate(const Tree& tree) {
  ValidationReport report;
  const KeyWidth width = tree.width();
  // Sides taken from the root down to the node being checked.
  std::string path;
  auto add = [&](Rule rule, std::string what) {
    report.violations.push_back({"/" + path, rule, std::move(what)});
  };

  std::size_t live = 0;
  std::size_t tombstones = 0;
  std::unordered_map<Key, NodeHandle> live_keys;

  // Explicit DFS keeping the chain of framed ancestors for the subtree checks.
  // Only ancestors at depth <= B carry a frame, so the chain stays short even
  // for corrupt trees. Entries below `chain_len` belong to the popped node's
  // ancestors: siblings processed in between only touch deeper entries.
  struct Pending {
    PathEntry entry;
    std::size_t chain_len;
    bool parent_framed;
    Side side;
  };
  std::vector<Ancestor> ancestors;
  std::vector<Pending> stack;
  if (tree.root() != kNoNode) {
    stack.push_back({{tree.root(), 0, kRootFrame}, 0, false, Side::kLeft});
  }

  while (!stack.empty()) {
    Pending top = std::move(stack.back());
    stack.pop_back();
    ancestors.resize(top.chain_len);
    if (top.parent_framed) ancestors.back().taken = top.side;
    const PathEntry& e = top.entry;
    if (e.depth > 0) {
      path.resize(e.depth - 1);
      path.push_back(top.side == Side::kLeft ? 'L' : 'R');
    }
    const Node& n = tree.node(e.handle);

    ++(n.tombstone ? tombstones : live);
    if (!n.tombstone) {
      auto [it, fresh] = live_keys.emplace(n.key, e.handle);
      if (!fresh) {
        add(Rule::kDistinctLiveKeys, "live key " + std::to_string(n.key) +
                                         " already held by node #" + std::to_string(it->second));
      }
    }

    if (e.depth > width.bits()) {
      // Reported once at the first node past the bound.
      if (e.depth == width.bits() + 1) {
        add(Rule::kDepthBound,
            "depth " + std::to_string(e.depth) + " exceeds key width " +
                std::to_string(width.bits()));
      }
    } else if (e.frame && !frame_contains(*e.frame, width, n.key)) {
      add(Rule::kFrameContainment,
          "key " + std::to_string(n.key) + " outside frame " + format_frame(*e.frame, width));
    }

    for (const Ancestor& a : ancestors) {
      if (a.taken == Side::kLeft && !(n.key < a.ref)) {
        add(Rule::kLeftBelowRef,
            "key " + std::to_string(n.key) + " in left subtree of depth-" +
                std::to_string(a.depth) + " ancestor with reference " + std::to_string(a.ref));
      } else if (a.taken == Side::kRight && n.key < a.ref) {
        add(Rule::kRightAtOrAboveRef,
            "key " + std::to_string(n.key) + " in right subtree of depth-" +
                std::to_string(a.depth) + " ancestor with reference " + std::to_string(a.ref));
      }
    }

    const bool framed = e.frame.has_value() && e.depth < width.bits();
    if (framed) ancestors.push_back({hidden_ref(*e.frame, width), Side::kLeft, e.depth});
    for (Side side : {Side::kRight, Side::kLeft}) {
      const NodeHandle child = n.child(side);
      if (child == kNoNode) continue;
      PathEntry next{child, e.depth + 1, std::nullopt};
      if (framed) next.frame = child_frame(*e.frame, side, width);
      stack.push_back({std::move(next), ancestors.size(), framed, side});
    }
  }

  if (live != tree.size() || tombstones != tree.tombstone_count()) {
    path.clear();
    add(Rule::kCountsMatch,
        "stored counts live=" + std::to_string(tree.size()) +
            " tombstones=" + std::to_string(tree.tombstone_count()) + " but recount gives live=" +
            std::to_string(live) + " tombstones=" + std::to_string(tombstones));
  }
  return report;
}

std::string format_report(const ValidationReport& report) {
  std::ostringstream out;
  if (report.valid()) {
    out << "valid\n";
    return out.str();
  }
  out << "invalid: " << report.violations.size() << " violation(s)\n";
  for (const Violation& v : report.violations) {
    out << "  " << v.locator << " " << rule_name(v.rule) << ": " << v.description << "\n";
  }
  return out.str();
}

}  // namespace hbst
