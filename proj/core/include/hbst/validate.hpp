#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hbst/tree.hpp"

namespace hbst {

enum class Rule {
  kFrameContainment,   // node key lies in its positional frame
  kLeftBelowRef,       // left-subtree keys < ancestor's hidden reference
  kRightAtOrAboveRef,  // right-subtree keys >= ancestor's hidden reference
  kDepthBound,         // depth <= B
  kDistinctLiveKeys,
  kCountsMatch,        // stored live/tombstone counts equal a recount
};

std::string_view rule_name(Rule rule);

struct Violation {
  std::string locator;  // "/" for the root, then one L/R per edge, e.g. "/LRR"
  Rule rule;
  std::string description;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const noexcept { return violations.empty(); }
  bool has(Rule rule) const;
};

/// Checks every structural rule and reports all violations found. Nodes
/// deeper than B are reported once under kDepthBound and are only checked
/// against their ancestors that still have a frame.
ValidationReport validate(const Tree& tree);

std::string format_report(const ValidationReport& report);

}  // namespace hbst
