#pragma once

#include <string>

#include "hbst/tree.hpp"

namespace hbst {

/// Indented listing, one node per line:
///   "<indent><L|R> <key> depth=<d> frame=[lo,hi) ref=<r>"
/// The root line has no side marker. Tombstones end in " tombstone".
std::string render_listing(const Tree& tree);

/// Graphviz digraph. Vertices are labeled "key [lo,hi) @depth", tombstones
/// are dashed, edges carry "L"/"R" labels.
std::string render_dot(const Tree& tree);

}  // namespace hbst
