#include "hbst/render.hpp"

#include <sstream>
#include <unordered_map>

namespace hbst {

namespace {

const char* side_label(Side side) { return side == Side::kLeft ? "L" : "R"; }

}  // namespace

std::string render_listing(const Tree& tree) {
  std::ostringstream out;
  const KeyWidth width = tree.width();
  tree.visit_preorder([&](const NodeVisit& v) {
    const Node& n = tree.node(v.handle);
    out << std::string(2 * v.depth, ' ');
    if (v.parent != kNoNode) out << side_label(v.side) << ' ';
    out << n.key << " depth=" << v.depth;
    if (v.frame) {
      out << " frame=" << format_frame(*v.frame, width)
          << " ref=" << hidden_ref(*v.frame, width);
    }
    if (n.tombstone) out << " tombstone";
    out << '\n';
  });
  return out.str();
}

std::string render_dot(const Tree& tree) {
  std::ostringstream out;
  const KeyWidth width = tree.width();
  std::unordered_map<NodeHandle, std::size_t> id;
  std::ostringstream edges;
  out << "digraph hbst {\n";
  out << "  node [shape=box];\n";
  tree.visit_preorder([&](const NodeVisit& v) {
    const std::size_t self = id.size();
    id.emplace(v.handle, self);
    const Node& n = tree.node(v.handle);
    out << "  n" << self << " [label=\"" << n.key << ' '
        << (v.frame ? format_frame(*v.frame, width) : std::string("[?)")) << " @" << v.depth
        << "\"";
    if (n.tombstone) out << ", style=dashed";
    out << "];\n";
    if (v.parent != kNoNode) {
      edges << "  n" << id.at(v.parent) << " -> n" << self << " [label=\"" << side_label(v.side)
            << "\"];\n";
    }
  });
  out << edges.str() << "}\n";
  return out.str();
}

}  // namespace hbst
