#include "hbst/document.hpp"

#include <json.hpp>

#include <unordered_map>
#include <vector>

namespace hbst {

using Json = nlohmann::ordered_json;

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error("tree document fails validation:\n" + format_report(report)),
      report_(std::move(report)) {}

std::string serialize(const Tree& tree) {
  std::unordered_map<NodeHandle, std::size_t> index;
  std::vector<NodeHandle> order;
  tree.visit_preorder([&](const NodeVisit& v) {
    index.emplace(v.handle, order.size());
    order.push_back(v.handle);
  });

  auto link = [&](NodeHandle h) -> Json {
    return h == kNoNode ? Json(nullptr) : Json(index.at(h));
  };

  Json nodes = Json::array();
  for (NodeHandle h : order) {
    const Node& n = tree.node(h);
    nodes.push_back(Json{{"key", n.key},
                         {"tombstone", n.tombstone},
                         {"left", link(n.left)},
                         {"right", link(n.right)}});
  }
  Json doc{{"bits", tree.width().bits()},
           {"root", order.empty() ? Json(nullptr) : Json(0)},
           {"nodes", std::move(nodes)}};
  return doc.dump(2) + "\n";
}

namespace {

const Json& field(const Json& obj, const char* name, const std::string& where) {
  auto it = obj.find(name);
  if (it == obj.end()) throw DocumentError(where + ": missing field \"" + name + "\"");
  return *it;
}

NodeHandle parse_link(const Json& value, std::size_t count, const std::string& where) {
  if (value.is_null()) return kNoNode;
  if (!value.is_number_unsigned() || value.get<std::uint64_t>() >= count) {
    throw DocumentError(where + ": expected null or a node index below " +
                        std::to_string(count));
  }
  return static_cast<NodeHandle>(value.get<std::uint64_t>());
}

}  // namespace

Tree parse_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DocumentError("document root must be an object");

  const Json& bits = field(doc, "bits", "document");
  if (!bits.is_number_unsigned() || bits.get<std::uint64_t>() < KeyWidth::kMinBits ||
      bits.get<std::uint64_t>() > KeyWidth::kMaxBits) {
    throw DocumentError("\"bits\" must be an integer in [1, 64]");
  }
  const KeyWidth width(static_cast<unsigned>(bits.get<std::uint64_t>()));

  const Json& raw_nodes = field(doc, "nodes", "document");
  if (!raw_nodes.is_array()) throw DocumentError("\"nodes\" must be an array");
  if (raw_nodes.size() >= kNoNode) throw DocumentError("too many nodes");
  const std::size_t count = raw_nodes.size();

  std::vector<Node> nodes;
  nodes.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::string where = "node " + std::to_string(i);
    const Json& raw = raw_nodes[i];
    if (!raw.is_object()) throw DocumentError(where + ": must be an object");
    const Json& key = field(raw, "key", where);
    const Json& tombstone = field(raw, "tombstone", where);
    if (!key.is_number_unsigned()) throw DocumentError(where + ": key must be unsigned");
    if (!tombstone.is_boolean()) throw DocumentError(where + ": tombstone must be boolean");
    nodes.push_back(Node{key.get<Key>(), tombstone.get<bool>(),
                         parse_link(field(raw, "left", where), count, where + ".left"),
                         parse_link(field(raw, "right", where), count, where + ".right")});
  }
  const NodeHandle root = parse_link(field(doc, "root", "document"), count, "root");

  Tree tree(width);
  try {
    tree = Tree::assemble(width, root, std::move(nodes));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }

  // Preorder listing: walking the tree must hand out indices 0, 1, 2, ...
  std::size_t expected = 0;
  bool preorder = true;
  tree.visit_preorder([&](const NodeVisit& v) { preorder &= v.handle == expected++; });
  if (!preorder) throw DocumentError("nodes are not listed in preorder");
  return tree;
}

Tree deserialize(std::string_view text) {
  Tree tree = parse_document(text);
  ValidationReport report = validate(tree);
  if (!report.valid()) throw ValidationError(std::move(report));
  return tree;
}

}  // namespace hbst
