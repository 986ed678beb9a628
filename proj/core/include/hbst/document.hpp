#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hbst/tree.hpp"
#include "hbst/validate.hpp"

namespace hbst {

/// Malformed tree document: bad JSON, wrong field types, broken links.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed document describing a tree that breaks a structural rule.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// JSON document {"bits", "root", "nodes"} with nodes in preorder and
/// referenced by index. Only live structure is written; arena slots are
/// renumbered, so equal trees always produce identical text.
std::string serialize(const Tree& tree);

/// Parses a document without enforcing the hidden search property.
/// Throws DocumentError.
Tree parse_document(std::string_view text);

/// parse_document() followed by validate(). Throws DocumentError or
/// ValidationError.
Tree deserialize(std::string_view text);

}  // namespace hbst
