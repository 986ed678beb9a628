#pragma once

#include <cstdint>
#include <unordered_set>

#include "hbst/key_space.hpp"

namespace hbst {

/// Plain set used as ground truth in differential tests.
class OracleSet {
 public:
  enum class Op : std::uint8_t { kInsert, kDelete, kContains };

  /// kInsert/kDelete report whether the set changed; kContains reports
  /// membership.
  bool apply(Op op, Key key) {
    switch (op) {
      case Op::kInsert: return members_.insert(key).second;
      case Op::kDelete: return members_.erase(key) != 0;
      case Op::kContains: return members_.contains(key);
    }
    return false;
  }

  std::size_t size() const noexcept { return members_.size(); }
  const std::unordered_set<Key>& members() const noexcept { return members_; }

 private:
  std::unordered_set<Key> members_;
};

}  // namespace hbst
