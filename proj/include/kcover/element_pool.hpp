#pragma once

#include <cstdint>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "kcover/group.hpp"
#include "kcover/permutation.hpp"

namespace kcover {

using ElemId = std::uint32_t;

/// Integer handles for elements of T.
///
/// For an enumerated T the id is the index in T's sorted enumeration, so id
/// order is the lexicographic order of image arrays and id 0 is the
/// identity. Otherwise elements are interned on first sight; id 0 is still
/// the identity but id order is discovery order.
class ElementPool {
 public:
  explicit ElementPool(GroupHandle group);

  GroupHandle const &group() const { return group_; }
  bool enumerated() const { return group_.enumerated(); }

  static constexpr ElemId identity() { return 0; }
  ElemId intern(Permutation const &p) const;
  Permutation element(ElemId id) const;
  ElemId multiply(ElemId a, ElemId b) const;
  ElemId inverse(ElemId a) const;
  std::uint64_t order_of(ElemId a) const;

  /// Number of distinct ids handed out so far.
  std::size_t size() const;

 private:
  GroupHandle group_;
  mutable std::mutex mutex_;
  mutable std::deque<Permutation> interned_;
  mutable std::unordered_map<Permutation, ElemId> ids_;
};

}  // namespace kcover
