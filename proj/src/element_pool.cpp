#include "kcover/element_pool.hpp"

#include <stdexcept>

namespace kcover {

ElementPool::ElementPool(GroupHandle group) : group_(std::move(group)) {
  if (!group_.enumerated()) {
    Permutation id(group_.degree());
    interned_.push_back(id);
    ids_.emplace(std::move(id), 0);
  }
}

ElemId ElementPool::intern(Permutation const &p) const {
  if (group_.enumerated()) {
    auto idx = group_.index_of(p);
    if (!idx) throw std::invalid_argument(p.to_cycles() + " is not an element of " + group_.name());
    return *idx;
  }
  std::lock_guard lock(mutex_);
  auto it = ids_.find(p);
  if (it != ids_.end()) return it->second;
  auto const id = static_cast<ElemId>(interned_.size());
  interned_.push_back(p);
  ids_.emplace(p, id);
  return id;
}

Permutation ElementPool::element(ElemId id) const {
  if (group_.enumerated()) return group_.elements()[id];
  std::lock_guard lock(mutex_);
  return interned_.at(id);
}

ElemId ElementPool::multiply(ElemId a, ElemId b) const {
  if (group_.enumerated()) return group_.multiply_index(a, b);
  if (a == 0) return b;
  if (b == 0) return a;
  return intern(element(a) * element(b));
}

ElemId ElementPool::inverse(ElemId a) const {
  if (group_.enumerated()) return group_.inverse_index(a);
  if (a == 0) return 0;
  return intern(element(a).inverse());
}

std::uint64_t ElementPool::order_of(ElemId a) const { return kcover::order_of(element(a)); }

std::size_t ElementPool::size() const {
  if (group_.enumerated()) return group_.order();
  std::lock_guard lock(mutex_);
  return interned_.size();
}

}  // namespace kcover
