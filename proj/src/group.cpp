#include "kcover/group.hpp"

#include <algorithm>
#include <stdexcept>

#include "kcover/arithmetic.hpp"
#include "kcover/n_cycles.hpp"

namespace kcover {

GroupHandle::GroupHandle(std::vector<Permutation> generators, std::size_t degree, std::string name)
    : generators_(std::move(generators)),
      degree_(degree),
      name_(std::move(name)),
      chain_(std::make_shared<StabilizerChain const>(generators_, degree)),
      order_(chain_->order()) {}

bool GroupHandle::enumerate(std::size_t cap) {
  if (enumeration_) return true;
  if (order_ > cap) return false;
  auto elements = closure(generators_, degree_, cap);
  if (!elements) return false;
  if (elements->size() != order_)
    throw std::logic_error("closure size disagrees with stabilizer chain order");
  std::sort(elements->begin(), elements->end());
  auto e = std::make_shared<Enumeration>();
  e->elements = std::move(*elements);
  e->index.reserve(e->elements.size());
  for (std::uint32_t i = 0; i < e->elements.size(); ++i) e->index.emplace(e->elements[i], i);
  auto const n = e->elements.size();
  e->inverses.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) e->inverses[i] = e->index.at(e->elements[i].inverse());
  if (n <= kMultiplicationTableCap) {
    e->table.resize(n * n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        e->table[i * n + j] = e->index.at(e->elements[i] * e->elements[j]);
  }
  enumeration_ = std::move(e);
  return true;
}

std::span<Permutation const> GroupHandle::elements() const {
  if (!enumeration_) throw std::logic_error("group " + name_ + " is not enumerated");
  return enumeration_->elements;
}

std::optional<std::uint32_t> GroupHandle::index_of(Permutation const &p) const {
  if (!enumeration_) throw std::logic_error("group " + name_ + " is not enumerated");
  auto it = enumeration_->index.find(p);
  if (it == enumeration_->index.end()) return std::nullopt;
  return it->second;
}

std::uint32_t GroupHandle::multiply_index(std::uint32_t a, std::uint32_t b) const {
  if (!enumeration_) throw std::logic_error("group " + name_ + " is not enumerated");
  if (!enumeration_->table.empty()) return enumeration_->table[a * enumeration_->elements.size() + b];
  return enumeration_->index.at(enumeration_->elements[a] * enumeration_->elements[b]);
}

std::uint32_t GroupHandle::inverse_index(std::uint32_t a) const {
  if (!enumeration_) throw std::logic_error("group " + name_ + " is not enumerated");
  return enumeration_->inverses[a];
}

bool GroupHandle::is_natural_alternating() const {
  if (degree_ < 5 || degree_ == 6 || degree_ > 20) return false;
  if (order_ != factorial(degree_) / 2) return false;
  return std::all_of(generators_.begin(), generators_.end(), [](Permutation const &g) {
    std::size_t even_cycles = 0;
    for (auto len : g.cycle_type())
      if (len % 2 == 0) ++even_cycles;
    return even_cycles % 2 == 0;
  });
}

std::uint64_t group_order(std::span<Permutation const> gens, std::size_t degree) {
  return StabilizerChain(gens, degree).order();
}

}  // namespace kcover
