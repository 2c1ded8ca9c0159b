#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "kcover/permutation.hpp"
#include "kcover/stabilizer_chain.hpp"

namespace kcover {

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

/// Enumerated groups up to this order also cache a multiplication table.
inline constexpr std::size_t kMultiplicationTableCap = 2600;

/// Finitely generated permutation group.
///
/// The stabilizer chain is built on construction, so order and membership
/// are always available. A full element enumeration is cached only after a
/// successful call to enumerate(). Once built, a handle is read-only and may
/// be shared across threads.
class GroupHandle {
 public:
  GroupHandle(std::vector<Permutation> generators, std::size_t degree, std::string name = {});

  std::size_t degree() const { return degree_; }
  std::string const &name() const { return name_; }
  std::span<Permutation const> generators() const { return generators_; }
  std::uint64_t order() const { return order_; }
  bool contains(Permutation const &p) const { return chain_->contains(p); }
  StabilizerChain const &chain() const { return *chain_; }

  /// Caches the sorted element list when order() <= cap.
  bool enumerate(std::size_t cap = kDefaultEnumerationCap);
  bool enumerated() const { return enumeration_ != nullptr; }

  /// Elements in lexicographic order of their image arrays; identity first.
  std::span<Permutation const> elements() const;
  std::optional<std::uint32_t> index_of(Permutation const &p) const;

  /// Index arithmetic on the enumeration; table-driven when the group is
  /// within kMultiplicationTableCap.
  std::uint32_t multiply_index(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse_index(std::uint32_t a) const;
  bool has_table() const { return enumeration_ && !enumeration_->table.empty(); }

  /// True for A_p in its natural action with p >= 5 and p != 6, where every
  /// automorphism is conjugation by an element of S_p.
  bool is_natural_alternating() const;

 private:
  struct Enumeration {
    std::vector<Permutation> elements;
    std::unordered_map<Permutation, std::uint32_t> index;
    std::vector<std::uint32_t> table;  // row-major order x order, or empty
    std::vector<std::uint32_t> inverses;
  };

  std::vector<Permutation> generators_;
  std::size_t degree_;
  std::string name_;
  std::shared_ptr<StabilizerChain const> chain_;
  std::uint64_t order_;
  std::shared_ptr<Enumeration const> enumeration_;
};

/// Exact order of <gens> via a stabilizer chain.
std::uint64_t group_order(std::span<Permutation const> gens, std::size_t degree);

}  // namespace kcover
