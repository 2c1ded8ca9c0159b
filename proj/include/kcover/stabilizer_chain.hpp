#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kcover/permutation.hpp"

namespace kcover {

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Used for the order and membership of groups too large to enumerate.
class StabilizerChain {
 public:
  StabilizerChain(std::span<Permutation const> generators, std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::span<Point const> base() const { return base_; }
  std::span<Permutation const> strong_generators() const { return strong_; }

  /// Product of the basic orbit lengths. Throws on 64-bit overflow.
  std::uint64_t order() const;

  bool contains(Permutation const &p) const;

  /// Basic orbit of level i, in discovery order.
  std::span<Point const> orbit(std::size_t level) const { return levels_[level].orbit; }

 private:
  struct Level {
    std::vector<Point> orbit;
    // transversal[p] maps the base point to p; empty when p is off the orbit
    std::vector<std::optional<Permutation>> transversal;
  };

  struct SiftResult {
    Permutation residue;
    std::size_t level;
  };

  void rebuild_level(std::size_t i);
  bool fixes_base_prefix(Permutation const &p, std::size_t count) const;
  SiftResult sift(Permutation h, std::size_t from) const;

  std::size_t degree_;
  std::vector<Point> base_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

}  // namespace kcover
