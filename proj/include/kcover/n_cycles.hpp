#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kcover/permutation.hpp"

namespace kcover {

/// Index k in 1..n-1 of the class O_k containing an n-cycle, i.e. the least
/// k with 1^(alpha^k) = 2.
struct CycleClassIndex {
  std::size_t k = 0;
  friend bool operator==(CycleClassIndex, CycleClassIndex) = default;
};

/// All (n-1)! n-cycles of S_n in canonical order: each written (1, i2, ..., in)
/// and sorted lexicographically by (i2, ..., in).
std::vector<Permutation> enumerate_n_cycles(std::size_t n);

bool is_n_cycle(Permutation const &p);

CycleClassIndex classify_Ok(Permutation const &alpha);

/// Position of an n-cycle in the canonical order, computed as the
/// lexicographic rank of (i2, ..., in) among permutations of {2..n}.
std::size_t n_cycle_index(Permutation const &alpha);

/// Lexicographic rank of a permutation among all permutations of its degree.
std::size_t permutation_rank(Permutation const &p);

std::uint64_t factorial(std::size_t n);

}  // namespace kcover
