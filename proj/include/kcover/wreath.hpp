#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "kcover/arithmetic.hpp"
#include "kcover/element_pool.hpp"
#include "kcover/permutation.hpp"

namespace kcover {

/// Largest n for which wreath elements are materialized; the base part has
/// (n-1)! entries.
inline constexpr std::size_t kMaxWreathDegree = 8;

/// Element (f, sigma) of T wr_A S_n, with f stored densely in the canonical
/// order of the n-cycles.
struct WreathElement {
  std::vector<ElemId> base;
  Permutation sigma;

  bool in_base() const { return sigma.is_identity(); }
  friend bool operator==(WreathElement const &, WreathElement const &) = default;
};

/// Arithmetic of X = T wr_A S_n where S_n acts on the set A of n-cycles by
/// conjugation. Products follow (f1, s1)(f2, s2) = (a -> f1(a) f2(a^s1), s1 s2).
class WreathContext {
 public:
  using Element = WreathElement;

  WreathContext(std::size_t n, std::shared_ptr<ElementPool const> pool);

  std::size_t n() const { return n_; }
  /// |A| = (n-1)!
  std::size_t arity() const { return cycles_.size(); }
  std::span<Permutation const> cycles() const { return cycles_; }
  ElementPool const &pool() const { return *pool_; }
  std::shared_ptr<ElementPool const> pool_ptr() const { return pool_; }

  std::size_t cycle_index(Permutation const &alpha) const;

  /// alpha^sigma = sigma^-1 alpha sigma.
  Permutation act_on_A(Permutation const &alpha, Permutation const &sigma) const;

  /// The permutation of A induced by sigma, as canonical indices:
  /// row[i] = index of cycles()[i]^sigma.
  std::vector<std::uint32_t> induced(Permutation const &sigma) const;

  WreathElement multiply(WreathElement const &a, WreathElement const &b) const;
  WreathElement inverse(WreathElement const &a) const;
  WreathElement identity() const;
  void serialize(WreathElement const &a, Key &out) const;
  std::size_t key_length() const { return arity() + n_; }
  WreathElement deserialize(std::span<std::uint32_t const> key) const;

  WreathElement top(Permutation const &sigma) const;
  WreathElement base_element(std::vector<ElemId> f) const;
  WreathElement power(WreathElement const &a, unsigned exponent) const;

 private:
  std::span<std::uint32_t const> induced_row(Permutation const &sigma,
                                             std::vector<std::uint32_t> &scratch) const;

  std::size_t n_;
  std::shared_ptr<ElementPool const> pool_;
  std::vector<Permutation> cycles_;

  // Lazily filled per-sigma rows, keyed by the lexicographic rank of sigma.
  // Only kept for n <= 7; larger n recompute.
  struct RowCache {
    std::vector<std::vector<std::uint32_t>> rows;
    std::unique_ptr<std::once_flag[]> flags;
  };
  std::shared_ptr<RowCache> cache_;
};

}  // namespace kcover
