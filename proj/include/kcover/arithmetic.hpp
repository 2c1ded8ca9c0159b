#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "kcover/permutation.hpp"

namespace kcover {

using Key = std::vector<std::uint32_t>;

/// Group arithmetic over an element type with a canonical serialized key.
/// Keys have a fixed length per arithmetic and order elements totally.
template <class A>
concept GroupArithmetic = requires(A const &a, typename A::Element const &e, Key &out) {
  typename A::Element;
  { a.multiply(e, e) } -> std::same_as<typename A::Element>;
  { a.inverse(e) } -> std::same_as<typename A::Element>;
  { a.identity() } -> std::same_as<typename A::Element>;
  { a.serialize(e, out) };
  { a.key_length() } -> std::convertible_to<std::size_t>;
  { a.deserialize(std::span<std::uint32_t const>{}) } -> std::same_as<typename A::Element>;
};

template <class A>
Key key_of(A const &arith, typename A::Element const &e) {
  Key k;
  k.reserve(arith.key_length());
  arith.serialize(e, k);
  return k;
}

struct KeyHash {
  std::size_t operator()(Key const &k) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : k) {
      h ^= v;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

/// Permutations of a fixed degree.
class PermutationArithmetic {
 public:
  using Element = Permutation;
  explicit PermutationArithmetic(std::size_t degree) : degree_(degree) {}

  Permutation multiply(Permutation const &a, Permutation const &b) const { return a * b; }
  Permutation inverse(Permutation const &a) const { return a.inverse(); }
  Permutation identity() const { return Permutation(degree_); }
  void serialize(Permutation const &a, Key &out) const {
    for (auto v : a.images()) out.push_back(v);
  }
  std::size_t key_length() const { return degree_; }
  Permutation deserialize(std::span<std::uint32_t const> key) const {
    return Permutation(std::vector<Point>(key.begin(), key.end()));
  }

 private:
  std::size_t degree_;
};

/// Breadth-first closure of <gens> under right multiplication.
/// Returns nothing when the group has more than `cap` elements.
template <GroupArithmetic A>
std::optional<std::vector<typename A::Element>> closure(
    A const &arith, std::span<typename A::Element const> gens, std::size_t cap) {
  std::vector<typename A::Element> elements{arith.identity()};
  std::unordered_map<Key, std::size_t, KeyHash> seen{{key_of(arith, elements.front()), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (auto const &g : gens) {
      auto next = arith.multiply(elements[head], g);
      auto key = key_of(arith, next);
      if (seen.contains(key)) continue;
      if (elements.size() >= cap) return std::nullopt;
      seen.emplace(std::move(key), elements.size());
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

inline std::optional<std::vector<Permutation>> closure(std::span<Permutation const> gens,
                                                       std::size_t degree, std::size_t cap) {
  return closure(PermutationArithmetic(degree), gens, cap);
}

}  // namespace kcover
