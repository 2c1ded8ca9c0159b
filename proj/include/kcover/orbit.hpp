#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "kcover/arithmetic.hpp"
#include "kcover/permutation.hpp"

namespace kcover {

/// Breadth-first orbit of `seed` under <gens>, seed first.
template <class P, class G, class Act>
std::vector<P> orbit(std::span<G const> gens, P const &seed, Act act) {
  std::vector<P> points{seed};
  std::unordered_set<P> seen{seed};
  for (std::size_t head = 0; head < points.size(); ++head) {
    for (auto const &g : gens) {
      P next = act(points[head], g);
      if (seen.insert(next).second) points.push_back(std::move(next));
    }
  }
  return points;
}

/// A group of order `group_order` is regular on `points` iff it is transitive
/// there and the orbit length equals the group order.
template <class P, class G, class Act>
bool is_regular(std::uint64_t group_order, std::span<G const> gens, std::span<P const> points,
                Act act) {
  if (points.empty()) return false;
  auto reached = orbit(gens, points.front(), act);
  if (reached.size() != points.size()) return false;
  std::unordered_set<P> wanted(points.begin(), points.end());
  for (auto const &p : reached)
    if (!wanted.contains(p)) return false;
  return group_order == points.size();
}

/// Transitivity on ordered pairs of distinct points, given every group
/// element as a permutation of {1..points}.
bool is_2_transitive(std::span<Permutation const> elements, std::size_t points);

/// H intersect H^g, listed as {h in H : g h g^-1 in H}.
template <GroupArithmetic A>
std::vector<typename A::Element> conj_intersection(A const &arith,
                                                   std::span<typename A::Element const> subgroup,
                                                   typename A::Element const &g) {
  std::unordered_set<Key, KeyHash> members;
  for (auto const &h : subgroup) members.insert(key_of(arith, h));
  auto const g_inv = arith.inverse(g);
  std::vector<typename A::Element> result;
  for (auto const &h : subgroup)
    if (members.contains(key_of(arith, arith.multiply(arith.multiply(g, h), g_inv))))
      result.push_back(h);
  return result;
}

/// Action of a subgroup H on the right cosets of K <= H by right
/// multiplication. Returns one permutation of {1..|H:K|} per element of H,
/// in the order of `subgroup`.
template <GroupArithmetic A>
std::vector<Permutation> right_coset_action(A const &arith,
                                            std::span<typename A::Element const> subgroup,
                                            std::span<typename A::Element const> kernel) {
  // Coset K h is labelled by the least key among {k h : k in K}.
  auto const coset_key = [&](typename A::Element const &h) {
    Key best;
    for (auto const &k : kernel) {
      auto key = key_of(arith, arith.multiply(k, h));
      if (best.empty() || key < best) best = std::move(key);
    }
    return best;
  };
  std::unordered_map<Key, std::size_t, KeyHash> label;
  std::vector<typename A::Element const *> reps;
  for (auto const &h : subgroup) {
    auto key = coset_key(h);
    if (label.emplace(std::move(key), reps.size()).second) reps.push_back(&h);
  }
  std::vector<Permutation> actions;
  actions.reserve(subgroup.size());
  for (auto const &h : subgroup) {
    std::vector<Point> images(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      images[c] = static_cast<Point>(label.at(coset_key(arith.multiply(*reps[c], h))) + 1);
    actions.emplace_back(std::move(images));
  }
  return actions;
}

}  // namespace kcover
