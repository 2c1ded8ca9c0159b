#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "kcover/arithmetic.hpp"
#include "kcover/permutation.hpp"

namespace kcover {

class CapacityExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Transversal of the image of a homomorphism onto a permutation group,
/// with a lifted preimage for every image element.
template <GroupArithmetic A>
struct LiftedTransversal {
  std::vector<Permutation> images;                  // breadth-first order, identity first
  std::vector<typename A::Element> lifts;           // lifts[i] projects to images[i]
  std::unordered_map<Permutation, std::size_t> index;
};

template <GroupArithmetic A, class Projection>
LiftedTransversal<A> lifted_transversal(A const &arith, std::span<typename A::Element const> gens,
                                        Projection project, std::size_t image_degree,
                                        std::size_t cap) {
  LiftedTransversal<A> t;
  t.images.push_back(Permutation(image_degree));
  t.lifts.push_back(arith.identity());
  t.index.emplace(t.images.front(), 0);
  std::vector<Permutation> gen_images;
  for (auto const &s : gens) gen_images.push_back(project(s));
  for (std::size_t head = 0; head < t.images.size(); ++head) {
    for (std::size_t si = 0; si < gens.size(); ++si) {
      auto next = t.images[head] * gen_images[si];
      if (t.index.contains(next)) continue;
      if (t.images.size() >= cap)
        throw CapacityExceeded("image group exceeds enumeration cap " + std::to_string(cap));
      t.index.emplace(next, t.images.size());
      t.images.push_back(std::move(next));
      t.lifts.push_back(arith.multiply(t.lifts[head], gens[si]));
    }
  }
  return t;
}

/// Schreier generators u_c s u_{c pi(s)}^-1 of the kernel of `project`
/// restricted to <gens>, with duplicates and identities removed. Output order
/// follows the breadth-first transversal, then the generator order.
template <GroupArithmetic A, class Projection>
std::vector<typename A::Element> schreier_kernel_generators(
    A const &arith, std::span<typename A::Element const> gens, Projection project,
    std::size_t image_degree, std::size_t cap) {
  auto const t = lifted_transversal(arith, gens, project, image_degree, cap);
  std::vector<Permutation> gen_images;
  for (auto const &s : gens) gen_images.push_back(project(s));

  std::vector<typename A::Element> inverse_lifts;
  inverse_lifts.reserve(t.lifts.size());
  for (auto const &u : t.lifts) inverse_lifts.push_back(arith.inverse(u));

  auto const identity_key = key_of(arith, arith.identity());
  std::unordered_set<Key, KeyHash> seen{identity_key};
  std::vector<typename A::Element> result;
  for (std::size_t c = 0; c < t.images.size(); ++c) {
    for (std::size_t si = 0; si < gens.size(); ++si) {
      auto const target = t.index.at(t.images[c] * gen_images[si]);
      auto z = arith.multiply(arith.multiply(t.lifts[c], gens[si]), inverse_lifts[target]);
      if (!project(z).is_identity())
        throw std::logic_error("Schreier generator does not lie in the kernel");
      if (seen.insert(key_of(arith, z)).second) result.push_back(std::move(z));
    }
  }
  return result;
}

}  // namespace kcover
