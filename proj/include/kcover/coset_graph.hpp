#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "kcover/arithmetic.hpp"
#include "kcover/graph.hpp"
#include "kcover/orbit.hpp"
#include "kcover/schreier.hpp"

namespace kcover {

inline constexpr std::size_t kDefaultVertexCap = 2'000'000;

/// Wall-clock limit; a default-constructed deadline never expires.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after(std::chrono::milliseconds budget) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() + budget;
    return d;
  }
  bool expired() const { return at_ && std::chrono::steady_clock::now() >= *at_; }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

struct BuildStats {
  std::size_t discovered = 0;
  std::size_t expanded = 0;
  std::size_t frontier = 0;  // discovered but not yet expanded
  std::string reason;
};

/// A coset breadth-first search stopped early.
class PartialBuild : public CapacityExceeded {
 public:
  explicit PartialBuild(BuildStats s)
      : CapacityExceeded("coset graph build stopped (" + s.reason + ") after " +
                         std::to_string(s.discovered) + " vertices, frontier " +
                         std::to_string(s.frontier)),
        stats(std::move(s)) {}
  BuildStats stats;
};

/// Flat store of fixed-length keys with an open-addressing index.
class KeyIndex {
 public:
  explicit KeyIndex(std::size_t key_length);

  std::size_t size() const { return count_; }
  std::size_t key_length() const { return len_; }
  std::span<std::uint32_t const> key(std::size_t i) const {
    return {data_.data() + i * len_, len_};
  }
  std::optional<std::uint32_t> find(std::span<std::uint32_t const> key) const;
  /// Index of `key`, adding it when new; `added` reports which.
  std::uint32_t insert(std::span<std::uint32_t const> key, bool &added);

  std::vector<std::uint32_t> release() { return std::move(data_); }

 private:
  std::size_t slot_for(std::span<std::uint32_t const> key) const;
  void grow();

  std::size_t len_;
  std::size_t count_ = 0;
  std::vector<std::uint32_t> data_;
  std::vector<std::uint32_t> slots_;
};

/// Cos(Y, H, HgH) with cosets stored by canonical key: the least serialized
/// element of the coset. Vertices are numbered in key order, so vertex 0 is
/// H itself.
struct CosetGraph {
  Graph graph;
  std::size_t key_length = 0;
  std::vector<std::uint32_t> keys;  // flat, sorted
  std::uint64_t h_order = 0;
  std::size_t valency = 0;
  std::string provenance;

  std::size_t order() const { return graph.order(); }
  std::span<std::uint32_t const> key(std::size_t v) const {
    return {keys.data() + v * key_length, key_length};
  }
  std::optional<std::uint32_t> find(std::span<std::uint32_t const> key) const;

  template <GroupArithmetic A>
  typename A::Element representative(A const &arith, std::size_t v) const {
    return arith.deserialize(key(v));
  }
};

/// Right cosets H x of an enumerated subgroup H.
template <GroupArithmetic A>
class CosetSpace {
 public:
  using Element = typename A::Element;

  CosetSpace(A const &arith, std::span<Element const> subgroup)
      : arith_(arith), subgroup_(subgroup.begin(), subgroup.end()) {
    if (subgroup_.empty()) throw std::invalid_argument("subgroup must be enumerated");
  }

  A const &arith() const { return arith_; }
  std::span<Element const> subgroup() const { return subgroup_; }

  /// Least serialize(h x) over h in H, written to `out`.
  void canonical(Element const &x, Key &out) const {
    out.clear();
    Key scratch;
    scratch.reserve(arith_.key_length());
    for (auto const &h : subgroup_) {
      scratch.clear();
      arith_.serialize(arith_.multiply(h, x), scratch);
      if (out.empty() || scratch < out) out.swap(scratch);
    }
  }

  Key canonical(Element const &x) const {
    Key k;
    canonical(x, k);
    return k;
  }

  bool in_subgroup(Element const &x) const {
    return canonical(x) == key_of(arith_, arith_.identity());
  }

 private:
  A const &arith_;
  std::vector<Element> subgroup_;
};

/// Right transversal of K in H: one representative per coset K t.
template <GroupArithmetic A>
std::vector<typename A::Element> right_transversal(A const &arith,
                                                   std::span<typename A::Element const> subgroup,
                                                   std::span<typename A::Element const> kernel) {
  CosetSpace<A> cosets(arith, kernel);
  std::unordered_set<Key, KeyHash> seen;
  std::vector<typename A::Element> reps;
  for (auto const &h : subgroup)
    if (seen.insert(cosets.canonical(h)).second) reps.push_back(h);
  return reps;
}

struct BuildOptions {
  std::size_t vertex_cap = kDefaultVertexCap;
  std::optional<std::uint64_t> predicted_vertices;
  Deadline deadline;
  std::string provenance;
};

/// Breadth-first construction of Cos(Y, H, HgH) from the coset H. The
/// neighbors of H x are H g t x for t in a right transversal of H cap H^g in
/// H. Requires g^2 in H and g outside H.
template <GroupArithmetic A>
CosetGraph build_coset_graph(A const &arith, std::span<typename A::Element const> h_elements,
                             typename A::Element const &g, BuildOptions const &options = {}) {
  using Element = typename A::Element;
  if (options.predicted_vertices && *options.predicted_vertices > options.vertex_cap)
    throw CapacityExceeded("predicted " + std::to_string(*options.predicted_vertices) +
                           " vertices exceed the vertex cap " + std::to_string(options.vertex_cap));
  CosetSpace<A> space(arith, h_elements);
  if (!space.in_subgroup(arith.multiply(g, g)))
    throw std::invalid_argument("g^2 does not lie in H");
  if (space.in_subgroup(g)) throw std::invalid_argument("g lies in H, so HgH = H");

  auto const kernel = conj_intersection(arith, h_elements, g);
  auto const transversal = right_transversal(arith, h_elements, std::span<Element const>(kernel));
  std::vector<Element> steps;
  for (auto const &t : transversal) steps.push_back(arith.multiply(g, t));
  auto const valency = steps.size();

  KeyIndex index(arith.key_length());
  std::vector<std::uint32_t> adjacency;  // valency entries per vertex
  Key key;
  bool added = false;
  space.canonical(arith.identity(), key);
  index.insert(key, added);

  for (std::size_t v = 0; v < index.size(); ++v) {
    if ((v & 255) == 0 && options.deadline.expired())
      throw PartialBuild({index.size(), v, index.size() - v, "time cap"});
    auto const x = arith.deserialize(index.key(v));
    for (auto const &step : steps) {
      space.canonical(arith.multiply(step, x), key);
      auto const w = index.insert(key, added);
      if (added && index.size() > options.vertex_cap)
        throw PartialBuild({index.size(), v, index.size() - v, "vertex cap"});
      adjacency.push_back(w);
    }
  }

  // Renumber by key so the result does not depend on discovery order.
  auto const n = index.size();
  std::vector<std::uint32_t> by_key(n);
  std::iota(by_key.begin(), by_key.end(), 0u);
  std::sort(by_key.begin(), by_key.end(), [&](std::uint32_t a, std::uint32_t b) {
    auto const ka = index.key(a), kb = index.key(b);
    return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
  });
  std::vector<std::uint32_t> new_id(n);
  for (std::uint32_t i = 0; i < n; ++i) new_id[by_key[i]] = i;

  CosetGraph result;
  result.key_length = index.key_length();
  result.keys.reserve(n * result.key_length);
  for (auto old : by_key) {
    auto const k = index.key(old);
    result.keys.insert(result.keys.end(), k.begin(), k.end());
  }
  std::vector<std::vector<std::uint32_t>> lists(n);
  for (std::uint32_t old = 0; old < n; ++old) {
    auto &row = lists[new_id[old]];
    row.reserve(valency);
    for (std::size_t i = 0; i < valency; ++i) row.push_back(new_id[adjacency[old * valency + i]]);
  }
  adjacency = {};
  result.graph = Graph::from_adjacency(lists);
  result.h_order = h_elements.size();
  result.valency = valency;
  result.provenance = options.provenance;
  return result;
}

struct ConnectivityReport {
  std::size_t graph_side = 0;    // vertices reachable from H
  std::uint64_t order_side = 0;  // |Y : H| from the group order
  bool connected = false;
};

/// Connected iff the search from H reaches all |Y : H| cosets.
ConnectivityReport verify_connected(CosetGraph const &graph, std::uint64_t index_in_y);

struct TwoArcReport {
  std::size_t h_order = 0;
  std::size_t intersection_order = 0;  // |H cap H^g|
  std::size_t valency = 0;             // |H : H cap H^g|
  bool two_transitive = false;
};

/// H acting on [H : H cap H^g] by right multiplication is 2-transitive.
template <GroupArithmetic A>
TwoArcReport verify_2at(A const &arith, std::span<typename A::Element const> h_elements,
                        typename A::Element const &g) {
  using Element = typename A::Element;
  TwoArcReport r;
  auto const kernel = conj_intersection(arith, h_elements, g);
  r.h_order = h_elements.size();
  r.intersection_order = kernel.size();
  auto const action = right_coset_action(arith, h_elements, std::span<Element const>(kernel));
  r.valency = action.empty() ? 0 : action.front().degree();
  r.two_transitive = r.valency >= 2 && is_2_transitive(action, r.valency);
  return r;
}

class NotNormal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoverCertificate {
  std::size_t cover_order = 0;
  std::size_t cover_valency = 0;
  Graph quotient;
  std::vector<std::uint32_t> orbit_of;  // per cover vertex
  std::size_t orbit_size = 0;           // 0 when orbits have unequal sizes
  bool local_bijective = false;
  std::optional<std::uint64_t> transformation_group_order;

  std::size_t quotient_order() const { return quotient.order(); }
};

/// Groups the vertices into orbits of N = <normal_gens> acting by right
/// multiplication, and checks that every vertex sees its neighbors in
/// distinct orbits other than its own. Throws NotNormal when the orbits are
/// not compatible with adjacency.
CoverCertificate quotient_from_orbits(Graph const &graph, std::vector<std::uint32_t> const &parent);

template <GroupArithmetic A>
CoverCertificate quotient_graph(A const &arith, std::span<typename A::Element const> h_elements,
                                CosetGraph const &cg,
                                std::span<typename A::Element const> normal_gens) {
  CosetSpace<A> space(arith, h_elements);
  auto const n = cg.order();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  Key key;
  for (std::uint32_t v = 0; v < n; ++v) {
    auto const x = cg.representative(arith, v);
    for (auto const &z : normal_gens) {
      space.canonical(arith.multiply(x, z), key);
      auto const w = cg.find(key);
      if (!w) throw std::invalid_argument("a generator moves a vertex outside the graph");
      auto a = find(v), b = find(*w);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  for (std::uint32_t v = 0; v < n; ++v) parent[v] = find(v);
  return quotient_from_orbits(cg.graph, parent);
}

/// C_Y(M): the elements of `y_elements` commuting with every generator of M.
template <GroupArithmetic A>
std::vector<typename A::Element> centralizer_in_small_Y(
    A const &arith, std::span<typename A::Element const> y_elements,
    std::span<typename A::Element const> m_gens) {
  std::vector<typename A::Element> result;
  for (auto const &u : y_elements) {
    bool commutes = true;
    for (auto const &z : m_gens)
      if (key_of(arith, arith.multiply(u, z)) != key_of(arith, arith.multiply(z, u))) {
        commutes = false;
        break;
      }
    if (commutes) result.push_back(u);
  }
  return result;
}

}  // namespace kcover
