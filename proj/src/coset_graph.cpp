#include "kcover/coset_graph.hpp"

#include <limits>
#include <map>
#include <set>

namespace kcover {

namespace {

constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

std::size_t hash_key(std::span<std::uint32_t const> key) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto v : key) {
    h ^= v;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace

KeyIndex::KeyIndex(std::size_t key_length) : len_(key_length), slots_(1024, kEmpty) {
  if (key_length == 0) throw std::invalid_argument("keys must be non-empty");
}

std::size_t KeyIndex::slot_for(std::span<std::uint32_t const> key) const {
  auto const mask = slots_.size() - 1;
  for (auto s = hash_key(key) & mask;; s = (s + 1) & mask) {
    if (slots_[s] == kEmpty) return s;
    auto const stored = this->key(slots_[s]);
    if (std::equal(stored.begin(), stored.end(), key.begin())) return s;
  }
}

std::optional<std::uint32_t> KeyIndex::find(std::span<std::uint32_t const> key) const {
  if (key.size() != len_) return std::nullopt;
  auto const s = slot_for(key);
  if (slots_[s] == kEmpty) return std::nullopt;
  return slots_[s];
}

std::uint32_t KeyIndex::insert(std::span<std::uint32_t const> key, bool &added) {
  if (key.size() != len_) throw std::invalid_argument("key has the wrong length");
  auto s = slot_for(key);
  if (slots_[s] != kEmpty) {
    added = false;
    return slots_[s];
  }
  if (count_ + 1 >= kEmpty) throw CapacityExceeded("key index is full");
  added = true;
  data_.insert(data_.end(), key.begin(), key.end());
  auto const id = static_cast<std::uint32_t>(count_++);
  slots_[s] = id;
  if (2 * count_ > slots_.size()) grow();
  return id;
}

void KeyIndex::grow() {
  slots_.assign(slots_.size() * 2, kEmpty);
  auto const mask = slots_.size() - 1;
  for (std::uint32_t id = 0; id < count_; ++id) {
    auto s = hash_key(key(id)) & mask;
    while (slots_[s] != kEmpty) s = (s + 1) & mask;
    slots_[s] = id;
  }
}

std::optional<std::uint32_t> CosetGraph::find(std::span<std::uint32_t const> k) const {
  if (k.size() != key_length) return std::nullopt;
  std::size_t lo = 0, hi = order();
  while (lo < hi) {
    auto const mid = (lo + hi) / 2;
    auto const m = key(mid);
    if (std::lexicographical_compare(m.begin(), m.end(), k.begin(), k.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < order() && std::ranges::equal(key(lo), k)) return static_cast<std::uint32_t>(lo);
  return std::nullopt;
}

ConnectivityReport verify_connected(CosetGraph const &graph, std::uint64_t index_in_y) {
  ConnectivityReport r;
  r.graph_side = graph.order() == 0 ? 0 : component_size(graph.graph, 0);
  r.order_side = index_in_y;
  r.connected = r.graph_side == r.order_side;
  return r;
}

CoverCertificate quotient_from_orbits(Graph const &graph, std::vector<std::uint32_t> const &parent) {
  auto const n = graph.order();
  if (parent.size() != n) throw std::invalid_argument("orbit labels do not cover the graph");
  CoverCertificate c;
  c.cover_order = n;
  c.cover_valency = graph.valency().value_or(0);

  // Orbit labels numbered by least member.
  std::map<std::uint32_t, std::uint32_t> label_of_root;
  c.orbit_of.resize(n);
  for (std::uint32_t v = 0; v < n; ++v)
    c.orbit_of[v] = label_of_root.try_emplace(parent[v], static_cast<std::uint32_t>(label_of_root.size()))
                        .first->second;
  auto const m = label_of_root.size();

  std::vector<std::size_t> sizes(m, 0);
  for (auto l : c.orbit_of) ++sizes[l];
  c.orbit_size = std::all_of(sizes.begin(), sizes.end(), [&](std::size_t s) { return s == sizes[0]; })
                     ? sizes.front()
                     : 0;

  // N acts by graph automorphisms, so members of one orbit see the same
  // multiset of neighboring orbits.
  std::vector<std::optional<std::vector<std::uint32_t>>> profile(m);
  std::vector<std::set<std::uint32_t>> quotient_rows(m);
  c.local_bijective = true;
  std::vector<std::uint32_t> seen;
  for (std::uint32_t v = 0; v < n; ++v) {
    seen.clear();
    for (auto w : graph.neighbors(v)) seen.push_back(c.orbit_of[w]);
    std::sort(seen.begin(), seen.end());
    auto const own = c.orbit_of[v];
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end() ||
        std::binary_search(seen.begin(), seen.end(), own))
      c.local_bijective = false;
    if (!profile[own])
      profile[own] = seen;
    else if (*profile[own] != seen)
      throw NotNormal("orbit partition is not compatible with adjacency at vertex " +
                      std::to_string(v));
    for (auto l : seen)
      if (l != own) quotient_rows[own].insert(l);
  }
  std::vector<std::vector<std::uint32_t>> lists(m);
  for (std::size_t l = 0; l < m; ++l) lists[l].assign(quotient_rows[l].begin(), quotient_rows[l].end());
  c.quotient = Graph::from_adjacency(lists);
  return c;
}

}  // namespace kcover
