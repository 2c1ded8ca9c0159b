#include "kcover/subdirect.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "kcover/n_cycles.hpp"

namespace kcover {

ElemId apply(AutomorphismMap const &phi, ElementPool const &pool, ElemId t) {
  if (phi.has_lookup()) return phi.lookup()[t];
  return pool.intern(conjugate(pool.element(t), *phi.conjugator()));
}

namespace {

/// Per-component view of a generating set of tuples.
class Components {
 public:
  Components(ElementPool const &pool, std::span<Tuple const> gens) : pool_(pool), gens_(gens) {
    if (gens.empty()) throw std::invalid_argument("subdirect decomposition needs generators");
    k_ = gens.front().size();
    for (auto const &z : gens)
      if (z.size() != k_) throw std::invalid_argument("tuples of unequal length");
    if (pool.enumerated()) {
      auto const order = pool.group().order();
      element_orders_.resize(order);
      for (ElemId t = 0; t < order; ++t) element_orders_[t] = order_of(pool.element(t));
    }
  }

  std::size_t k() const { return k_; }
  ElemId at(std::size_t gen, std::size_t component) const { return gens_[gen][component]; }

  std::uint64_t element_order(ElemId t) const {
    if (!element_orders_.empty()) return element_orders_[t];
    return pool_.order_of(t);
  }

  /// Positionwise element orders of rho_i(gens): equal for linked components.
  std::vector<std::uint64_t> signature(std::size_t i) const {
    std::vector<std::uint64_t> sig(gens_.size());
    for (std::size_t z = 0; z < gens_.size(); ++z) sig[z] = element_order(at(z, i));
    return sig;
  }

  /// Indices of generators whose i-th projections generate T, or nothing
  /// when the projection is a proper subgroup.
  std::optional<std::vector<std::size_t>> generating_subset(std::size_t i) const {
    auto const &group = pool_.group();
    std::vector<std::size_t> selected;
    if (pool_.enumerated()) {
      auto const order = group.order();
      std::vector<bool> member(order, false);
      member[0] = true;
      std::size_t size = 1;
      for (std::size_t z = 0; z < gens_.size() && size < order; ++z) {
        if (member[at(z, i)]) continue;
        selected.push_back(z);
        std::fill(member.begin(), member.end(), false);
        std::vector<ElemId> queue{0};
        member[0] = true;
        for (std::size_t head = 0; head < queue.size(); ++head)
          for (auto s : selected) {
            auto next = pool_.multiply(queue[head], at(s, i));
            if (!member[next]) {
              member[next] = true;
              queue.push_back(next);
            }
          }
        size = queue.size();
      }
      if (size < order) return std::nullopt;
      return selected;
    }
    std::vector<Permutation> perms;
    std::optional<StabilizerChain> chain;
    for (std::size_t z = 0; z < gens_.size(); ++z) {
      auto p = pool_.element(at(z, i));
      if (chain && chain->contains(p)) continue;
      if (!chain && p.is_identity()) continue;
      selected.push_back(z);
      perms.push_back(std::move(p));
      chain.emplace(perms, group.degree());
      if (chain->order() == group.order()) return selected;
    }
    return std::nullopt;
  }

  /// The automorphism linking component `from` to `to` on every generator,
  /// or nothing.
  std::optional<AutomorphismMap> link(std::size_t from, std::size_t to,
                                      std::vector<std::size_t> const &from_subset) const {
    auto const &group = pool_.group();
    std::optional<AutomorphismMap> phi;
    if (pool_.enumerated()) {
      std::vector<ElemId> sources, targets;
      for (auto z : from_subset) {
        sources.push_back(at(z, from));
        targets.push_back(at(z, to));
      }
      auto lookup = extend_by_cayley(group, sources, targets);
      if (!lookup) return std::nullopt;
      phi = AutomorphismMap::from_lookup(group, std::move(*lookup));
    } else if (group.is_natural_alternating()) {
      std::vector<Permutation> sources, targets;
      for (auto z : from_subset) {
        sources.push_back(pool_.element(at(z, from)));
        targets.push_back(pool_.element(at(z, to)));
      }
      auto found = conjugating_permutations(sources, targets, group.degree());
      if (found.empty()) return std::nullopt;
      if (found.size() > 1) throw AutomorphismError("linking automorphism is not unique");
      phi = AutomorphismMap::from_conjugator(group, std::move(found.front()));
    } else {
      throw AutomorphismError("linking needs an enumerated or natural alternating T");
    }
    for (std::size_t z = 0; z < gens_.size(); ++z)
      if (apply(*phi, pool_, at(z, from)) != at(z, to)) return std::nullopt;
    return phi;
  }

 private:
  ElementPool const &pool_;
  std::span<Tuple const> gens_;
  std::size_t k_ = 0;
  std::vector<std::uint64_t> element_orders_;
};

struct Outcome {
  std::optional<SubdirectStructure> structure;
  std::size_t failed_component = 0;
};

Outcome decompose(ElementPool const &pool, std::span<Tuple const> gens) {
  Components comps(pool, gens);
  auto const k = comps.k();
  std::vector<std::vector<std::size_t>> subsets(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto subset = comps.generating_subset(i);
    if (!subset) return {std::nullopt, i};
    subsets[i] = std::move(*subset);
  }

  SubdirectStructure s;
  s.k = k;
  s.block_of.assign(k, 0);
  s.links.assign(k, std::nullopt);
  std::vector<std::vector<std::uint64_t>> base_signatures;
  for (std::size_t j = 0; j < k; ++j) {
    auto sig = comps.signature(j);
    bool joined = false;
    for (std::size_t b = 0; b < s.blocks.size() && !joined; ++b) {
      if (base_signatures[b] != sig) continue;
      auto const base = s.blocks[b].front();
      if (auto phi = comps.link(base, j, subsets[base])) {
        s.blocks[b].push_back(j);
        s.block_of[j] = b;
        s.links[j] = std::move(phi);
        joined = true;
      }
    }
    if (!joined) {
      s.block_of[j] = s.blocks.size();
      s.blocks.push_back({j});
      base_signatures.push_back(std::move(sig));
    }
  }
  return {std::move(s), 0};
}

}  // namespace

SubdirectStructure subdirect_decompose(ElementPool const &pool, std::span<Tuple const> gens) {
  auto outcome = decompose(pool, gens);
  if (!outcome.structure)
    throw NotSubdirect(outcome.failed_component,
                       "projection onto component " + std::to_string(outcome.failed_component + 1) +
                           " does not generate T");
  return std::move(*outcome.structure);
}

bool membership(Tuple const &z, SubdirectStructure const &s, ElementPool const &pool) {
  if (z.size() != s.k) return false;
  for (std::size_t i = 0; i < s.k; ++i) {
    if (!s.links[i]) continue;
    auto const base = s.blocks[s.block_of[i]].front();
    if (apply(*s.links[i], pool, z[base]) != z[i]) return false;
  }
  return true;
}

bool structures_equal(SubdirectStructure const &s1, SubdirectStructure const &s2,
                      std::span<Tuple const> gens1, std::span<Tuple const> gens2,
                      ElementPool const &pool) {
  if (s1.k != s2.k || s1.blocks != s2.blocks) return false;
  for (auto const &z : gens1)
    if (!membership(z, s2, pool)) return false;
  for (auto const &z : gens2)
    if (!membership(z, s1, pool)) return false;
  return true;
}

namespace {

/// True when the kept generators project onto T^d at the base components,
/// i.e. they generate the whole of the group described by `full`.
bool generates_full(ElementPool const &pool, std::span<Tuple const> gens,
                    std::vector<std::size_t> const &kept, SubdirectStructure const &full) {
  if (kept.empty()) return false;
  std::vector<Tuple> restricted;
  restricted.reserve(kept.size());
  for (auto idx : kept) {
    Tuple t;
    t.reserve(full.d());
    for (std::size_t b = 0; b < full.d(); ++b) t.push_back(gens[idx][full.base(b)]);
    restricted.push_back(std::move(t));
  }
  auto outcome = decompose(pool, restricted);
  return outcome.structure && outcome.structure->d() == full.d();
}

}  // namespace

std::vector<std::size_t> prune_generators(ElementPool const &pool, std::span<Tuple const> gens,
                                          SubdirectStructure const &full) {
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> support(gens.size());
  for (std::size_t z = 0; z < gens.size(); ++z)
    support[z] = static_cast<std::size_t>(
        std::count_if(gens[z].begin(), gens[z].end(), [](ElemId t) { return t != 0; }));
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return support[a] > support[b]; });

  std::vector<std::size_t> kept;
  for (auto idx : order) {
    kept.push_back(idx);
    if (generates_full(pool, gens, kept, full)) break;
  }
  if (!generates_full(pool, gens, kept, full))
    throw std::logic_error("generators do not generate the decomposed group");

  for (std::size_t i = kept.size(); i-- > 0;) {
    auto trial = kept;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (generates_full(pool, gens, trial, full)) kept = std::move(trial);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

bool blocks_invariant_under(SubdirectStructure const &s, std::span<std::uint32_t const> action) {
  for (auto const &block : s.blocks) {
    auto const target = s.block_of[action[block.front()]];
    for (auto i : block)
      if (s.block_of[action[i]] != target) return false;
    if (s.blocks[target].size() != block.size()) return false;
  }
  return true;
}

std::string export_structure(SubdirectStructure const &s) {
  std::ostringstream out;
  out << "components " << s.k << "\nblocks " << s.d() << "\n";
  for (std::size_t b = 0; b < s.d(); ++b) {
    out << "block " << b + 1 << ":";
    for (auto i : s.blocks[b]) out << ' ' << i + 1;
    out << "\n";
  }
  for (std::size_t i = 0; i < s.k; ++i) {
    if (!s.links[i]) continue;
    out << "link " << s.base(s.block_of[i]) + 1 << " -> " << i + 1 << ":";
    for (auto const &img : s.links[i]->generator_images()) out << ' ' << img.to_cycles();
    out << "\n";
  }
  return out.str();
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

DValueReport d_report(SubdirectStructure const &s, std::size_t n) {
  DValueReport r;
  r.d = s.d();
  r.n = n;
  r.arity = factorial(n - 1);
  r.divides_arity = r.d > 0 && r.arity % r.d == 0;
  r.quotient = r.divides_arity ? r.arity / r.d : 0;
  r.bound_applicable = n >= 7;
  r.bound = (binomial(n, n / 2) + 1) / 2;
  r.bound_ok = !r.bound_applicable || r.d >= r.bound;
  return r;
}

}  // namespace kcover
