#include "kcover/automorphism.hpp"

#include <algorithm>

namespace kcover {

AutomorphismMap AutomorphismMap::from_lookup(GroupHandle group, std::vector<std::uint32_t> lookup) {
  if (!group.enumerated() || lookup.size() != group.order())
    throw AutomorphismError("lookup automorphism needs a lookup over the full enumeration");
  return AutomorphismMap(std::move(group), std::move(lookup), std::nullopt);
}

AutomorphismMap AutomorphismMap::from_conjugator(GroupHandle group, Permutation conjugator) {
  if (conjugator.degree() != group.degree())
    throw AutomorphismError("conjugator degree does not match the group");
  return AutomorphismMap(std::move(group), {}, std::move(conjugator));
}

Permutation AutomorphismMap::apply(Permutation const &t) const {
  if (conjugator_) return conjugate(t, *conjugator_);
  auto idx = group_.index_of(t);
  if (!idx) throw AutomorphismError("element " + t.to_cycles() + " is not in the group");
  return group_.elements()[lookup_[*idx]];
}

std::uint32_t AutomorphismMap::apply_index(std::uint32_t index) const {
  if (!lookup_.empty()) return lookup_[index];
  auto image = conjugate(group_.elements()[index], *conjugator_);
  return *group_.index_of(image);
}

std::vector<Permutation> AutomorphismMap::generator_images() const {
  std::vector<Permutation> images;
  for (auto const &g : group_.generators()) images.push_back(apply(g));
  return images;
}

std::vector<std::uint32_t> AutomorphismMap::to_lookup() const {
  if (!lookup_.empty()) return lookup_;
  std::vector<std::uint32_t> lookup(group_.order());
  for (std::uint32_t i = 0; i < lookup.size(); ++i) lookup[i] = apply_index(i);
  return lookup;
}

AutomorphismMap AutomorphismMap::inverse() const {
  if (conjugator_) return from_conjugator(group_, conjugator_->inverse());
  std::vector<std::uint32_t> inv(lookup_.size());
  for (std::uint32_t i = 0; i < lookup_.size(); ++i) inv[lookup_[i]] = i;
  return from_lookup(group_, std::move(inv));
}

AutomorphismMap AutomorphismMap::then(AutomorphismMap const &other) const {
  if (conjugator_ && other.conjugator_)
    return from_conjugator(group_, *conjugator_ * *other.conjugator_);
  auto first = to_lookup();
  auto second = other.to_lookup();
  for (auto &v : first) v = second[v];
  return from_lookup(group_, std::move(first));
}

std::optional<std::vector<std::uint32_t>> extend_by_cayley(GroupHandle const &group,
                                                           std::span<std::uint32_t const> sources,
                                                           std::span<std::uint32_t const> targets) {
  if (sources.size() != targets.size())
    throw AutomorphismError("sources and targets differ in length");
  auto const order = group.order();
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> phi(order, unset);
  std::vector<std::uint32_t> queue{0};
  phi[0] = 0;  // identity is index 0 in the sorted enumeration
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto const a = queue[head];
    for (std::size_t k = 0; k < sources.size(); ++k) {
      auto const next = group.multiply_index(a, sources[k]);
      auto const image = group.multiply_index(phi[a], targets[k]);
      if (phi[next] == unset) {
        phi[next] = image;
        queue.push_back(next);
      } else if (phi[next] != image) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != order) throw AutomorphismError("sources do not generate the group");
  std::vector<bool> hit(order, false);
  for (auto v : phi) {
    if (hit[v]) return std::nullopt;
    hit[v] = true;
  }
  return phi;
}

std::vector<Permutation> conjugating_permutations(std::span<Permutation const> sources,
                                                  std::span<Permutation const> targets,
                                                  std::size_t degree) {
  std::vector<Permutation> found;
  for (Point start = 1; start <= degree; ++start) {
    std::vector<Point> b(degree + 1, 0);
    b[1] = start;
    std::vector<Point> queue{1};
    bool ok = true;
    for (std::size_t head = 0; head < queue.size() && ok; ++head) {
      Point const q = queue[head];
      for (std::size_t k = 0; k < sources.size(); ++k) {
        Point const next = sources[k](q);
        Point const image = targets[k](b[q]);
        if (b[next] == 0) {
          b[next] = image;
          queue.push_back(next);
        } else if (b[next] != image) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    if (queue.size() != degree)
      throw AutomorphismError("sources are not transitive on the natural points");
    std::vector<bool> hit(degree + 1, false);
    for (Point p = 1; p <= degree && ok; ++p) {
      if (hit[b[p]]) ok = false;
      hit[b[p]] = true;
    }
    if (!ok) continue;
    found.emplace_back(std::vector<Point>(b.begin() + 1, b.end()));
  }
  return found;
}

namespace {

void check_generating(GroupHandle const &group, std::span<Permutation const> sources,
                      std::span<Permutation const> targets) {
  if (sources.size() != targets.size())
    throw AutomorphismError("sources and targets differ in length");
  for (auto const &s : sources)
    if (s.degree() != group.degree() || !group.contains(s))
      throw AutomorphismError("source " + s.to_cycles() + " is not in the group");
  if (group_order(sources, group.degree()) != group.order())
    throw AutomorphismError("sources do not generate the group");
}

bool all_in_group(GroupHandle const &group, std::span<Permutation const> targets) {
  return std::all_of(targets.begin(), targets.end(), [&](Permutation const &t) {
    return t.degree() == group.degree() && group.contains(t);
  });
}

}  // namespace

std::optional<AutomorphismMap> extend_by_conjugation(GroupHandle const &group,
                                                     std::span<Permutation const> sources,
                                                     std::span<Permutation const> targets) {
  check_generating(group, sources, targets);
  if (!group.is_natural_alternating())
    throw AutomorphismError("conjugation shortcut needs a natural alternating group");
  if (!all_in_group(group, targets)) return std::nullopt;
  auto found = conjugating_permutations(sources, targets, group.degree());
  if (found.empty()) return std::nullopt;
  if (found.size() > 1)
    throw AutomorphismError("generating set has a non-trivial centralizer in S_p");
  return AutomorphismMap::from_conjugator(group, std::move(found.front()));
}

std::optional<AutomorphismMap> extend_to_automorphism(GroupHandle const &group,
                                                      std::span<Permutation const> sources,
                                                      std::span<Permutation const> targets) {
  if (group.enumerated()) {
    check_generating(group, sources, targets);
    if (!all_in_group(group, targets)) return std::nullopt;
    std::vector<std::uint32_t> s, t;
    for (auto const &p : sources) s.push_back(*group.index_of(p));
    for (auto const &p : targets) t.push_back(*group.index_of(p));
    auto lookup = extend_by_cayley(group, s, t);
    if (!lookup) return std::nullopt;
    return AutomorphismMap::from_lookup(group, std::move(*lookup));
  }
  if (group.is_natural_alternating()) return extend_by_conjugation(group, sources, targets);
  throw AutomorphismError("group " + group.name() +
                          " is neither enumerated nor natural alternating");
}

}  // namespace kcover
