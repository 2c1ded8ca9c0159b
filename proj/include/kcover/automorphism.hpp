#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <span>
#include <vector>

#include "kcover/group.hpp"
#include "kcover/permutation.hpp"

namespace kcover {

/// Automorphism of an enumerated group as a total lookup on element indices,
/// or, for a natural alternating group, as conjugation by a permutation.
class AutomorphismMap {
 public:
  static AutomorphismMap from_lookup(GroupHandle group, std::vector<std::uint32_t> lookup);
  static AutomorphismMap from_conjugator(GroupHandle group, Permutation conjugator);

  GroupHandle const &group() const { return group_; }
  bool has_lookup() const { return !lookup_.empty(); }
  std::span<std::uint32_t const> lookup() const { return lookup_; }
  std::optional<Permutation> const &conjugator() const { return conjugator_; }

  Permutation apply(Permutation const &t) const;
  /// Requires an enumerated group.
  std::uint32_t apply_index(std::uint32_t index) const;

  /// Images of the group's generators; identical images mean identical maps.
  std::vector<Permutation> generator_images() const;

  /// Lookup over the full enumeration, materialized from either form.
  std::vector<std::uint32_t> to_lookup() const;

  AutomorphismMap inverse() const;
  /// this then other: t -> other(this(t)).
  AutomorphismMap then(AutomorphismMap const &other) const;

 private:
  AutomorphismMap(GroupHandle group, std::vector<std::uint32_t> lookup,
                  std::optional<Permutation> conjugator)
      : group_(std::move(group)), lookup_(std::move(lookup)), conjugator_(std::move(conjugator)) {}

  GroupHandle group_;
  std::vector<std::uint32_t> lookup_;
  std::optional<Permutation> conjugator_;
};

class AutomorphismError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Extension over the Cayley graph of an enumerated group: phi(1) = 1 and
/// phi(a s_k) = phi(a) t_k. Returns the lookup when the propagation is
/// consistent and bijective. Arguments are element indices; the sources must
/// generate the group.
std::optional<std::vector<std::uint32_t>> extend_by_cayley(GroupHandle const &group,
                                                           std::span<std::uint32_t const> sources,
                                                           std::span<std::uint32_t const> targets);

/// All permutations b of the natural points with s_k^b = t_k for every k.
/// Requires <sources> transitive; each candidate is fixed by the image of
/// point 1, so at most `degree` candidates are tried.
std::vector<Permutation> conjugating_permutations(std::span<Permutation const> sources,
                                                  std::span<Permutation const> targets,
                                                  std::size_t degree);

/// The unique automorphism of `group` with sources[k] -> targets[k], or
/// nothing if there is none. Uses the Cayley extension when the group is
/// enumerated and the S_p-conjugation shortcut for a natural alternating
/// group otherwise.
std::optional<AutomorphismMap> extend_to_automorphism(GroupHandle const &group,
                                                      std::span<Permutation const> sources,
                                                      std::span<Permutation const> targets);

/// Forces the S_p-conjugation route; the group must be natural alternating.
std::optional<AutomorphismMap> extend_by_conjugation(GroupHandle const &group,
                                                     std::span<Permutation const> sources,
                                                     std::span<Permutation const> targets);

}  // namespace kcover
