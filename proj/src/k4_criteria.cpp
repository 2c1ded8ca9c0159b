#include "kcover/k4_criteria.hpp"

#include <vector>

namespace kcover {

namespace {

bool same_map(AutomorphismMap const &a, AutomorphismMap const &b) {
  return a.generator_images() == b.generator_images();
}

}  // namespace

PhiCheck automorphism_check(GroupHandle const &input, std::span<Permutation const> sources,
                            std::span<Permutation const> targets) {
  PhiCheck result;
  GroupHandle group = input;
  if (!group.enumerated() && group.order() <= kCrossCheckOrderCap) group.enumerate();
  bool const conj = group.is_natural_alternating();
  bool const cayley = group.enumerated() && (!conj || group.order() <= kCrossCheckOrderCap);
  if (!conj && !cayley)
    throw AutomorphismError("no automorphism route for group " + group.name());

  std::optional<AutomorphismMap> via_conj, via_cayley;
  if (conj) via_conj = extend_by_conjugation(group, sources, targets);
  if (cayley) via_cayley = extend_to_automorphism(group, sources, targets);
  if (conj && cayley) {
    if (via_conj.has_value() != via_cayley.has_value() ||
        (via_conj && !same_map(*via_conj, *via_cayley)))
      throw std::logic_error("conjugation and Cayley routes disagree");
    result.cross_checked = true;
  }
  result.route = conj ? "conjugation" : "cayley";
  result.witness = conj ? std::move(via_conj) : std::move(via_cayley);
  return result;
}

PhiCheck phi1_check(GroupHandle const &group, Permutation const &x, Permutation const &y) {
  std::vector<Permutation> sources{x, y};
  std::vector<Permutation> targets{x, y.inverse()};
  return automorphism_check(group, sources, targets);
}

PhiCheck phi2_check(GroupHandle const &group, Permutation const &x, Permutation const &y) {
  auto const yxy = y * x * y;
  auto const y2x = y * y * x;
  auto const xy2 = x * y * y;
  auto const ym2x = y.inverse() * y.inverse() * x;
  std::vector<Permutation> sources{yxy, y2x, xy2};
  std::vector<Permutation> targets{y2x, yxy, ym2x};
  if (group_order(sources, group.degree()) != group.order())
    throw PreconditionError("yxy, y^2x and xy^2 do not generate T");
  return automorphism_check(group, sources, targets);
}

K4Criterion k4_d_criterion(GroupHandle const &group, Permutation const &x, Permutation const &y) {
  K4Criterion c;
  c.phi1 = phi1_check(group, x, y);
  if (c.phi1.empty()) {
    c.d = 6;
    return c;
  }
  c.phi2 = phi2_check(group, x, y);
  c.d = c.phi2->empty() ? 3 : 1;
  return c;
}

}  // namespace kcover
