#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "kcover/automorphism.hpp"
#include "kcover/group.hpp"
#include "kcover/permutation.hpp"

namespace kcover {

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outcome of searching for the (at most one) automorphism with prescribed
/// images of a generating set.
struct PhiCheck {
  std::optional<AutomorphismMap> witness;
  std::string route;           // "cayley" or "conjugation"
  bool cross_checked = false;  // both routes ran and agreed

  bool empty() const { return !witness.has_value(); }
};

/// phi(x) = x, phi(y) = y^-1.
PhiCheck phi1_check(GroupHandle const &group, Permutation const &x, Permutation const &y);

/// phi(yxy) = y^2 x, phi(y^2 x) = yxy, phi(x y^2) = y^-2 x. Throws
/// PreconditionError when the three sources do not generate T.
PhiCheck phi2_check(GroupHandle const &group, Permutation const &x, Permutation const &y);

/// d in {1, 3, 6} from the emptiness pattern of the two checks.
struct K4Criterion {
  PhiCheck phi1;
  std::optional<PhiCheck> phi2;  // only evaluated when phi1 is non-empty
  std::size_t d = 0;
};

K4Criterion k4_d_criterion(GroupHandle const &group, Permutation const &x, Permutation const &y);

/// Groups up to this order get the Cayley-extension cross-check when the
/// conjugation route applies.
inline constexpr std::uint64_t kCrossCheckOrderCap = 100'000;

/// Runs the conjugation route for natural alternating groups and the Cayley
/// route whenever the group is enumerated; when both run they must agree.
PhiCheck automorphism_check(GroupHandle const &group, std::span<Permutation const> sources,
                            std::span<Permutation const> targets);

}  // namespace kcover
