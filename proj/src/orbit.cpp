#include "kcover/orbit.hpp"

#include <set>

namespace kcover {

bool is_2_transitive(std::span<Permutation const> elements, std::size_t points) {
  if (points < 2) throw std::invalid_argument("2-transitivity needs at least 2 points");
  std::set<std::pair<Point, Point>> pairs;
  for (auto const &e : elements) {
    if (e.degree() != points) throw PermutationError("element degree does not match point count");
    pairs.emplace(e(1), e(2));
  }
  return pairs.size() == points * (points - 1);
}

}  // namespace kcover
