#include "kcover/n_cycles.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace kcover {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

std::vector<Permutation> enumerate_n_cycles(std::size_t n) {
  if (n < 3) throw PermutationError("n-cycles are enumerated for n >= 3, got " + std::to_string(n));
  std::vector<Point> tail(n - 1);
  std::iota(tail.begin(), tail.end(), Point{2});
  std::vector<Permutation> cycles;
  cycles.reserve(factorial(n - 1));
  do {
    std::vector<Point> images(n);
    Point prev = 1;
    for (auto p : tail) {
      images[prev - 1] = p;
      prev = p;
    }
    images[prev - 1] = 1;
    cycles.emplace_back(std::move(images));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return cycles;
}

bool is_n_cycle(Permutation const &p) {
  auto type = p.cycle_type();
  return type.size() == 1 && p.degree() >= 2;
}

CycleClassIndex classify_Ok(Permutation const &alpha) {
  if (alpha.degree() < 3 || !is_n_cycle(alpha))
    throw PermutationError("not an n-cycle: " + alpha.to_cycles());
  std::size_t k = 1;
  for (Point p = alpha(1); p != 2; p = alpha(p)) ++k;
  return {k};
}

std::size_t permutation_rank(Permutation const &p) {
  // Lehmer code in the factorial number system.
  auto const n = p.degree();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    auto const pi = p(static_cast<Point>(i + 1));
    for (std::size_t j = i + 1; j < n; ++j)
      if (p(static_cast<Point>(j + 1)) < pi) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

std::size_t n_cycle_index(Permutation const &alpha) {
  auto const n = alpha.degree();
  // Sequence i2..in, then rank it as a permutation of {2..n}.
  std::size_t rank = 0;
  std::vector<Point> seq;
  seq.reserve(n - 1);
  for (Point p = alpha(1); p != 1; p = alpha(p)) seq.push_back(p);
  if (seq.size() != n - 1) throw PermutationError("not an n-cycle: " + alpha.to_cycles());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[j] < seq[i]) ++smaller;
    rank = rank * (seq.size() - i) + smaller;
  }
  return rank;
}

}  // namespace kcover
