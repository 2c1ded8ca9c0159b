#pragma once

#include <random>
#include <string>
#include <vector>

#include "kcover/catalog.hpp"
#include "kcover/construction.hpp"
#include "kcover/n_cycles.hpp"
#include "kcover/schreier.hpp"
#include "kcover/subdirect.hpp"

namespace kcover::fixture {

inline constexpr std::uint64_t kSeed = 20240611;

inline ConstructionJob a5_job(std::size_t n, char const *y = "(1,2,3,4,5)") {
  return {n, GroupCatalog::builtin().group("A5"), parse_cycles("(1,2)(3,4)", 5), parse_cycles(y, 5)};
}

inline std::vector<WreathElement> kernel_generators(Construction const &c) {
  auto const &ctx = c.wreath();
  return schreier_kernel_generators(
      ctx, std::span<WreathElement const>(c.y_generators),
      [](WreathElement const &e) { return e.sigma; }, ctx.n(), factorial(ctx.n()));
}

inline std::vector<Tuple> base_tuples(std::vector<WreathElement> const &elements) {
  std::vector<Tuple> out;
  for (auto const &e : elements) out.push_back(e.base);
  return out;
}

inline Permutation random_permutation(std::mt19937_64 &rng, std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i + 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

inline WreathElement random_wreath(std::mt19937_64 &rng, WreathContext const &ctx) {
  std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(ctx.pool().group().order() - 1));
  std::vector<ElemId> base(ctx.arity());
  for (auto &b : base) b = pick(rng);
  return {base, random_permutation(rng, ctx.n())};
}

}  // namespace kcover::fixture
