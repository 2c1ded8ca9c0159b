#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "kcover/k4_criteria.hpp"
#include "kcover/subdirect.hpp"

using namespace kcover;

namespace {

std::vector<std::vector<std::size_t>> listing_blocks(SubdirectStructure const &s) {
  std::vector<std::vector<std::size_t>> out;
  for (auto const &block : s.blocks) {
    std::vector<std::size_t> b;
    for (auto i : block)
      b.push_back(static_cast<std::size_t>(
                      std::find(kK4ListingOrder.begin(), kK4ListingOrder.end(), i) -
                      kK4ListingOrder.begin()) +
                  1);
    std::sort(b.begin(), b.end());
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Decomposed {
  Construction c;
  std::vector<Tuple> tuples;
  SubdirectStructure s;
};

Decomposed decompose_job(ConstructionJob job) {
  auto c = build_construction(std::move(job));
  auto tuples = fixture::base_tuples(fixture::kernel_generators(c));
  auto s = subdirect_decompose(c.wreath().pool(), tuples);
  return {std::move(c), std::move(tuples), std::move(s)};
}

}  // namespace

TEST(Subdirect, FullDiagonalForTheFiveCycle) {
  auto const d = decompose_job(fixture::a5_job(4));
  EXPECT_EQ(d.s.d(), 1u);
  EXPECT_EQ(d.s.blocks.front().size(), 6u);
}

TEST(Subdirect, ThreeBlocksForTheThreeCycle) {
  auto const d = decompose_job(fixture::a5_job(4, "(1,5,3)"));
  EXPECT_EQ(d.s.d(), 3u);
  EXPECT_EQ(listing_blocks(d.s),
            (std::vector<std::vector<std::size_t>>{{1, 2}, {3, 4}, {5, 6}}));
}

TEST(Subdirect, SixBlocksForA11) {
  ConstructionJob job{4, GroupCatalog::builtin().group("A11"), parse_cycles("(1,2)(3,6)", 11),
                      parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", 11)};
  auto const d = decompose_job(job);
  EXPECT_EQ(d.s.d(), 6u);
  EXPECT_FALSE(d.c.wreath().pool().enumerated());
}

TEST(Subdirect, KernelAndCayleyGeneratorsAgree) {
  for (auto const *y : {"(1,2,3,4,5)", "(1,5,3)"}) {
    auto const d = decompose_job(fixture::a5_job(4, y));
    auto const k = k4_cayley_generators(d.c);
    std::vector<Tuple> t{k.t1.base, k.t2.base, k.t3.base};
    auto const st = subdirect_decompose(d.c.wreath().pool(), t);
    EXPECT_TRUE(structures_equal(d.s, st, d.tuples, t, d.c.wreath().pool())) << y;
  }
}

TEST(Subdirect, BlocksAreInvariantUnderTheTopGroup) {
  auto const d = decompose_job(fixture::a5_job(4, "(1,5,3)"));
  for (auto const &gen : d.c.y_generators)
    EXPECT_TRUE(blocks_invariant_under(d.s, d.c.wreath().induced(gen.sigma)));
  std::vector<std::uint32_t> bad{0, 2, 1, 3, 4, 5};
  // Swapping components of different blocks breaks invariance unless it
  // happens to map blocks onto blocks.
  auto const swapped = blocks_invariant_under(d.s, bad);
  EXPECT_EQ(swapped, d.s.block_of[0] == d.s.block_of[1] || d.s.block_of[1] == d.s.block_of[2]);
}

TEST(Subdirect, RejectsProjectionsOntoProperSubgroups) {
  auto const c = build_construction(fixture::a5_job(4));
  auto const &pool = c.wreath().pool();
  auto const x = pool.intern(parse_cycles("(1,2)(3,4)", 5));
  auto const y = pool.intern(parse_cycles("(1,2,3,4,5)", 5));
  std::vector<Tuple> tuples{{x, 0, y}, {y, 0, x}};
  try {
    subdirect_decompose(pool, tuples);
    FAIL();
  } catch (NotSubdirect const &e) {
    EXPECT_EQ(e.component, 1u);
  }
}

TEST(Subdirect, SyntheticDiagonal) {
  auto const c = build_construction(fixture::a5_job(4));
  auto const &pool = c.wreath().pool();
  auto const &group = pool.group();
  // Component 1 is component 0 twisted by conjugation with (1,2,3); component 2 is free.
  auto const b = parse_cycles("(1,2,3)", 5);
  auto const gens = group.generators();
  std::vector<Tuple> tuples;
  for (std::size_t i = 0; i < gens.size(); ++i)
    tuples.push_back({pool.intern(gens[i]), pool.intern(conjugate(gens[i], b)),
                      pool.intern(gens[1 - i])});
  auto const s = subdirect_decompose(pool, tuples);
  ASSERT_EQ(s.d(), 2u);
  EXPECT_EQ(s.blocks[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(s.blocks[1], (std::vector<std::size_t>{2}));
  ASSERT_TRUE(s.links[1]);
  EXPECT_EQ(s.links[1]->apply(parse_cycles("(1,4)(2,5)", 5)),
            conjugate(parse_cycles("(1,4)(2,5)", 5), b));
  for (auto const &t : tuples) EXPECT_TRUE(membership(t, s, pool));
  Tuple off{tuples[0][0], tuples[0][0], tuples[0][2]};
  EXPECT_FALSE(membership(off, s, pool));
}

TEST(SubdirectProperty, LinkingIsAnEquivalence) {
  std::mt19937_64 rng(fixture::kSeed);
  for (auto const *y : {"(1,2,3,4,5)", "(1,5,3)"}) {
    auto const d = decompose_job(fixture::a5_job(4, y));
    auto const &pool = d.c.wreath().pool();
    auto const &group = pool.group();
    auto link_of = [&](std::size_t i) {
      return d.s.links[i] ? *d.s.links[i]
                          : AutomorphismMap::from_conjugator(group, Permutation(group.degree()));
    };
    for (std::size_t i = 0; i < d.s.k; ++i)
      for (std::size_t j = 0; j < d.s.k; ++j) {
        bool const same = d.s.block_of[i] == d.s.block_of[j];
        // i -> base -> j, built from the stored links.
        auto const phi = link_of(i).inverse().then(link_of(j));
        bool linked = true;
        for (auto const &t : d.tuples)
          if (apply(phi, pool, t[i]) != t[j]) linked = false;
        EXPECT_EQ(linked, same) << y << " " << i << " " << j;
        if (same) {
          for (int s = 0; s < 50; ++s) {
            std::uint32_t a = rng() % 60, b = rng() % 60;
            ASSERT_EQ(phi.apply_index(group.multiply_index(a, b)),
                      group.multiply_index(phi.apply_index(a), phi.apply_index(b)));
          }
        }
      }
  }
}

TEST(Subdirect, PruningKeepsTheGroup) {
  auto const d = decompose_job(fixture::a5_job(4, "(1,5,3)"));
  auto const kept = prune_generators(d.c.wreath().pool(), d.tuples, d.s);
  EXPECT_LT(kept.size(), d.tuples.size());
  std::vector<Tuple> subset;
  for (auto i : kept) subset.push_back(d.tuples[i]);
  auto const again = subdirect_decompose(d.c.wreath().pool(), subset);
  EXPECT_TRUE(structures_equal(d.s, again, d.tuples, subset, d.c.wreath().pool()));
}

TEST(Subdirect, ExportIsOneBased) {
  auto const d = decompose_job(fixture::a5_job(4, "(1,5,3)"));
  auto const text = export_structure(d.s);
  EXPECT_EQ(text.rfind("components 6\nblocks 3\n", 0), 0u);
  EXPECT_NE(text.find("link "), std::string::npos);
}

TEST(DValue, ReportArithmetic) {
  EXPECT_EQ(binomial(7, 3), 35u);
  EXPECT_EQ(binomial(8, 4), 70u);
  EXPECT_EQ(binomial(3, 5), 0u);
  SubdirectStructure s;
  s.k = 720;
  s.blocks.assign(360, {0, 1});
  auto const r = d_report(s, 7);
  EXPECT_TRUE(r.divides_arity);
  EXPECT_EQ(r.quotient, 2u);
  EXPECT_EQ(r.bound, 18u);
  EXPECT_TRUE(r.ok());
  s.blocks.assign(7, {0});
  EXPECT_FALSE(d_report(s, 7).ok());
}

TEST(K4Criterion, ExampleValues) {
  auto const a5 = GroupCatalog::builtin().group("A5");
  auto const x = parse_cycles("(1,2)(3,4)", 5);
  auto const one = k4_d_criterion(a5, x, parse_cycles("(1,2,3,4,5)", 5));
  EXPECT_EQ(one.d, 1u);
  EXPECT_TRUE(one.phi1.cross_checked);
  auto const three = k4_d_criterion(a5, x, parse_cycles("(1,5,3)", 5));
  EXPECT_EQ(three.d, 3u);
  ASSERT_TRUE(three.phi2);
  EXPECT_TRUE(three.phi2->empty());
  auto const a13 = GroupCatalog::builtin().group("A13");
  auto const six = k4_d_criterion(a13, parse_cycles("(1,2)(3,6)", 13),
                                  parse_cycles("(1,2,3,4,5,6,7,8,9,10,11,12,13)", 13));
  EXPECT_EQ(six.d, 6u);
  EXPECT_EQ(six.phi1.route, "conjugation");
}
