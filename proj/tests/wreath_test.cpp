#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "kcover/n_cycles.hpp"
#include "kcover/structure_checks.hpp"
#include "kcover/wreath.hpp"

using namespace kcover;

TEST(NCycles, CanonicalOrderForFourPoints) {
  auto const cycles = enumerate_n_cycles(4);
  ASSERT_EQ(cycles.size(), 6u);
  std::vector<std::string> names;
  for (auto const &c : cycles) names.push_back(c.to_cycles());
  EXPECT_EQ(names, (std::vector<std::string>{"(1,2,3,4)", "(1,2,4,3)", "(1,3,2,4)", "(1,3,4,2)",
                                             "(1,4,2,3)", "(1,4,3,2)"}));
  for (std::size_t i = 0; i < cycles.size(); ++i) EXPECT_EQ(n_cycle_index(cycles[i]), i);
  EXPECT_THROW(enumerate_n_cycles(2), PermutationError);
}

TEST(NCycles, ListingOrderOfTheK4Tuples) {
  auto const cycles = enumerate_n_cycles(4);
  std::vector<std::string> listing;
  for (auto i : kK4ListingOrder) listing.push_back(cycles[i].to_cycles());
  EXPECT_EQ(listing, (std::vector<std::string>{"(1,2,3,4)", "(1,4,3,2)", "(1,2,4,3)", "(1,3,4,2)",
                                               "(1,3,2,4)", "(1,4,2,3)"}));
}

TEST(NCycles, ClassIndex) {
  EXPECT_EQ(classify_Ok(parse_cycles("(1,2,3,4,5)", 5)).k, 1u);
  EXPECT_EQ(classify_Ok(parse_cycles("(1,5,4,3,2)", 5)).k, 4u);
  EXPECT_EQ(classify_Ok(parse_cycles("(1,3,2,4,5)", 5)).k, 2u);
  EXPECT_TRUE(is_n_cycle(parse_cycles("(1,3,2,4,5)", 5)));
  EXPECT_FALSE(is_n_cycle(parse_cycles("(1,3)(2,4,5)", 5)));
}

TEST(NCycles, ClassesPartitionAndSwap) {
  for (std::size_t n = 4; n <= 8; ++n) {
    auto const r = cycle_class_check(n);
    EXPECT_TRUE(r.ok()) << "n = " << n;
    EXPECT_EQ(r.class_sizes, std::vector<std::size_t>(n - 1, factorial(n - 2)));
  }
}

TEST(NCyclesProperty, ConjugationIsARightAction) {
  std::mt19937_64 rng(fixture::kSeed);
  for (std::size_t n = 4; n <= 7; ++n) {
    auto const cycles = enumerate_n_cycles(n);
    for (int i = 0; i < 300; ++i) {
      auto const s = fixture::random_permutation(rng, n);
      auto const t = fixture::random_permutation(rng, n);
      auto const &a = cycles[rng() % cycles.size()];
      ASSERT_EQ(conjugate(a, s * t), conjugate(conjugate(a, s), t));
      ASSERT_TRUE(is_n_cycle(conjugate(a, s)));
      ASSERT_EQ(conjugate(a, Permutation(n)), a);
    }
  }
}

class WreathA5 : public ::testing::Test {
 protected:
  WreathA5() : c(build_construction(fixture::a5_job(4))) {}
  Construction c;
  WreathContext const &ctx() const { return c.wreath(); }
};

TEST_F(WreathA5, FunctionF) {
  auto const &pool = ctx().pool();
  auto const listing = to_k4_listing(c.f.base);
  std::vector<std::string> got;
  for (auto id : listing) got.push_back(pool.element(id).to_cycles());
  EXPECT_EQ(got, (std::vector<std::string>{"(1,2,3,4,5)", "(1,5,4,3,2)", "(1,2,3,4,5)",
                                           "(1,5,4,3,2)", "(1,2)(3,4)", "(1,2)(3,4)"}));
}

TEST_F(WreathA5, IdentitiesOfG) {
  EXPECT_TRUE(g_identity_check(c).ok());
  EXPECT_EQ(ctx().multiply(c.g, c.g), ctx().identity());
  auto const s = s_element(c);
  EXPECT_TRUE(s.in_base());
  EXPECT_TRUE(s_element_check(c).ok());
}

TEST_F(WreathA5, CayleyTuplesMatchTheStatedLiterals) {
  auto const job = fixture::a5_job(4);
  auto const r = k4_literal_check(c, job);
  for (auto const &m : r.mismatches) ADD_FAILURE() << m;
  EXPECT_TRUE(r.ok());
}

TEST_F(WreathA5, InducedActionOnTheListing) {
  EXPECT_EQ(k4_index_action(ctx(), parse_cycles("(3,4)", 4)), parse_cycles("(1,3)(2,4)(5,6)", 6));
  EXPECT_EQ(k4_index_action(ctx(), parse_cycles("(1,2)", 4)), parse_cycles("(1,4)(2,3)(5,6)", 6));
}

TEST_F(WreathA5, SerializeRoundTrip) {
  std::mt19937_64 rng(fixture::kSeed);
  for (int i = 0; i < 200; ++i) {
    auto const a = fixture::random_wreath(rng, ctx());
    ASSERT_EQ(ctx().deserialize(key_of(ctx(), a)), a);
  }
  EXPECT_THROW(ctx().deserialize(std::vector<std::uint32_t>(3, 0)), std::invalid_argument);
}

TEST_F(WreathA5, GroupLawsOnRandomTriples) {
  std::mt19937_64 rng(fixture::kSeed);
  auto const &w = ctx();
  for (int i = 0; i < 10000; ++i) {
    auto const a = fixture::random_wreath(rng, w);
    auto const b = fixture::random_wreath(rng, w);
    auto const cc = fixture::random_wreath(rng, w);
    ASSERT_EQ(w.multiply(w.multiply(a, b), cc), w.multiply(a, w.multiply(b, cc)));
    ASSERT_EQ(w.multiply(a, w.inverse(a)), w.identity());
    ASSERT_EQ(w.multiply(w.inverse(a), a), w.identity());
    ASSERT_EQ(w.multiply(a, w.identity()), a);
  }
}

TEST_F(WreathA5, InducedRowsComposeAsAnAction) {
  std::mt19937_64 rng(fixture::kSeed);
  for (int i = 0; i < 200; ++i) {
    auto const s = fixture::random_permutation(rng, 4);
    auto const t = fixture::random_permutation(rng, 4);
    auto const rs = ctx().induced(s), rt = ctx().induced(t), rst = ctx().induced(s * t);
    for (std::size_t a = 0; a < rs.size(); ++a) ASSERT_EQ(rst[a], rt[rs[a]]);
  }
}

TEST(Wreath, LargerDegreesRejected) {
  auto pool = std::make_shared<ElementPool const>(GroupCatalog::builtin().group("A5"));
  EXPECT_THROW(WreathContext(kMaxWreathDegree + 1, pool), std::invalid_argument);
  EXPECT_NO_THROW(WreathContext(5, pool));
}

TEST(Wreath, IdentitiesForLargerN) {
  for (std::size_t n = 4; n <= 7; ++n) {
    auto const c = build_construction(fixture::a5_job(n));
    auto const g = g_identity_check(c);
    EXPECT_TRUE(g.ok()) << n;
    EXPECT_EQ(g.intersection_order, factorial(n - 2));
    auto const s = s_element_check(c);
    EXPECT_TRUE(s.ok()) << n;
    EXPECT_EQ(s.generated_order, 60u);
    EXPECT_EQ(s.beta_checked, n >= 7);
  }
}

TEST(Validation, RejectsBadJobs) {
  auto job = fixture::a5_job(4);
  EXPECT_TRUE(validate_job(job).ok());
  job.y = parse_cycles("(1,2)(3,4)", 5);
  EXPECT_FALSE(validate_job(job).ok());
  job = fixture::a5_job(3);
  EXPECT_FALSE(validate_job(job).ok());
  job = fixture::a5_job(4, "(1,2,3)");
  auto const r = validate_job(job);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.problems.front().find("not all of T"), std::string::npos);
  EXPECT_THROW(build_construction(job), std::invalid_argument);
}

TEST(Words, Evaluation) {
  auto const x = parse_cycles("(1,2)(3,4)", 5), y = parse_cycles("(1,2,3,4,5)", 5);
  EXPECT_EQ(evaluate_word("yxy", x, y), y * x * y);
  EXPECT_EQ(evaluate_word("y^-2x", x, y), y.inverse() * y.inverse() * x);
  EXPECT_EQ(evaluate_word("", x, y), Permutation(5));
  EXPECT_THROW(evaluate_word("z", x, y), std::invalid_argument);
  EXPECT_THROW(evaluate_word("y^", x, y), std::invalid_argument);
}
