#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "kcover/permutation.hpp"

using namespace kcover;

TEST(Permutation, ParsesCycleNotation) {
  auto const p = parse_cycles("(1,2,3)(4,5)", 6);
  EXPECT_EQ(p(1), 2);
  EXPECT_EQ(p(3), 1);
  EXPECT_EQ(p(5), 4);
  EXPECT_EQ(p(6), 6);
  EXPECT_EQ(p.to_cycles(), "(1,2,3)(4,5)");
  EXPECT_TRUE(parse_cycles("()", 4).is_identity());
  EXPECT_TRUE(parse_cycles("", 4).is_identity());
  EXPECT_THROW(parse_cycles("(1, 2)", 3), PermutationError);
}

TEST(Permutation, RejectsMalformedInput) {
  EXPECT_THROW(parse_cycles("(1,2,1)", 4), PermutationError);
  EXPECT_THROW(parse_cycles("(1,5)", 4), PermutationError);
  EXPECT_THROW(parse_cycles("(1,2", 4), PermutationError);
  EXPECT_THROW(parse_cycles("1,2)", 4), PermutationError);
  EXPECT_THROW(parse_cycles("(1,2)(2,3)", 4), PermutationError);
  EXPECT_THROW(parse_cycles("(1,99999999999)", 4), PermutationError);
  EXPECT_THROW(Permutation({1, 1, 2}), PermutationError);
}

TEST(Permutation, ErrorNamesTheToken) {
  try {
    parse_cycles("(1,7)", 5);
    FAIL();
  } catch (PermutationError const &e) {
    EXPECT_NE(std::string(e.what()).find('7'), std::string::npos);
  }
}

TEST(Permutation, RightActionProduct) {
  auto const a = parse_cycles("(1,2)", 3);
  auto const b = parse_cycles("(2,3)", 3);
  // 1 -a-> 2 -b-> 3
  EXPECT_EQ((a * b)(1), 3);
  EXPECT_EQ((a * b).to_cycles(), "(1,3,2)");
  EXPECT_THROW(compose(Permutation(3), Permutation(4)), PermutationError);
}

TEST(Permutation, ConjugationRelabelsCycles) {
  auto const alpha = parse_cycles("(1,2,3,4)", 4);
  auto const sigma = parse_cycles("(1,2)", 4);
  EXPECT_EQ(conjugate(alpha, sigma), parse_cycles("(2,1,3,4)", 4));
  EXPECT_EQ(conjugate(alpha, sigma), sigma.inverse() * alpha * sigma);
}

TEST(Permutation, OrdersAndPowers) {
  auto const p = parse_cycles("(1,2,3)(4,5)", 5);
  EXPECT_EQ(order_of(p), 6u);
  EXPECT_TRUE(p.pow(6).is_identity());
  EXPECT_EQ(p.pow(-1), p.inverse());
  EXPECT_EQ(p.pow(7), p);
  EXPECT_EQ(p.first_moved(), 1);
  EXPECT_EQ(Permutation(5).first_moved(), 0);
  auto type = p.cycle_type();
  std::sort(type.begin(), type.end());
  EXPECT_EQ(type, (std::vector<std::size_t>{2, 3}));
}

TEST(Permutation, StreamsInCycleNotation) {
  std::ostringstream out;
  out << parse_cycles("(2,4)", 4);
  EXPECT_EQ(out.str(), "(2,4)");
}

TEST(PermutationProperty, GroupLawsOnRandomTriples) {
  std::mt19937_64 rng(fixture::kSeed);
  for (int i = 0; i < 10000; ++i) {
    auto const a = fixture::random_permutation(rng, 9);
    auto const b = fixture::random_permutation(rng, 9);
    auto const c = fixture::random_permutation(rng, 9);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_TRUE((a * a.inverse()).is_identity());
    ASSERT_EQ((a * b).inverse(), b.inverse() * a.inverse());
    ASSERT_EQ(parse_cycles(a.to_cycles(), 9), a);
  }
}
