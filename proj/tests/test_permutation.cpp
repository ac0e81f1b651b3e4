#include <gtest/gtest.h>

#include "birdtrack/permutation.hpp"

using namespace birdtrack;

TEST(Permutation, CycleParsingAndFormatting) {
  Perm p = parse_cycles("(1 2 3)(4)");
  EXPECT_EQ(p, (Perm{1, 2, 0, 3}));
  EXPECT_EQ(format_cycles(p), "(1 2 3)(4)");
  EXPECT_EQ(format_cycles(p, false), "(1 2 3)");
  EXPECT_EQ(parse_cycles("(1 3)", 3), (Perm{2, 1, 0}));
  EXPECT_THROW(parse_cycles("(1 2"), Error);
  EXPECT_THROW(parse_cycles("(1 1)"), Error);
  EXPECT_THROW(parse_cycles("(1 x)"), Error);
}

TEST(Permutation, CompositionOrder) {
  // (12)(132) applies (132) first: 1 -> 3 -> 3, 3 -> 2 -> 1
  EXPECT_EQ(multiply(parse_cycles("(1 2)", 3), parse_cycles("(1 3 2)", 3)), parse_cycles("(1 3)", 3));
}

TEST(Permutation, SignCyclesInverse) {
  EXPECT_EQ(sign(parse_cycles("(1 2 3)")), 1);
  EXPECT_EQ(sign(parse_cycles("(1 2)(3)")), -1);
  EXPECT_EQ(cycle_count(identity_perm(4)), 4);
  for (const auto& p : all_permutations(4)) {
    EXPECT_EQ(multiply(p, inverse(p)), identity_perm(4));
    EXPECT_EQ(from_cycles(to_cycles(p), 4), p);
  }
  EXPECT_EQ(all_permutations(4).size(), 24u);
  EXPECT_EQ(factorial(5), 120);
}

TEST(Permutation, Validation) {
  EXPECT_FALSE(is_permutation({0, 0}));
  EXPECT_THROW(require_permutation({0, 2}), Error);
  EXPECT_THROW(from_cycles({{0, 1}, {1, 2}}, 3), Error);
}

TEST(Permutation, SubgroupOnSlots) {
  auto ps = permutations_of({0, 2}, 3);
  ASSERT_EQ(ps.size(), 2u);
  for (const auto& p : ps) EXPECT_EQ(p[1], 1);
}
