#include <gtest/gtest.h>

#include "crownforge/errors.hpp"
#include "crownforge/perm_group.hpp"
#include "crownforge/random.hpp"
#include "oracles/brute.hpp"
#include "suite.hpp"

using namespace crownforge;

TEST(Permutation, RightActionProduct) {
  const auto p = parse_permutation("(1,2)", 3), q = parse_permutation("(2,3)", 3);
  // 1 -> 2 under p, then 2 -> 3 under q.
  EXPECT_EQ((p * q)[0], 2u);
  EXPECT_EQ((p * q).to_string(), "(1,3,2)");
  EXPECT_EQ(p.conjugate_by(q), q.inverse() * p * q);
}

TEST(Permutation, ParseRoundTrip) {
  const auto p = parse_permutation("(1,4,2)(3,5)", 6);
  EXPECT_EQ(parse_permutation(p.to_string(), 6), p);
  EXPECT_EQ(p.order(), 6);
  EXPECT_EQ(parse_permutation("()", 4).to_string(), "()");
}

TEST(Permutation, ParseRejectsBadInput) {
  EXPECT_THROW(parse_permutation("(1,2", 3), ParseError);
  EXPECT_THROW(parse_permutation("(1,4)", 3), ParseError);
  EXPECT_THROW(parse_permutation("(1,2,1)", 3), ParseError);
  EXPECT_THROW(parse_permutation("(0,1)", 3), ParseError);
}

TEST(Permutation, PowersAndInverse) {
  const auto p = parse_permutation("(1,2,3,4,5)", 5);
  EXPECT_TRUE(p.pow(5).is_identity());
  EXPECT_EQ(p.pow(-1), p.inverse());
  EXPECT_EQ(p.pow(7), p.pow(2));
}

TEST(Chain, OrderAndMembershipMatchEnumeration) {
  for (const auto& g : suite::small_groups()) {
    SCOPED_TRACE(g.name());
    const auto brute = oracle::closure(g.degree(), g.generators());
    EXPECT_EQ(g.order(), brute.size());
    for (const auto& x : brute.elements) EXPECT_TRUE(g.contains(x));
    Rng rng(7);
    const auto sym = builtin_group("Sym(" + std::to_string(g.degree()) + ")");
    for (int i = 0; i < 50; ++i) {
      const auto x = sym.random_element(rng);
      EXPECT_EQ(g.contains(x), brute.contains(x));
    }
  }
}

TEST(Chain, DerivedSubgroupMatchesEnumeration) {
  for (const auto& g : suite::small_groups()) {
    SCOPED_TRACE(g.name());
    const auto brute = oracle::closure(g.degree(), g.generators());
    const auto d = derived_subgroup(g);
    EXPECT_EQ(oracle::closure(g.degree(), d.generators()), oracle::derived(brute, g.degree()));
  }
}

TEST(Chain, NormalClosureMatchesEnumeration) {
  for (const auto& g : suite::small_groups()) {
    if (g.is_trivial()) continue;
    SCOPED_TRACE(g.name());
    const auto brute = oracle::closure(g.degree(), g.generators());
    const auto x = g.random_element(std::uint64_t{3});
    const std::vector<Permutation> s{x};
    const auto n = normal_closure(g, s);
    EXPECT_EQ(oracle::closure(g.degree(), n.generators()), oracle::normal_closure(brute, s));
    EXPECT_TRUE(n.is_normal_in(g));
  }
}

TEST(Chain, RandomElementsAreDeterministic) {
  const auto g = suite::g("Sym(6)");
  EXPECT_EQ(g.random_element(std::uint64_t{11}), g.random_element(std::uint64_t{11}));
}
