#include <gtest/gtest.h>

#include <algorithm>

#include "crownforge/chief.hpp"
#include "crownforge/constructions.hpp"
#include "crownforge/crowns.hpp"
#include "oracles/brute.hpp"
#include "suite.hpp"

using namespace crownforge;

namespace {

std::vector<Integer> factor_orders(const ChiefSeries& s) {
  std::vector<Integer> out;
  for (const auto& f : s.factors) out.push_back(f.order());
  return out;
}

std::vector<std::pair<Integer, std::size_t>> crown_signature(const ChiefSeries& s) {
  std::vector<std::pair<Integer, std::size_t>> out;
  for (const auto& c : crowns(s)) out.emplace_back(c.representative.order(), c.delta);
  std::sort(out.begin(), out.end());
  return out;
}

oracle::Factor brute_factor(const ChiefFactor& f) {
  const std::size_t deg = f.ambient().degree();
  return {oracle::closure(deg, f.upper().generators()), oracle::closure(deg, f.lower().generators())};
}

}  // namespace

TEST(Chief, SeriesOfS4) {
  const auto s = chief_series(suite::g("Sym(4)"));
  std::vector<Integer> expected{2, 3, 4};
  EXPECT_EQ(factor_orders(s), expected);
  EXPECT_FALSE(s.factors[2].frattini());
}

TEST(Chief, FactorsAreMinimalAgainstEnumeration) {
  for (const auto& g : {suite::g("Sym(4)"), suite::s3_wr_c3(), suite::g("Dihedral(4)")}) {
    SCOPED_TRACE(g.name());
    const auto s = chief_series(g, {}, 5);
    const auto bg = oracle::closure(g.degree(), g.generators());
    const auto normals = oracle::normal_subgroups(bg, g.degree());
    for (const auto& f : s.factors) {
      const auto x = oracle::closure(g.degree(), f.upper().generators());
      const auto y = oracle::closure(g.degree(), f.lower().generators());
      ASSERT_TRUE(std::find(normals.begin(), normals.end(), x) != normals.end());
      for (const auto& n : normals)
        EXPECT_FALSE(n.size() > y.size() && n.size() < x.size() && y.subset_of(n) && n.subset_of(x));
    }
  }
}

TEST(Chief, FrattiniFactorInCyclicFour) {
  const auto s = chief_series(suite::g("Cyclic(4)"));
  ASSERT_EQ(s.factors.size(), 2u);
  std::size_t frattini = 0;
  for (const auto& f : s.factors) frattini += f.frattini();
  EXPECT_EQ(frattini, 1u);
}

TEST(Crowns, SeedInvariantOnS3WrC3) {
  const auto w = suite::s3_wr_c3();
  const auto a = chief_series(w, {}, 1), b = chief_series(w, {}, 99);
  EXPECT_EQ(crown_signature(a), crown_signature(b));
}

TEST(Crowns, DeltaOfC2xC2IsTwo) {
  const auto s = chief_series(suite::c2xc2());
  const auto cs = crowns(s);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].delta, 2u);
  EXPECT_EQ(crown_quotient_order(cs[0].representative, cs[0].delta), 4);
}

TEST(Crowns, RadicalQuotientMatchesCrownPower) {
  const auto g = suite::g("Sym(4)");
  const auto s = chief_series(g);
  for (const auto& c : crowns(s, true)) {
    ASSERT_TRUE(c.radical.has_value());
    EXPECT_EQ(g.order() / c.radical->order(), crown_quotient_order(c.representative, c.delta));
  }
}

TEST(Equivalence, AbelianMatchesGIsomorphism) {
  for (const auto& g : {suite::c2xc2(), suite::g("Sym(4)"), suite::s3_wr_c3()}) {
    SCOPED_TRACE(g.name());
    const auto s = chief_series(g);
    for (std::size_t i = 0; i < s.factors.size(); ++i)
      for (std::size_t j = i + 1; j < s.factors.size(); ++j) {
        const auto& a = s.factors[i];
        const auto& b = s.factors[j];
        if (!a.abelian() || !b.abelian()) continue;
        EXPECT_EQ(g_equivalent(a, b),
                  oracle::g_isomorphic(brute_factor(a), brute_factor(b), g.generators(), g.degree()));
      }
  }
}

TEST(Equivalence, NonabelianAgainstMaximalSubgroupOracle) {
  const auto a5 = suite::g("Alt(5)");
  struct Case {
    PermGroup g;
    bool expected;
  };
  for (const auto& c : {Case{direct_product(a5, a5), true}, Case{direct_product(suite::g("Sym(5)"), a5), false}}) {
    SCOPED_TRACE(c.g.name());
    const auto s = chief_series(c.g);
    std::vector<const ChiefFactor*> nonab;
    for (const auto& f : s.factors)
      if (!f.abelian()) nonab.push_back(&f);
    ASSERT_EQ(nonab.size(), 2u);
    const auto bg = oracle::closure(c.g.degree(), c.g.generators());
    const bool brute = oracle::maximal_subgroup_equivalent(bg, c.g.generators(), c.g.degree(),
                                                           brute_factor(*nonab[0]), brute_factor(*nonab[1]));
    EXPECT_EQ(brute, c.expected);
    EXPECT_EQ(g_equivalent(*nonab[0], *nonab[1]), brute);
  }
}

TEST(Equivalence, TrivialCopyOnA5xA5) {
  const auto a5 = suite::g("Alt(5)");
  const auto g = direct_product(a5, a5);
  const auto s = chief_series(g);
  for (const auto& f : s.factors) {
    EXPECT_TRUE(f.inner_inducer().same_group(g));
    EXPECT_TRUE(equivalent_to_trivial_copy(f));
  }
}

TEST(Monolithic, OrdersOfLA) {
  const auto w = suite::s3_wr_c3();
  const auto s = chief_series(w);
  bool seen = false;
  for (const auto& c : crowns(s))
    if (c.representative.order() == 27) {
      EXPECT_EQ(c.monolithic.order(), 648);
      seen = true;
    }
  EXPECT_TRUE(seen);
}
