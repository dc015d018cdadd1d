#include <gtest/gtest.h>

#include "crownforge/cohomology.hpp"
#include "crownforge/errors.hpp"
#include "modules.hpp"
#include "oracles/brute.hpp"

using namespace crownforge;

TEST(Cohomology, CocycleCountMatchesComplementEnumeration) {
  for (const auto& m : suite::modules()) {
    SCOPED_TRACE(m.name);
    ASSERT_TRUE(m.action.is_valid());
    const Integer z1 = ipow(Integer(m.action.prime()), z1_dimension(m.action));
    EXPECT_EQ(z1, complement_count_oracle(m.action));
    EXPECT_EQ(z1, oracle::brute_complement_count(m.action));
  }
}

TEST(Cohomology, KnownValues) {
  const auto ms = suite::modules();
  // Coprime actions have trivial H^1.
  EXPECT_EQ(h1_dimension(ms[0].action), 0u);
  EXPECT_EQ(h1_dimension(ms[1].action), 0u);
  EXPECT_EQ(h1_dimension(ms[2].action), 0u);
  // Hom(G, F_p) for trivial modules.
  EXPECT_EQ(h1_dimension(ms[4].action), 1u);
  EXPECT_EQ(h1_dimension(ms[5].action), 2u);
  EXPECT_EQ(h1_dimension(ms[7].action), 1u);
  EXPECT_EQ(fixed_dimension(ms[4].action), 1u);
  EXPECT_EQ(fixed_dimension(ms[1].action), 0u);
}

TEST(Cohomology, InvalidMatricesAreRejected) {
  // An order-3 matrix cannot represent C2.
  const ModuleAction bad(suite::g("Cyclic(2)"), 2, {suite::mat(2, 2, {0, 1, 1, 1})});
  EXPECT_FALSE(bad.is_valid());
  EXPECT_THROW(z1_dimension(bad), VerificationError);
}

TEST(Module, IrreducibilityAndEndomorphisms) {
  const auto ms = suite::modules();
  EXPECT_TRUE(is_irreducible(ms[1].action));
  EXPECT_TRUE(is_irreducible(ms[2].action));
  EXPECT_EQ(end_degree(ms[1].action), 1u);
  EXPECT_EQ(end_degree(ms[2].action), 2u);
  const auto split = ModuleAction::trivial(suite::g("Cyclic(2)"), 2, 2);
  EXPECT_FALSE(is_irreducible(split));
  EXPECT_THROW(end_degree(split), PreconditionError);
}

TEST(Module, HFormula) {
  EXPECT_THROW(h_formula(0, 1), PreconditionError);
  EXPECT_EQ(h_formula(1, 1), 2u);
  EXPECT_EQ(h_formula(3, 1), 4u);
  EXPECT_EQ(h_formula(3, 2), 3u);
}

TEST(Presentation, CosetEnumerationRecoversOrder) {
  for (const auto& g : suite::small_groups()) {
    if (g.is_trivial() || g.order() > 1000) continue;
    SCOPED_TRACE(g.name());
    const auto p = presentation_from_chain(g);
    for (const auto& r : p.relators) EXPECT_TRUE(evaluate(p, r).is_identity());
    EXPECT_EQ(Integer(oracle::todd_coxeter(p.generators.size(), p.relators)), g.order());
  }
}

TEST(Presentation, CosetEnumerationOnClassicalPresentations) {
  // <a, b | a^2, b^3, (ab)^5> is Alt(5); <a, b | a^4, b^2, (ab)^2> is D4.
  EXPECT_EQ(oracle::todd_coxeter(2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}}), 60u);
  EXPECT_EQ(oracle::todd_coxeter(2, {{1, 1, 1, 1}, {2, 2}, {1, 2, 1, 2}}), 8u);
  EXPECT_EQ(oracle::todd_coxeter(1, {{1, 1, 1, 1, 1, 1, 1}}), 7u);
}

TEST(AbelianRank, DpRank) {
  EXPECT_EQ(d_p_rank(suite::klein(), 2), 2u);
  EXPECT_EQ(d_p_rank(suite::g("Sym(3)"), 2), 1u);
  EXPECT_EQ(d_p_rank(suite::g("Sym(3)"), 3), 0u);
  EXPECT_EQ(d_p_rank(suite::g("Alt(5)"), 2), 0u);
  const std::vector<std::uint32_t> primes{2, 3};
  EXPECT_EQ(abelianization_primes(suite::g("Cyclic(6)")), primes);
}
