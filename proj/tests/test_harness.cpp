#include <gtest/gtest.h>

#include "crownforge/harness.hpp"
#include "suite.hpp"

using namespace crownforge;

namespace {

GroupSequence repeat(const char* name, std::size_t m) {
  std::vector<PermGroup> g(m, suite::g(name));
  return GroupSequence(std::move(g));
}

}  // namespace

TEST(Sequence, RankTraceOfC2Tower) {
  const auto seq = repeat("Cyclic(2)", 4);
  for (std::size_t m = 1; m <= 4; ++m) EXPECT_EQ(abelianization_product_rank(seq, m), m);
  EXPECT_EQ(abelianization_product_rank(repeat("Alt(5)", 3), 3), 0u);
}

TEST(Sequence, FirstLargeIndex) {
  // log_60 60 = 1, so the first index already qualifies.
  EXPECT_EQ(first_large_index(repeat("Cyclic(2)", 3), 60), std::optional<std::size_t>(1));
  // log_60 (60^3) = 3 needs n_1 n_2 >= 3.
  EXPECT_EQ(first_large_index(repeat("Cyclic(2)", 3), 216000), std::optional<std::size_t>(2));
  EXPECT_FALSE(first_large_index(repeat("Cyclic(2)", 1), std::uint64_t{1} << 62).has_value());
}

TEST(MainReport, C2Tower) {
  const auto r = main_theorem_report(repeat("Cyclic(2)", 3), 3, 1, 60, 1, 20000);
  ASSERT_EQ(r.towers.size(), 3u);
  for (std::size_t m = 1; m <= 3; ++m) {
    EXPECT_EQ(r.towers[m - 1].d.lower, m);
    EXPECT_EQ(r.towers[m - 1].d.upper, m);
    EXPECT_EQ(r.towers[m - 1].product_rank, m);
    EXPECT_NE(r.towers[m - 1].verdict, Verdict::violated);
  }
  const auto j = to_json(r);
  EXPECT_TRUE(j.contains("notes"));
}

TEST(PropChief, S3WrC3) {
  const auto r = prop_chief_check(suite::g("Sym(3)"), suite::g("Cyclic(3)"));
  EXPECT_EQ(r.wreath_order, 648);
  ASSERT_FALSE(r.part1.empty());
  for (const auto& p : r.part1) {
    EXPECT_EQ(p.delta_w, 1u);
    EXPECT_EQ(p.l_m_order, 648);
  }
  EXPECT_TRUE(r.holds());
}

TEST(Moduli, InstanceSet) {
  const std::vector<std::pair<PermGroup, PermGroup>> pairs{{suite::g("Sym(3)"), suite::g("Cyclic(3)")},
                                                           {suite::c2xc2(), suite::g("Cyclic(2)")},
                                                           {suite::g("Sym(3)"), suite::g("Sym(3)")}};
  for (const auto& [h, k] : pairs) {
    SCOPED_TRACE(h.name() + " wr " + k.name());
    EXPECT_NE(moduli_check(h, k).verdict(), Verdict::violated);
    EXPECT_NE(wreath_upper_bound(h, k, 60).verdict, Verdict::violated);
  }
}

TEST(HBounds, S3Tower) {
  const auto r = h_bound_check(repeat("Sym(3)", 2), 2, 60);
  EXPECT_FALSE(r.vacuous);
  EXPECT_NE(r.verdict(), Verdict::violated);
}

TEST(HBounds, PerfectTowerIsVacuous) {
  const auto r = h_bound_check(repeat("Alt(5)", 2), 2, 60);
  EXPECT_TRUE(r.vacuous);
}

TEST(Pfg, A5Tower) {
  const auto r = pfg_check(repeat("Alt(5)", 2), 2, 1);
  EXPECT_EQ(r.status(), PfgStatus::satisfied);
  EXPECT_TRUE(pfg_inequality(5, Integer(5), Integer(1)));
  EXPECT_FALSE(pfg_inequality(6, Integer(5), Integer(1)));
}

TEST(WreathAb, CyclicOverSym3) {
  const auto r = wreath_ab_check(suite::g("Cyclic(2)"), suite::g("Sym(3)"));
  EXPECT_NE(r.verdict, Verdict::violated);
  EXPECT_LE(r.d_wreath.lower, r.d_wreath.upper);
}
