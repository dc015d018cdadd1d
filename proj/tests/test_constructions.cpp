#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "crownforge/constructions.hpp"
#include "crownforge/errors.hpp"
#include "crownforge/group_io.hpp"
#include "oracles/brute.hpp"
#include "suite.hpp"

using namespace crownforge;

TEST(Wreath, OrderAndDegree) {
  const auto w = suite::s3_wr_c3();
  EXPECT_EQ(w.degree(), 9u);
  EXPECT_EQ(w.order(), 648);
  EXPECT_TRUE(w.is_transitive());
  const auto v = wreath_product(suite::g("Alt(5)"), suite::g("Cyclic(2)"));
  EXPECT_EQ(v.order(), 7200);
}

TEST(Wreath, BlocksArePreserved) {
  // Block j is {3j, 3j+1, 3j+2}; every generator maps blocks to blocks.
  const auto w = suite::s3_wr_c3();
  for (const auto& s : w.generators())
    for (Point x = 0; x < 9; ++x)
      for (Point y = 0; y < 9; ++y)
        if (x / 3 == y / 3) {
          EXPECT_EQ(s[x] / 3, s[y] / 3);
        }
}

TEST(Wreath, IteratedTowerOrders) {
  const GroupSequence seq({suite::g("Cyclic(2)"), suite::g("Cyclic(2)"), suite::g("Cyclic(2)")});
  EXPECT_EQ(iterated_wreath(seq, 1).order(), 2);
  EXPECT_EQ(iterated_wreath(seq, 2).order(), 8);
  EXPECT_EQ(iterated_wreath(seq, 3).order(), 128);
  EXPECT_EQ(iterated_wreath(seq, 3).degree(), 8u);
}

TEST(Sequence, IntransitiveEntryIsNamed) {
  const auto bad = suite::make(4, {"(1,2)"}, "C2 on 4");
  try {
    GroupSequence({bad, suite::g("Sym(3)")});
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("entry 1"), std::string::npos);
  }
  try {
    GroupSequence({suite::g("Sym(3)"), bad});
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("entry 2"), std::string::npos);
  }
}

TEST(DirectProduct, Order) {
  EXPECT_EQ(suite::c2xc2().order(), 4);
  EXPECT_EQ(direct_product(suite::g("Sym(5)"), suite::g("Alt(5)")).order(), 7200);
}

TEST(CrownPower, OrderAndSubdirectShape) {
  const auto l = suite::g("Sym(3)");
  const auto a = suite::a3_in_s3();
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto p = crown_based_power(l, a, k);
    Integer expected = 2;
    for (std::size_t i = 0; i < k; ++i) expected *= 3;
    EXPECT_EQ(p.order(), expected);
  }
  EXPECT_EQ(crown_based_power(suite::g("Alt(5)"), suite::g("Alt(5)"), 3).order(), 216000);
}

TEST(CrownPower, RejectsNonMonolithic) {
  EXPECT_NO_THROW(crown_based_power(suite::g("Sym(4)"), suite::klein(), 2));
  EXPECT_THROW(crown_based_power(suite::g("Cyclic(6)"), suite::make(6, {"(1,3,5)(2,4,6)"}, "C3"), 2),
               PreconditionError);
  EXPECT_THROW(crown_based_power(suite::klein(), suite::make(4, {"(1,2)(3,4)"}, "C2"), 2), PreconditionError);
}

TEST(Quotient, MatchesCosetCount) {
  for (const auto& g : suite::small_groups()) {
    if (g.is_trivial()) continue;
    SCOPED_TRACE(g.name());
    const auto d = derived_subgroup(g);
    const auto q = quotient_group(g, d);
    EXPECT_EQ(q.group.order() * d.order(), g.order());
    EXPECT_TRUE(kernel(q.projection).same_group(d));
    const auto bg = oracle::closure(g.degree(), g.generators());
    const auto bd = oracle::closure(g.degree(), d.generators());
    EXPECT_EQ(oracle::right_cosets(bg, bd).count, static_cast<std::size_t>(q.group.order()));
  }
}

TEST(GroupIo, BuiltinsAndLiterals) {
  EXPECT_EQ(builtin_group("Sym(4)").order(), 24);
  EXPECT_EQ(builtin_group("Alt(5)").order(), 60);
  EXPECT_EQ(builtin_group("Dihedral(5)").order(), 10);
  EXPECT_THROW(builtin_group("Foo(3)"), ParseError);
  const auto j = nlohmann::json::parse(R"j({"name": "K", "degree": 4, "generators": ["(1,2)(3,4)", "(1,3)(2,4)"]})j");
  const auto k = group_from_json(j);
  EXPECT_EQ(k.order(), 4);
  const auto back = group_from_json(nlohmann::json::parse(group_to_json(k).dump()));
  EXPECT_TRUE(back.same_group(k));
  EXPECT_THROW(group_from_json(nlohmann::json::parse(R"j({"degree": 0})j")), ParseError);
}

TEST(GroupIo, SequenceJson) {
  const auto seq = sequence_from_json(nlohmann::json::parse(R"j({"sequence": ["Cyclic(2)", "Sym(3)"]})j"));
  EXPECT_EQ(seq.size(), 2u);
  EXPECT_EQ(seq.degree(1), 3u);
  EXPECT_THROW(sequence_from_json(nlohmann::json::parse(R"j({"sequence": 3})j")), ParseError);
}
