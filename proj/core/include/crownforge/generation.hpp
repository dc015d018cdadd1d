#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crownforge/perm_group.hpp"

namespace crownforge {

struct ProbEstimate {
  bool exact = false;
  Rational value;          // exact probability when `exact`
  double point = 0.0;      // value as a double, or the Monte Carlo estimate
  double lower = 0.0;      // 99% Wilson interval (equal to point when exact)
  double upper = 0.0;
  Integer successes = 0;
  Integer trials = 0;      // tuples counted or sampled
  std::uint64_t seed = 0;
};

struct Interval {
  double lower;
  double upper;
};
/// Wilson score interval; z defaults to the two-sided 99% quantile.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 2.5758293035489);

/// Throws PreconditionError if an element lies outside G.
bool is_generating(const PermGroup& g, const std::vector<Permutation>& tuple);

/// Exhaustive count of generating d-tuples. With class_reduction the first
/// coordinate runs over conjugacy class representatives weighted by class
/// size. Throws LimitError when |G|^d exceeds limits().exhaustion_budget.
ProbEstimate exact_gen_probability(const PermGroup& g, std::size_t d, bool class_reduction = true);

/// Uniform sampling; trial t draws from its own stream seed (seed, t).
ProbEstimate mc_gen_probability(const PermGroup& g, std::size_t d, std::uint64_t trials,
                                std::uint64_t seed);

struct TheoremFBound {
  bool exact = false;
  Integer bound;       // exact floor, or floor at the interval's lower end
  Integer bound_high;  // equal to bound when exact
  Integer caut;
  ProbEstimate p_l, p_quotient;
};
/// floor(P_L(d) / P_{L/N}(d) * |N|^d / caut). Without caut, N = L must be a
/// simple group of the built-in table and caut = |Aut L|. Falls back to
/// Monte Carlo (mc_trials, seed) when exhaustive counting is over budget.
TheoremFBound theorem_f_max_t(const PermGroup& l, const PermGroup& n, std::size_t d,
                              std::optional<Integer> caut = std::nullopt,
                              std::uint64_t mc_trials = 100000, std::uint64_t seed = 1);

struct SearchStep {
  std::size_t k;
  std::uint64_t random_trials;
  std::uint64_t local_steps;
  bool found;
};

struct DBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool exact = false;
  std::vector<Permutation> witness;
  std::string lower_reason;
  std::uint64_t trials_used = 0;
  std::uint64_t seed = 0;
  std::vector<SearchStep> trace;
};
/// Lower bound from theorems (d_p ranks of G/G', abelian crown h values,
/// noncyclicity, exhaustive failure of small tuple sizes); upper bound from a
/// seeded search (random tuples, then local search on the order of the
/// generated subgroup) within `budget` generation tests.
DBounds d_bounds(const PermGroup& g, std::uint64_t seed, std::uint64_t budget);

enum class Verdict { holds, undecided, violated };
const char* to_string(Verdict v);
/// Verdict of lhs <= rhs when both sides are only known as intervals.
Verdict compare_le(std::size_t lhs_lower, std::size_t lhs_upper, std::size_t rhs_lower,
                   std::size_t rhs_upper);

struct WreathBound {
  std::size_t n = 0;
  bool applicable = false;  // n >= log_60(k0)
  std::uint64_t k0 = 60;
  DBounds d_h, d_abelian_top, d_wreath;
  // max(d(H/H' wr K), ceil(d(H)/n) + 2) at the lower and upper ends
  std::size_t bound_lower = 0;
  std::size_t bound_upper = 0;
  Verdict verdict = Verdict::undecided;  // d(H wr K) <= bound
};
/// Throws PreconditionError if K is not transitive.
WreathBound wreath_upper_bound(const PermGroup& h, const PermGroup& k, std::uint64_t k0,
                               std::uint64_t seed = 1, std::uint64_t budget = 20000);

struct NecessaryConditionRecord {
  std::size_t n = 0;
  DBounds d_h, d_wreath;
  std::size_t abelianization_rank = 0;  // d(H/H' x K/K'), exact
  Verdict h_vs_wreath = Verdict::undecided;            // d(H) <= n d(H wr K)
  Verdict abelianization_vs_wreath = Verdict::undecided;  // d(H/H' x K/K') <= d(H wr K)
};
NecessaryConditionRecord necessary_condition_check(const PermGroup& h, const PermGroup& k,
                                                   std::uint64_t seed = 1,
                                                   std::uint64_t budget = 20000);

/// max over primes p of d_p(G/G') summed over the given groups: the rank of
/// the product of their abelianizations.
std::size_t abelian_product_rank(std::span<const PermGroup> groups);

}  // namespace crownforge
