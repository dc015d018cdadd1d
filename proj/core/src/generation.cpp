#include "crownforge/generation.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>

#include "crownforge/chief.hpp"
#include "crownforge/cohomology.hpp"
#include "crownforge/constructions.hpp"
#include "crownforge/crowns.hpp"
#include "crownforge/errors.hpp"
#include "crownforge/factor_table.hpp"
#include "crownforge/limits.hpp"
#include "crownforge/simple_groups.hpp"

namespace crownforge {

namespace {

using Index = FactorTable::Index;

// G as a multiplication table, for groups up to limits().table_cap.
struct SmallGroup {
  FactorTable table;
  explicit SmallGroup(const PermGroup& g) : table(g, g, PermGroup::trivial(g.degree())) {}

  // Right multiplication closure; stops once more than half of G is reached.
  bool generates(const std::vector<Index>& s, std::vector<char>& seen,
                 std::vector<Index>& list) const {
    const std::size_t n = table.size();
    if (n == 1) return true;
    std::fill(seen.begin(), seen.end(), 0);
    list.clear();
    list.push_back(0);
    seen[0] = 1;
    for (std::size_t i = 0; i < list.size(); ++i)
      for (Index x : s) {
        const Index y = table.mul(list[i], x);
        if (!seen[y]) {
          seen[y] = 1;
          list.push_back(y);
          if (2 * list.size() > n) return true;
        }
      }
    return false;
  }
};

std::unique_ptr<SmallGroup> small_group(const PermGroup& g) {
  if (g.order() > limits().table_cap) return nullptr;
  return std::make_unique<SmallGroup>(g);
}

// Certifies generation when the randomized chain reaches |G|; otherwise the
// deterministic chain decides.
bool generates_exactly(const PermGroup& g, const std::vector<Permutation>& tuple, std::uint64_t seed) {
  const Integer target = g.order();
  Rng rng(seed);
  const StabChain quick = StabChain::randomized(g.degree(), tuple, target, rng);
  if (quick.order() == target) return true;
  return StabChain(g.degree(), tuple).order() == target;
}

// Randomized check only: a true answer is certain, false may be wrong.
bool probably_generates(const PermGroup& g, const std::vector<Permutation>& tuple, Rng& rng) {
  const StabChain quick = StabChain::randomized(g.degree(), tuple, g.order(), rng, 12);
  return quick.order() == g.order();
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

void check_budget(const Integer& n, std::size_t d) {
  if (ipow(n, d) > limits().exhaustion_budget)
    throw LimitError("exhaustive tuple count over budget: |G|^" + std::to_string(d) + " = " +
                     ipow(n, d).str());
}

}  // namespace

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double ph = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (ph + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(ph * (1.0 - ph) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

bool is_generating(const PermGroup& g, const std::vector<Permutation>& tuple) {
  for (const auto& x : tuple)
    if (!g.contains(x)) throw PreconditionError("tuple element " + x.to_string() + " is not in G");
  if (g.is_trivial()) return true;
  return generates_exactly(g, tuple, 0x5eed);
}

ProbEstimate exact_gen_probability(const PermGroup& g, std::size_t d, bool class_reduction) {
  const Integer n = g.order();
  check_budget(n, d);
  ProbEstimate out;
  out.exact = true;
  out.trials = ipow(n, d);
  if (g.is_trivial() || d == 0) {
    out.successes = g.is_trivial() ? out.trials : Integer(0);
    out.value = Rational(out.successes, out.trials);
    out.point = out.lower = out.upper = to_double(out.value);
    return out;
  }

  // First coordinates with their weights.
  std::vector<std::pair<std::size_t, Integer>> firsts;
  Integer count = 0;
  if (auto sg = small_group(g)) {
    const std::size_t size = sg->table.size();
    if (class_reduction) {
      std::vector<Index> reps;
      const auto cls = sg->table.classes(&reps);
      std::vector<std::size_t> sizes(reps.size(), 0);
      for (auto c : cls) ++sizes[c];
      for (std::size_t c = 0; c < reps.size(); ++c) firsts.emplace_back(reps[c], sizes[c]);
    } else {
      for (std::size_t i = 0; i < size; ++i) firsts.emplace_back(i, 1);
    }
    std::vector<char> seen(size);
    std::vector<Index> list, tuple(d);
    for (const auto& [first, weight] : firsts) {
      tuple[0] = static_cast<Index>(first);
      std::vector<std::size_t> rest(d - 1, 0);
      std::uint64_t hits = 0;
      while (true) {
        for (std::size_t j = 1; j < d; ++j) tuple[j] = static_cast<Index>(rest[j - 1]);
        if (sg->generates(tuple, seen, list)) ++hits;
        std::size_t j = 0;
        while (j < rest.size() && ++rest[j] == size) rest[j++] = 0;
        if (j == rest.size()) break;
      }
      count += weight * hits;
    }
  } else {
    const std::size_t cap = static_cast<std::size_t>(limits().exhaustion_budget);
    std::vector<Permutation> elems;
    if (class_reduction) {
      const auto cc = conjugacy_classes(g, cap);
      elems = cc.elements;
      for (const auto& c : cc.classes) firsts.emplace_back(c.front(), c.size());
    } else {
      elems = g.elements(cap);
      for (std::size_t i = 0; i < elems.size(); ++i) firsts.emplace_back(i, 1);
    }
    const std::size_t size = elems.size();
    std::vector<Permutation> tuple(d);
    for (const auto& [first, weight] : firsts) {
      tuple[0] = elems[first];
      std::vector<std::size_t> rest(d - 1, 0);
      std::uint64_t hits = 0;
      while (true) {
        for (std::size_t j = 1; j < d; ++j) tuple[j] = elems[rest[j - 1]];
        if (generates_exactly(g, tuple, first)) ++hits;
        std::size_t j = 0;
        while (j < rest.size() && ++rest[j] == size) rest[j++] = 0;
        if (j == rest.size()) break;
      }
      count += weight * hits;
    }
  }
  out.successes = count;
  out.value = Rational(count, out.trials);
  out.point = out.lower = out.upper = to_double(out.value);
  return out;
}

ProbEstimate mc_gen_probability(const PermGroup& g, std::size_t d, std::uint64_t trials,
                                std::uint64_t seed) {
  if (trials < 1) throw PreconditionError("Monte Carlo needs at least one trial");
  ProbEstimate out;
  out.seed = seed;
  out.trials = trials;
  std::uint64_t hits = 0;
  if (g.is_trivial()) {
    hits = trials;
  } else if (auto sg = small_group(g)) {
    const std::size_t size = sg->table.size();
    std::vector<char> seen(size);
    std::vector<Index> list, tuple(d);
    for (std::uint64_t t = 0; t < trials; ++t) {
      Rng rng(stream_seed(seed, t));
      for (auto& x : tuple) x = static_cast<Index>(rng.below(size));
      if (sg->generates(tuple, seen, list)) ++hits;
    }
  } else {
    std::vector<Permutation> tuple(d);
    for (std::uint64_t t = 0; t < trials; ++t) {
      Rng rng(stream_seed(seed, t));
      for (auto& x : tuple) x = g.random_element(rng);
      if (generates_exactly(g, tuple, rng())) ++hits;
    }
  }
  out.successes = hits;
  out.point = static_cast<double>(hits) / static_cast<double>(trials);
  if (g.is_trivial()) {
    out.exact = true;
    out.value = 1;
    out.lower = out.upper = 1.0;
  } else {
    const Interval iv = wilson_interval(hits, trials);
    out.lower = iv.lower;
    out.upper = iv.upper;
  }
  return out;
}

TheoremFBound theorem_f_max_t(const PermGroup& l, const PermGroup& n, std::size_t d,
                              std::optional<Integer> caut, std::uint64_t mc_trials,
                              std::uint64_t seed) {
  if (n.is_abelian()) throw PreconditionError("Theorem f needs a nonabelian socle");
  require_unique_minimal_normal(l, n);
  TheoremFBound out;
  if (!caut) {
    if (!n.same_group(l))
      throw PreconditionError("|C_Aut(L)(L/N)| must be supplied unless N = L");
    std::optional<SimpleGroupInfo> info;
    if (l.order() <= limits().table_cap) info = identify_simple(l.order(), SmallGroup(l).table.element_orders());
    if (!info) throw PreconditionError("L is not a simple group of the built-in table");
    caut = info->aut_order;
  }
  out.caut = *caut;

  auto probability = [&](const PermGroup& g) {
    try {
      return exact_gen_probability(g, d);
    } catch (const LimitError&) {
      return mc_gen_probability(g, d, mc_trials, seed);
    }
  };
  out.p_l = probability(l);
  out.p_quotient = n.same_group(l) ? exact_gen_probability(PermGroup::trivial(l.degree()), d)
                                   : probability(quotient_group(l, n).group);
  const Integer nd = ipow(n.order(), d);
  if (out.p_l.exact && out.p_quotient.exact) {
    out.exact = true;
    if (out.p_quotient.value.numerator() == 0) throw PreconditionError("d < d(L/N)");
    out.bound = floor(out.p_l.value / out.p_quotient.value * Rational(nd) / Rational(out.caut));
    out.bound_high = out.bound;
    return out;
  }
  const double scale = static_cast<double>(nd) / static_cast<double>(out.caut);
  const double lo = out.p_quotient.upper > 0 ? out.p_l.lower / out.p_quotient.upper : 0.0;
  const double hi =
      out.p_quotient.lower > 0 ? std::min(1.0, out.p_l.upper / out.p_quotient.lower) : 1.0;
  out.bound = Integer(static_cast<std::uint64_t>(std::floor(lo * scale)));
  out.bound_high = Integer(static_cast<std::uint64_t>(std::floor(std::max(hi, lo) * scale)));
  return out;
}

namespace {

void raise_lower(DBounds& b, std::size_t value, std::string reason) {
  if (value > b.lower) {
    b.lower = value;
    b.lower_reason = std::move(reason);
  }
}

// Drops generators that are not needed, keeping the list generating.
std::vector<Permutation> reduced_generators(const PermGroup& g) {
  std::vector<Permutation> gens = g.generators();
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Permutation> rest = gens;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (generates_exactly(g, rest, i)) gens = std::move(rest);
  }
  return gens;
}

Integer order_estimate(const PermGroup& g, const std::vector<Permutation>& tuple, Rng& rng) {
  return StabChain::randomized(g.degree(), tuple, g.order(), rng, 12).order();
}

// Hill climbing on the order of <tuple>: replace one coordinate x by x*s or
// s*x for a generator s of G and keep the move unless the order drops.
bool local_search(const PermGroup& g, std::size_t k, std::uint64_t steps, Rng& rng,
                  std::vector<Permutation>& found, std::uint64_t& used) {
  const auto& gens = g.generators();
  const std::uint64_t stall_limit = 2000;
  std::vector<Permutation> tuple;
  Integer best = 0;
  std::uint64_t stall = stall_limit;
  for (used = 0; used < steps; ++used) {
    if (stall >= stall_limit) {
      tuple.clear();
      for (std::size_t i = 0; i < k; ++i) tuple.push_back(g.random_element(rng));
      best = order_estimate(g, tuple, rng);
      stall = 0;
    }
    std::vector<Permutation> cand = tuple;
    const std::size_t i = rng.below(k);
    Permutation s = gens[rng.below(gens.size())];
    if (rng.below(2)) s = s.inverse();
    cand[i] = rng.below(2) ? cand[i] * s : s * cand[i];
    const Integer ord = order_estimate(g, cand, rng);
    if (ord == g.order()) {
      found = std::move(cand);
      ++used;
      return true;
    }
    if (ord >= best) {
      stall = ord > best ? 0 : stall + 1;
      best = ord;
      tuple = std::move(cand);
    } else {
      ++stall;
    }
  }
  return false;
}

}  // namespace

DBounds d_bounds(const PermGroup& g, std::uint64_t seed, std::uint64_t budget) {
  DBounds out;
  out.seed = seed;
  if (g.is_trivial()) {
    out.exact = true;
    out.lower_reason = "trivial group";
    return out;
  }
  raise_lower(out, 1, "nontrivial");
  if (!g.is_abelian()) raise_lower(out, 2, "noncyclic");
  for (std::uint32_t p : abelianization_primes(g))
    raise_lower(out, d_p_rank(g, p), "d_" + std::to_string(p) + " rank of G/G'");
  if (g.order() <= Integer(1000000)) {
    try {
      const ChiefSeries series = chief_series(g, {}, seed);
      for (const Crown& c : crowns(series))
        if (c.representative.abelian())
          raise_lower(out, h_value(series, c.representative).h,
                      "h value of an abelian crown of order " + c.representative.order().str());
    } catch (const LimitError&) {
    }
  }

  out.witness = reduced_generators(g);
  out.upper = out.witness.size();

  // Tuple sizes with no generating tuple at all, while exhaustion is cheap.
  while (out.lower < out.upper && ipow(g.order(), out.lower) <= Integer(4000000)) {
    if (exact_gen_probability(g, out.lower).successes != 0) break;
    raise_lower(out, out.lower + 1,
                "no generating " + std::to_string(out.lower) + "-tuple (exhaustive)");
  }

  std::uint64_t remaining = budget;
  for (std::size_t k = out.lower; k < out.upper && remaining > 0; ++k) {
    const std::uint64_t share = k + 1 == out.upper ? remaining : remaining / 2;
    SearchStep step{k, 0, 0, false};
    Rng rng(stream_seed(seed, k));
    std::vector<Permutation> tuple(k);
    // Random tuples in doubling batches, then local search for the rest.
    const std::uint64_t random_cap = std::min<std::uint64_t>(share / 2, 8192);
    for (std::uint64_t batch = 16; !step.found && step.random_trials < random_cap; batch *= 2) {
      const std::uint64_t stop = std::min(random_cap, step.random_trials + batch);
      while (step.random_trials < stop) {
        for (auto& x : tuple) x = g.random_element(rng);
        ++step.random_trials;
        if (probably_generates(g, tuple, rng)) {
          step.found = true;
          break;
        }
      }
    }
    if (!step.found)
      step.found = local_search(g, k, share - step.random_trials, rng, tuple, step.local_steps);
    remaining -= step.random_trials + step.local_steps;
    out.trace.push_back(step);
    if (step.found && generates_exactly(g, tuple, seed)) {
      out.witness = tuple;
      out.upper = k;
    }
  }
  out.trials_used = budget - remaining;
  out.exact = out.lower == out.upper;
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::violated:
      return "violated";
    default:
      return "undecided";
  }
}

Verdict compare_le(std::size_t lhs_lower, std::size_t lhs_upper, std::size_t rhs_lower,
                   std::size_t rhs_upper) {
  if (lhs_upper <= rhs_lower) return Verdict::holds;
  if (lhs_lower > rhs_upper) return Verdict::violated;
  return Verdict::undecided;
}

std::size_t abelian_product_rank(std::span<const PermGroup> groups) {
  std::set<std::uint32_t> primes;
  for (const auto& g : groups)
    for (auto p : abelianization_primes(g)) primes.insert(p);
  std::size_t best = 0;
  for (auto p : primes) {
    std::size_t sum = 0;
    for (const auto& g : groups) sum += d_p_rank(g, p);
    best = std::max(best, sum);
  }
  return best;
}

namespace {

PermGroup abelianization(const PermGroup& h) {
  if (h.is_abelian()) return h;
  return quotient_group(h, derived_subgroup(h)).group;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

WreathBound wreath_upper_bound(const PermGroup& h, const PermGroup& k, std::uint64_t k0,
                               std::uint64_t seed, std::uint64_t budget) {
  if (!k.is_transitive()) throw PreconditionError("K must be transitive");
  WreathBound out;
  out.n = k.degree();
  out.k0 = k0;
  out.applicable = ipow(Integer(60), out.n) >= Integer(k0);
  out.d_h = d_bounds(h, seed, budget);
  out.d_abelian_top = d_bounds(wreath_product(abelianization(h), k), seed, budget);
  out.d_wreath = d_bounds(wreath_product(h, k), seed, budget);
  out.bound_lower = std::max(out.d_abelian_top.lower, ceil_div(out.d_h.lower, out.n) + 2);
  out.bound_upper = std::max(out.d_abelian_top.upper, ceil_div(out.d_h.upper, out.n) + 2);
  out.verdict = compare_le(out.d_wreath.lower, out.d_wreath.upper, out.bound_lower, out.bound_upper);
  return out;
}

NecessaryConditionRecord necessary_condition_check(const PermGroup& h, const PermGroup& k,
                                                   std::uint64_t seed, std::uint64_t budget) {
  if (!k.is_transitive()) throw PreconditionError("K must be transitive");
  NecessaryConditionRecord out;
  out.n = k.degree();
  out.d_h = d_bounds(h, seed, budget);
  out.d_wreath = d_bounds(wreath_product(h, k), seed, budget);
  const PermGroup pair[] = {h, k};
  out.abelianization_rank = abelian_product_rank(pair);
  out.h_vs_wreath = compare_le(out.d_h.lower, out.d_h.upper, out.n * out.d_wreath.lower,
                               out.n * out.d_wreath.upper);
  out.abelianization_vs_wreath = compare_le(out.abelianization_rank, out.abelianization_rank,
                                            out.d_wreath.lower, out.d_wreath.upper);
  return out;
}

}  // namespace crownforge
