#include "crownforge/harness.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "crownforge/chief.hpp"
#include "crownforge/cohomology.hpp"
#include "crownforge/crowns.hpp"
#include "crownforge/errors.hpp"

namespace crownforge {

namespace {

bool at_least_log60(const Integer& degree, std::uint64_t k0) {
  if (degree >= 64) return true;
  return ipow(Integer(60), static_cast<std::uint64_t>(degree)) >= Integer(k0);
}

std::vector<PermGroup> slice(const GroupSequence& seq, std::size_t from, std::size_t to) {
  return {seq.groups().begin() + static_cast<std::ptrdiff_t>(from),
          seq.groups().begin() + static_cast<std::ptrdiff_t>(to)};
}

}  // namespace

std::size_t abelianization_product_rank(const GroupSequence& seq, std::size_t m) {
  if (m > seq.size()) throw PreconditionError("m exceeds the sequence length");
  return abelian_product_rank(slice(seq, 0, m));
}

std::optional<std::size_t> first_large_index(const GroupSequence& seq, std::uint64_t k0) {
  Integer degree = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    degree *= seq.degree(i);
    if (at_least_log60(degree, k0)) return i + 1;
  }
  return std::nullopt;
}

SequenceReport main_theorem_report(const GroupSequence& seq, std::size_t m_max, std::size_t d_param,
                                   std::uint64_t k0, std::uint64_t seed, std::uint64_t budget) {
  if (m_max < 1 || m_max > seq.size()) throw PreconditionError("m out of range");
  SequenceReport r;
  r.m_max = m_max;
  r.d_param = d_param;
  r.k0 = k0;
  r.seed = seed;
  r.budget = budget;

  Integer prior = 1;
  for (std::size_t i = 1; i <= m_max; ++i) {
    const PermGroup& g = seq[i - 1];
    IndexRecord e;
    e.index = i;
    e.degree = g.degree();
    e.order = g.order();
    e.d = d_bounds(g, stream_seed(seed, i), budget);
    for (auto p : abelianization_primes(g)) e.p_ranks[p] = d_p_rank(g, p);
    e.prior_degree = prior;
    if (i > 1) {
      const Integer rhs = Integer(d_param) * prior;
      if (Integer(e.d.upper) <= rhs)
        e.condition2 = Verdict::holds;
      else if (Integer(e.d.lower) > rhs)
        e.condition2 = Verdict::violated;
      else
        e.condition2 = Verdict::undecided;
    }
    prior *= g.degree();
    r.entries.push_back(std::move(e));
  }

  r.i0 = first_large_index(seq, k0);
  if (r.i0 && *r.i0 > m_max) r.i0.reset();

  for (std::size_t m = 1; m <= m_max; ++m) {
    const PermGroup w = iterated_wreath(seq, m);
    TowerRecord t;
    t.m = m;
    t.degree = w.degree();
    t.order = w.order();
    t.product_rank = abelianization_product_rank(seq, m);
    t.d = d_bounds(w, stream_seed(seed, 1000 + m), budget);
    if (r.i0 && m == *r.i0) {
      r.e_lower = std::max(d_param + 2, t.d.lower);
      r.e_upper = std::max(d_param + 2, t.d.upper);
      if (!t.d.exact)
        r.notes.push_back("d(W_i0) is inexact; E is the interval [" + std::to_string(r.e_lower) +
                          ", " + std::to_string(r.e_upper) + "] and verdicts use its ends");
    }
    if (r.i0 && m >= *r.i0) {
      t.in_range = true;
      t.tail_rank = abelian_product_rank(slice(seq, *r.i0 - 1, m));
      t.rhs_lower = r.e_lower + t.tail_rank;
      t.rhs_upper = r.e_upper + t.tail_rank;
      t.verdict = compare_le(t.d.lower, t.d.upper, t.rhs_lower, t.rhs_upper);
    }
    r.towers.push_back(std::move(t));
  }
  if (!r.i0) r.notes.push_back("no index up to m reaches degree log_60(k0); the bound is not evaluated");
  for (auto& n : report_footer(k0)) r.notes.push_back(std::move(n));
  return r;
}

std::vector<std::string> report_footer(std::uint64_t k0) {
  return {
      "i0 is the first index with n_1...n_i0 >= log_60(k0), the form used in the theorem "
      "statement; the introduction writes n_1...n_(i0-1) instead",
      "k0 = " + std::to_string(k0) +
          " is a parameter; the inequalities are theorems only for k0 at least the unknown "
          "constant, and are conjectural under the reading k0 = 60",
  };
}

namespace {

// W = H wr K with a chief series through B', B and the lifts N^n of the
// terms of an H chief series inside H'.
struct WreathContext {
  PermGroup h, k, w;
  std::size_t m = 0, n = 0;
  PermGroup base, base_derived;
  ChiefSeries sh, sw, sk;
  std::vector<std::pair<std::size_t, std::size_t>> factor_lifts;  // H index -> W index

  PermGroup lift(const PermGroup& x) const {
    std::vector<Permutation> gens;
    for (const auto& g : x.generators()) gens.push_back(g.extended(w.degree()));
    if (gens.empty()) return PermGroup::trivial(w.degree());
    return normal_closure(w, gens);
  }

  Permutation block_image(const Permutation& x) const {
    std::vector<Point> img(n);
    for (std::size_t j = 0; j < n; ++j) img[j] = static_cast<Point>(x[static_cast<Point>(j * m)] / m);
    return Permutation::unchecked(std::move(img));
  }

  // The K-module of a K chief factor viewed as a W-module through W -> K.
  ModuleAction pulled_back(const ChiefFactor& kf) const {
    std::vector<FpMatrix> mats;
    for (const auto& g : w.generators()) mats.push_back(kf.module().matrix_of(block_image(g)));
    return ModuleAction(w, kf.prime(), std::move(mats));
  }

  // delta_K of a W-module on which B acts trivially.
  std::size_t delta_k(const ChiefFactor& f) const {
    std::size_t count = 0;
    for (const auto& kf : sk.factors) {
      if (!kf.abelian() || kf.prime() != f.prime() || kf.dim() != f.dim() || kf.frattini()) continue;
      if (intertwiners(f.module(), pulled_back(kf)).rows() > 0) ++count;
    }
    return count;
  }
};

WreathContext make_context(const PermGroup& h, const PermGroup& k, std::uint64_t seed) {
  WreathContext c;
  c.h = h;
  c.k = k;
  c.w = wreath_product(h, k);
  c.m = h.degree();
  c.n = k.degree();
  c.base = c.lift(h);
  c.base_derived = derived_subgroup(c.base);
  c.sh = chief_series(h, {}, seed);
  c.sk = chief_series(k, {}, seed);
  const PermGroup hd = derived_subgroup(h);
  std::vector<PermGroup> through{c.base, c.base_derived};
  std::vector<std::pair<std::size_t, PermGroup>> lifted;
  for (std::size_t j = 0; j < c.sh.terms.size(); ++j)
    if (c.sh.terms[j].is_subgroup_of(hd)) lifted.emplace_back(j, c.lift(c.sh.terms[j]));
  for (const auto& [j, l] : lifted) {
    const bool seen = std::any_of(through.begin(), through.end(),
                                  [&](const PermGroup& t) { return t.same_group(l); });
    if (!seen) through.push_back(l);
  }
  c.sw = chief_series(c.w, through, seed);
  // Match H factors X/Y inside H' with W factors X^n/Y^n.
  for (std::size_t j = 0; j + 1 < c.sh.terms.size(); ++j) {
    if (!c.sh.terms[j].is_subgroup_of(hd)) continue;
    const PermGroup x = c.lift(c.sh.terms[j]), y = c.lift(c.sh.terms[j + 1]);
    for (std::size_t i = 0; i < c.sw.factors.size(); ++i)
      if (c.sw.terms[i].same_group(x) && c.sw.terms[i + 1].same_group(y)) c.factor_lifts.emplace_back(j, i);
  }
  return c;
}

}  // namespace

bool ChiefCheckRecord::holds() const {
  return std::all_of(part1.begin(), part1.end(), [](const auto& r) { return r.holds(); }) &&
         std::all_of(part2.begin(), part2.end(), [](const auto& r) { return r.holds(); });
}

ChiefCheckRecord prop_chief_check(const PermGroup& h, const PermGroup& k, std::uint64_t seed) {
  const WreathContext c = make_context(h, k, seed);
  ChiefCheckRecord rec;
  rec.wreath_order = c.w.order();
  for (const auto& [j, i] : c.factor_lifts) {
    const ChiefFactor& a = c.sh.factors[j];
    if (a.frattini()) continue;
    const ChiefFactor& mf = c.sw.factors[i];
    ChiefPart1Record r;
    r.factor = "|A| = " + a.order().str() + " at position " + std::to_string(j + 1) + " of the H series";
    r.n = c.n;
    r.delta_h = delta(c.sh, a);
    r.delta_w = delta(c.sw, mf);
    r.l_a_order = monolithic_group(a).order();
    r.l_m_order = monolithic_group(mf).order();
    r.k_order = c.k.order();
    r.socle_matches = mf.order() == ipow(a.order(), c.n);
    r.l_identity = r.l_m_order == ipow(r.l_a_order, c.n) * r.k_order;
    r.not_above_b_prime = true;
    for (std::size_t t = 0; t < c.sw.factors.size(); ++t) {
      const ChiefFactor& f = c.sw.factors[t];
      if (!c.base_derived.is_subgroup_of(f.lower()) || f.frattini()) continue;
      if (g_equivalent(mf, f)) r.not_above_b_prime = false;
    }
    rec.part1.push_back(std::move(r));
  }
  for (const ChiefFactor& f : c.sw.factors) {
    if (!f.abelian() || f.frattini()) continue;
    if (!c.base_derived.is_subgroup_of(f.lower()) || !f.upper().is_subgroup_of(c.base)) continue;
    ChiefPart2Record r;
    r.p = f.prime();
    r.dim = f.dim();
    r.delta_w = delta(c.sw, f);
    r.delta_k = c.delta_k(f);
    r.d_p_h = d_p_rank(h, f.prime());
    r.r = f.dim() / end_degree(f.module());
    rec.part2.push_back(r);
  }
  return rec;
}

namespace {

Verdict combine(Verdict acc, Verdict v) {
  if (acc == Verdict::violated || v == Verdict::violated) return Verdict::violated;
  if (acc == Verdict::undecided || v == Verdict::undecided) return Verdict::undecided;
  return Verdict::holds;
}

}  // namespace

Verdict ModuliRecord::verdict() const {
  Verdict v = Verdict::holds;
  for (const auto& c : cases)
    if (c.case_number != 0) v = combine(v, c.verdict);
  return v;
}

ModuliRecord moduli_check(const PermGroup& h, const PermGroup& k, std::uint64_t seed) {
  const WreathContext c = make_context(h, k, seed);
  ModuliRecord rec;
  rec.n = c.n;
  for (const Crown& cr : crowns(c.sw)) {
    const ChiefFactor& rep = cr.representative;
    if (!rep.abelian() || rep.module().is_trivial()) continue;
    const HValueBreakdown hb = h_value(c.sw, rep);
    ModuliCase mc;
    mc.p = hb.p;
    mc.dim = hb.dim;
    mc.h_w = hb.h;
    mc.delta_w = hb.delta;
    std::optional<std::size_t> in_bd, in_b;
    for (std::size_t idx : cr.members) {
      const ChiefFactor& f = c.sw.factors[idx];
      if (f.upper().is_subgroup_of(c.base_derived) && !in_bd) in_bd = idx;
      if (c.base_derived.is_subgroup_of(f.lower()) && f.upper().is_subgroup_of(c.base) && !in_b)
        in_b = idx;
    }
    // h_K(M) for a module on which B acts trivially.
    // With s = 0 the floor of (s - 1) / r is -1, so h = 1.
    auto h_k = [&](const ChiefFactor& f, std::size_t dk) -> std::optional<std::size_t> {
      const std::size_t h1 = h1_dimension(quotient_module(f));
      const std::size_t s = dk + h1 / hb.e;
      if (s == 0) return 1;
      return h_formula(s, hb.r);
    };
    if (in_bd) {
      mc.case_number = 1;
      const auto it = std::find_if(c.factor_lifts.begin(), c.factor_lifts.end(),
                                   [&](const auto& pr) { return pr.second == *in_bd; });
      if (it == c.factor_lifts.end()) {
        mc.detail = "no member of the form A^n";
      } else {
        const std::size_t hh = h_value(c.sh, c.sh.factors[it->first]).h;
        mc.bound = (hh - 2 + c.n - 1) / c.n + 2;
        mc.verdict = compare_le(mc.h_w, mc.h_w, mc.bound, mc.bound);
        mc.detail = "h_H(U) = " + std::to_string(hh);
      }
    } else if (in_b) {
      mc.case_number = 2;
      const ChiefFactor& f = c.sw.factors[*in_b];
      const std::size_t dk = c.delta_k(f);
      const auto hk = h_k(f, dk);
      const std::size_t dp = d_p_rank(h, hb.p);
      if (!hk) {
        mc.detail = "s_K(M) = 0";
      } else {
        mc.bound = *hk + dp;
        mc.verdict = compare_le(mc.h_w, mc.h_w, mc.bound, mc.bound);
        mc.detail = "h_K(M) = " + std::to_string(*hk) + ", d_p(H/H') = " + std::to_string(dp);
      }
    } else {
      const std::size_t dk = c.delta_k(rep);
      if (dk >= 1 && dk == hb.delta) {
        mc.case_number = 3;
        const auto hk = h_k(rep, dk);
        mc.bound = hk.value_or(0);
        mc.verdict = hk && *hk == mc.h_w ? Verdict::holds : Verdict::violated;
        mc.detail = "h_W(M) = h_K(M) required";
      } else {
        mc.detail = "delta_W(M) = " + std::to_string(hb.delta) + ", delta_K(M) = " + std::to_string(dk);
      }
    }
    rec.cases.push_back(std::move(mc));
  }
  return rec;
}

Verdict HBoundRecord::verdict() const {
  Verdict v = Verdict::holds;
  for (const auto& e : entries) v = combine(v, e.verdict);
  if (moduli) v = combine(v, moduli->verdict());
  return v;
}

HBoundRecord h_bound_check(const GroupSequence& seq, std::size_t m, std::uint64_t k0,
                           std::optional<std::size_t> d_param, std::uint64_t seed,
                           std::uint64_t budget) {
  if (m < 1 || m > seq.size()) throw PreconditionError("m out of range");
  HBoundRecord rec;
  rec.m = m;
  rec.k0 = k0;
  rec.i0 = first_large_index(seq, k0);
  if (rec.i0 && *rec.i0 > m) rec.i0.reset();
  if (d_param) {
    rec.d_param = *d_param;
  } else {
    Integer prior = seq.degree(0);
    rec.d_param = 1;
    for (std::size_t i = 2; i <= m; ++i) {
      const DBounds b = d_bounds(seq[i - 1], stream_seed(seed, i), budget);
      const Integer need = (Integer(b.upper) + prior - 1) / prior;
      rec.d_param = std::max(rec.d_param, static_cast<std::size_t>(need));
      prior *= seq.degree(i - 1);
    }
  }

  if (rec.i0) {
    const DBounds b = d_bounds(iterated_wreath(seq, *rec.i0), stream_seed(seed, 1000 + *rec.i0), budget);
    rec.e_lower = std::max(rec.d_param + 2, b.lower);
    rec.e_upper = std::max(rec.d_param + 2, b.upper);
  }
  // Chief factors of a wreath product come from those of its two factors,
  // so without abelian factors in any G_i there is nothing to check.
  bool has_abelian = false;
  for (std::size_t i = 1; i <= m && !has_abelian; ++i) {
    const ChiefSeries s = chief_series(seq[i - 1], {}, seed);
    has_abelian = std::any_of(s.factors.begin(), s.factors.end(),
                              [](const ChiefFactor& f) { return f.abelian(); });
  }
  if (!has_abelian) {
    rec.vacuous = true;
    return rec;
  }
  const ChiefSeries series = chief_series(iterated_wreath(seq, m), {}, seed);
  for (const Crown& cr : crowns(series)) {
    const ChiefFactor& f = cr.representative;
    if (!f.abelian() || f.module().is_trivial()) continue;
    HBoundEntry e;
    e.p = f.prime();
    e.dim = f.dim();
    e.h = h_value(series, f).h;
    if (rec.i0) {
      std::size_t dp = 0;
      for (std::size_t i = *rec.i0; i <= m; ++i) dp += d_p_rank(seq[i - 1], e.p);
      e.bound_lower = rec.e_lower + dp;
      e.bound_upper = rec.e_upper + dp;
      e.verdict = compare_le(e.h, e.h, e.bound_lower, e.bound_upper);
    }
    rec.entries.push_back(e);
  }
  rec.vacuous = rec.entries.empty();
  if (m >= 2) rec.moduli = moduli_check(seq[m - 1], iterated_wreath(seq, m - 1), seed);
  return rec;
}

WreathAbRecord wreath_ab_check(const PermGroup& abelian_h, const PermGroup& k, std::uint64_t seed,
                               std::uint64_t budget) {
  if (!abelian_h.is_abelian()) throw PreconditionError("the base group must be abelian");
  WreathAbRecord rec;
  rec.d_wreath = d_bounds(wreath_product(abelian_h, k), seed, budget);
  rec.d_product = d_bounds(direct_product(abelian_h, k), seed, budget);
  const ChiefSeries sk = chief_series(k, {}, seed);
  const auto kcrowns = crowns(sk);
  rec.bound_lower = rec.d_product.lower;
  rec.bound_upper = rec.d_product.upper;
  for (auto p : abelianization_primes(abelian_h)) {
    std::size_t best = 0;
    bool any = false;
    for (const Crown& cr : kcrowns) {
      const ChiefFactor& f = cr.representative;
      if (!f.abelian() || f.prime() != p || f.module().is_trivial()) continue;
      best = std::max(best, h_value(sk, f).h);
      any = true;
    }
    const std::size_t rho = any ? best + d_p_rank(abelian_h, p) : 0;
    rec.rho[p] = rho;
    rec.bound_lower = std::max(rec.bound_lower, rho);
    rec.bound_upper = std::max(rec.bound_upper, rho);
  }
  rec.verdict = compare_le(rec.d_wreath.lower, rec.d_wreath.upper, rec.bound_lower, rec.bound_upper);
  if (rec.verdict == Verdict::violated) rec.verdict = Verdict::undecided;
  return rec;
}

const char* to_string(PfgStatus s) {
  switch (s) {
    case PfgStatus::satisfied:
      return "satisfied";
    case PfgStatus::violated:
      return "violated";
    default:
      return "type not in table";
  }
}

bool pfg_inequality(std::size_t delta, const Integer& l, const Integer& exponent) {
  if (l <= 1 || exponent == 0) return delta <= 1;
  if (exponent >= 64) return true;
  return Integer(delta) <= ipow(l, static_cast<std::uint64_t>(exponent));
}

PfgStatus PfgRecord::status() const {
  PfgStatus s = PfgStatus::satisfied;
  for (const auto& e : entries) {
    if (e.status == PfgStatus::violated) return PfgStatus::violated;
    if (e.status == PfgStatus::unknown_type) s = PfgStatus::unknown_type;
  }
  return s;
}

PfgRecord pfg_check(const GroupSequence& seq, std::size_t m_max, std::uint64_t c, std::uint64_t seed) {
  if (m_max < 1 || m_max > seq.size()) throw PreconditionError("m out of range");
  PfgRecord rec;
  rec.c = c;
  Integer prior = 1;
  for (std::size_t i = 1; i <= m_max; ++i) {
    const ChiefSeries series = chief_series(seq[i - 1], {}, seed);
    for (const Crown& cr : crowns(series)) {
      const ChiefFactor& f = cr.representative;
      if (f.abelian()) continue;
      const SocleType& st = f.socle_type();
      PfgEntry e;
      e.index = i;
      e.socle = st.component + (st.power > 1 ? "^" + std::to_string(st.power) : "");
      e.delta = cr.delta;
      e.exponent = Integer(c) * prior;
      if (st.info) {
        e.l = ipow(st.info->min_degree, st.power);
        e.status = pfg_inequality(e.delta, *e.l, e.exponent) ? PfgStatus::satisfied : PfgStatus::violated;
      }
      rec.entries.push_back(std::move(e));
    }
    prior *= seq.degree(i - 1);
  }
  return rec;
}

namespace {

// Small integers as numbers, big ones as decimal strings.
Json num(const Integer& v) {
  if (v >= 0 && v <= Integer(std::numeric_limits<std::int64_t>::max()))
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json tuple_json(const std::vector<Permutation>& t) {
  Json a = Json::array();
  for (const auto& x : t) a.push_back(x.to_string());
  return a;
}

}  // namespace

Json to_json(const DBounds& b) {
  Json j;
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["exact"] = b.exact;
  j["lower_reason"] = b.lower_reason;
  j["witness"] = tuple_json(b.witness);
  j["seed"] = b.seed;
  j["trials_used"] = b.trials_used;
  Json trace = Json::array();
  for (const auto& s : b.trace)
    trace.push_back({{"k", s.k}, {"random_trials", s.random_trials}, {"local_steps", s.local_steps},
                     {"found", s.found}});
  j["search_trace"] = trace;
  return j;
}

Json to_json(const ProbEstimate& p) {
  Json j;
  j["provenance"] = p.exact ? "exact" : "monte-carlo";
  if (p.exact) j["value"] = to_string(p.value);
  j["point"] = p.point;
  if (!p.exact) {
    j["lower"] = p.lower;
    j["upper"] = p.upper;
    j["confidence"] = 0.99;
    j["seed"] = p.seed;
  }
  j["successes"] = num(p.successes);
  j["trials"] = num(p.trials);
  return j;
}

Json to_json(const TheoremFBound& t) {
  Json j;
  j["provenance"] = t.exact ? "exact" : "interval";
  j["max_t"] = num(t.bound);
  if (!t.exact) j["max_t_high"] = num(t.bound_high);
  j["caut"] = num(t.caut);
  j["p_l"] = to_json(t.p_l);
  j["p_quotient"] = to_json(t.p_quotient);
  return j;
}

Json to_json(const WreathBound& w) {
  Json j;
  j["n"] = w.n;
  j["k0"] = w.k0;
  j["applicable"] = w.applicable;
  j["d_h"] = to_json(w.d_h);
  j["d_abelian_top"] = to_json(w.d_abelian_top);
  j["d_wreath"] = to_json(w.d_wreath);
  j["bound"] = {w.bound_lower, w.bound_upper};
  j["verdict"] = to_string(w.verdict);
  return j;
}

Json to_json(const NecessaryConditionRecord& r) {
  Json j;
  j["n"] = r.n;
  j["d_h"] = to_json(r.d_h);
  j["d_wreath"] = to_json(r.d_wreath);
  j["abelianization_rank"] = r.abelianization_rank;
  j["d_h_le_n_d_wreath"] = to_string(r.h_vs_wreath);
  j["abelianization_le_d_wreath"] = to_string(r.abelianization_vs_wreath);
  return j;
}

Json to_json(const SequenceReport& r) {
  Json j;
  j["m_max"] = r.m_max;
  j["d_param"] = r.d_param;
  j["k0"] = r.k0;
  j["seed"] = r.seed;
  j["budget"] = r.budget;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x;
    x["index"] = e.index;
    x["degree"] = e.degree;
    x["order"] = num(e.order);
    x["d"] = to_json(e.d);
    Json ranks = Json::object();
    for (const auto& [p, v] : e.p_ranks) ranks[std::to_string(p)] = v;
    x["p_ranks"] = ranks;
    x["prior_degree"] = num(e.prior_degree);
    x["condition2"] = e.index > 1 ? to_string(e.condition2) : "not required";
    entries.push_back(std::move(x));
  }
  j["entries"] = entries;
  j["i0"] = r.i0 ? Json(*r.i0) : Json(nullptr);
  j["E"] = {r.e_lower, r.e_upper};
  Json towers = Json::array();
  for (const auto& t : r.towers) {
    Json x;
    x["m"] = t.m;
    x["degree"] = t.degree;
    x["order"] = num(t.order);
    x["abelianization_product_rank"] = t.product_rank;
    x["d"] = to_json(t.d);
    if (t.in_range) {
      x["tail_rank"] = t.tail_rank;
      x["bound"] = {t.rhs_lower, t.rhs_upper};
      x["verdict"] = to_string(t.verdict);
    } else {
      x["verdict"] = "not applicable (m < i0)";
    }
    towers.push_back(std::move(x));
  }
  j["towers"] = towers;
  j["notes"] = r.notes;
  return j;
}

Json to_json(const ChiefCheckRecord& r) {
  Json j;
  j["wreath_order"] = num(r.wreath_order);
  Json p1 = Json::array();
  for (const auto& x : r.part1)
    p1.push_back({{"factor", x.factor},
                  {"delta_h", x.delta_h},
                  {"delta_w", x.delta_w},
                  {"l_a_order", num(x.l_a_order)},
                  {"l_m_order", num(x.l_m_order)},
                  {"socle_order_matches", x.socle_matches},
                  {"l_identity", x.l_identity},
                  {"not_equivalent_above_b_prime", x.not_above_b_prime},
                  {"holds", x.holds()}});
  j["part1"] = p1;
  Json p2 = Json::array();
  for (const auto& x : r.part2)
    p2.push_back({{"p", x.p},
                  {"dim", x.dim},
                  {"delta_w", x.delta_w},
                  {"delta_k", x.delta_k},
                  {"d_p_h", x.d_p_h},
                  {"r", x.r},
                  {"holds", x.holds()}});
  j["part2"] = p2;
  j["holds"] = r.holds();
  return j;
}

Json to_json(const ModuliRecord& r) {
  Json j;
  j["n"] = r.n;
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json x;
    x["p"] = c.p;
    x["dim"] = c.dim;
    x["h_w"] = c.h_w;
    x["delta_w"] = c.delta_w;
    x["case"] = c.case_number;
    if (c.case_number != 0) {
      x["bound"] = c.bound;
      x["verdict"] = to_string(c.verdict);
    }
    x["detail"] = c.detail;
    cases.push_back(std::move(x));
  }
  j["cases"] = cases;
  j["verdict"] = to_string(r.verdict());
  return j;
}

Json to_json(const HBoundRecord& r) {
  Json j;
  j["m"] = r.m;
  j["i0"] = r.i0 ? Json(*r.i0) : Json(nullptr);
  j["d_param"] = r.d_param;
  j["k0"] = r.k0;
  j["E"] = {r.e_lower, r.e_upper};
  j["vacuous"] = r.vacuous;
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"p", e.p},
                       {"dim", e.dim},
                       {"h", e.h},
                       {"bound", {e.bound_lower, e.bound_upper}},
                       {"verdict", to_string(e.verdict)}});
  j["modules"] = entries;
  if (r.moduli) j["case_bounds"] = to_json(*r.moduli);
  j["verdict"] = to_string(r.verdict());
  j["notes"] = report_footer(r.k0);
  return j;
}

Json to_json(const WreathAbRecord& r) {
  Json j;
  j["d_wreath"] = to_json(r.d_wreath);
  j["d_product"] = to_json(r.d_product);
  Json rho = Json::object();
  for (const auto& [p, v] : r.rho) rho[std::to_string(p)] = v;
  j["rho"] = rho;
  j["rho_provenance"] = "restricted rho: modules occurring as chief factors only";
  j["bound"] = {r.bound_lower, r.bound_upper};
  j["verdict"] = to_string(r.verdict);
  return j;
}

Json to_json(const PfgRecord& r) {
  Json j;
  j["c"] = r.c;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x;
    x["index"] = e.index;
    x["socle"] = e.socle;
    x["delta"] = e.delta;
    x["l"] = e.l ? num(*e.l) : Json(nullptr);
    x["exponent"] = num(e.exponent);
    x["status"] = to_string(e.status);
    entries.push_back(std::move(x));
  }
  j["entries"] = entries;
  j["status"] = to_string(r.status());
  return j;
}

}  // namespace crownforge
