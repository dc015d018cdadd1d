#include "commands.hpp"

#include <filesystem>

#include "crownforge/chief.hpp"
#include "crownforge/cohomology.hpp"
#include "crownforge/crowns.hpp"
#include "crownforge/group_io.hpp"

namespace cli {

using namespace crownforge;

namespace {

Json num(const Integer& v) {
  if (v <= Integer(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(v);
  return v.str();
}

Json group_summary(const PermGroup& g) {
  Json j;
  if (!g.name().empty()) j["name"] = g.name();
  j["degree"] = g.degree();
  j["order"] = num(g.order());
  return j;
}

Json factor_json(const ChiefFactor& f, std::size_t index) {
  Json j;
  j["index"] = index;
  j["order"] = num(f.order());
  j["abelian"] = f.abelian();
  if (f.abelian()) {
    j["p"] = f.prime();
    j["dim"] = f.dim();
    j["trivial_action"] = f.module().is_trivial();
    j["frattini"] = f.frattini();
  } else {
    const SocleType& st = f.socle_type();
    j["socle"] = st.component + (st.power > 1 ? "^" + std::to_string(st.power) : "");
  }
  return j;
}

}  // namespace

PermGroup group_arg(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_group(arg);
  return builtin_group(arg);
}

GroupSequence sequence_arg(const std::string& arg) { return load_sequence(arg); }

Outcome pgen(const std::string& group, std::size_t d, bool exact, std::optional<std::uint64_t> mc,
             std::uint64_t seed) {
  const PermGroup g = group_arg(group);
  Outcome out;
  out.report["command"] = "pgen";
  out.report["group"] = group_summary(g);
  out.report["d"] = d;
  ProbEstimate p;
  if (mc && !exact)
    p = mc_gen_probability(g, d, *mc, seed);
  else
    p = exact_gen_probability(g, d);
  out.report["probability"] = to_json(p);
  return out;
}

Outcome dmin(const std::string& group, std::uint64_t budget, std::uint64_t seed) {
  const PermGroup g = group_arg(group);
  Outcome out;
  out.report["command"] = "dmin";
  out.report["group"] = group_summary(g);
  out.report["budget"] = budget;
  const DBounds b = d_bounds(g, seed, budget);
  out.report["d"] = to_json(b);
  out.violated = !b.witness.empty() && !is_generating(g, b.witness);
  return out;
}

Outcome crownpow_cutoff(const std::string& l, const std::string& socle, std::size_t d,
                        std::optional<std::uint64_t> caut, std::uint64_t seed) {
  const PermGroup lg = group_arg(l), ng = group_arg(socle);
  Outcome out;
  out.report["command"] = "crownpow-cutoff";
  out.report["L"] = group_summary(lg);
  out.report["socle"] = group_summary(ng);
  out.report["d"] = d;
  std::optional<Integer> c;
  if (caut) c = Integer(*caut);
  const TheoremFBound t = theorem_f_max_t(lg, ng, d, c, 100000, seed);
  out.report["cutoff"] = to_json(t);
  const DBounds dl = d_bounds(lg, seed, 20000);
  out.report["d_L"] = to_json(dl);
  if (dl.upper <= d)
    out.report["condition"] = "d >= d(L) holds";
  else if (dl.lower > d)
    out.report["condition"] = "d < d(L): the cutoff does not apply";
  else
    out.report["condition"] = "d(L) interval straddles d: the cutoff is conditional on d >= d(L)";
  return out;
}

Outcome seq_validate(const std::string& seq) {
  const GroupSequence s = sequence_arg(seq);
  Outcome out;
  out.report["command"] = "seq validate";
  out.report["valid"] = true;
  Json entries = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) entries.push_back(group_summary(s[i]));
  out.report["entries"] = entries;
  return out;
}

Outcome seq_rank_trace(const std::string& seq, std::optional<std::size_t> m) {
  const GroupSequence s = sequence_arg(seq);
  const std::size_t top = m.value_or(s.size());
  Outcome out;
  out.report["command"] = "seq rank-trace";
  Json trace = Json::array();
  for (std::size_t i = 1; i <= top; ++i) trace.push_back(abelianization_product_rank(s, i));
  out.report["abelianization_product_rank"] = trace;
  return out;
}

Outcome tower_build(const std::string& seq, std::size_t m) {
  const PermGroup w = iterated_wreath(sequence_arg(seq), m);
  Outcome out;
  out.report["command"] = "tower build";
  out.report["m"] = m;
  out.report["group"] = group_to_json(w);
  out.report["order"] = num(w.order());
  return out;
}

Outcome tower_chief(const std::string& seq, std::size_t m, std::uint64_t seed) {
  const PermGroup w = iterated_wreath(sequence_arg(seq), m);
  const ChiefSeries s = chief_series(w, {}, seed);
  Outcome out;
  out.report["command"] = "tower chief";
  out.report["m"] = m;
  out.report["group"] = group_summary(w);
  out.report["seed"] = seed;
  Json factors = Json::array();
  for (std::size_t i = 0; i < s.factors.size(); ++i) factors.push_back(factor_json(s.factors[i], i + 1));
  out.report["factors"] = factors;
  return out;
}

Outcome tower_crowns(const std::string& seq, std::size_t m, std::uint64_t seed) {
  const PermGroup w = iterated_wreath(sequence_arg(seq), m);
  const ChiefSeries s = chief_series(w, {}, seed);
  Outcome out;
  out.report["command"] = "tower crowns";
  out.report["m"] = m;
  out.report["group"] = group_summary(w);
  out.report["seed"] = seed;
  Json list = Json::array();
  for (const Crown& c : crowns(s)) {
    Json j = factor_json(c.representative, c.members.front() + 1);
    j.erase("index");
    Json members = Json::array();
    for (auto i : c.members) members.push_back(i + 1);
    j["members"] = members;
    j["delta"] = c.delta;
    j["frattini_count"] = c.frattini_count;
    j["monolithic_order"] = num(c.monolithic.order());
    j["inner_inducer_order"] = num(c.inner_inducer.order());
    if (c.representative.abelian()) {
      const HValueBreakdown h = h_value(s, c.representative);
      j["h"] = {{"e", h.e}, {"r", h.r}, {"s", h.s}, {"h", h.h}};
    }
    list.push_back(std::move(j));
  }
  out.report["crowns"] = list;
  return out;
}

Outcome verify_main(const std::string& seq, std::size_t d, std::uint64_t k0, std::size_t m,
                    std::uint64_t seed, std::uint64_t budget) {
  const SequenceReport r = main_theorem_report(sequence_arg(seq), m, d, k0, seed, budget);
  Outcome out;
  out.report["command"] = "verify main";
  out.report["report"] = to_json(r);
  for (const auto& t : r.towers)
    if (t.verdict == Verdict::violated) out.violated = true;
  return out;
}

Outcome verify_chief(const std::string& h, const std::string& k, std::uint64_t seed) {
  const ChiefCheckRecord r = prop_chief_check(group_arg(h), group_arg(k), seed);
  Outcome out;
  out.report["command"] = "verify chief";
  out.report["report"] = to_json(r);
  out.violated = !r.holds();
  return out;
}

Outcome verify_hbounds(const std::string& seq, std::size_t m, std::uint64_t k0,
                       std::optional<std::size_t> d, std::uint64_t seed, std::uint64_t budget) {
  const HBoundRecord r = h_bound_check(sequence_arg(seq), m, k0, d, seed, budget);
  Outcome out;
  out.report["command"] = "verify hbounds";
  out.report["report"] = to_json(r);
  out.violated = r.verdict() == Verdict::violated;
  return out;
}

Outcome verify_pfg(const std::string& seq, std::uint64_t c, std::size_t m, std::uint64_t seed) {
  const PfgRecord r = pfg_check(sequence_arg(seq), m, c, seed);
  Outcome out;
  out.report["command"] = "verify pfg";
  out.report["report"] = to_json(r);
  return out;
}

Outcome verify_wreath(const std::string& h, const std::string& k, std::uint64_t k0, std::uint64_t seed,
                      std::uint64_t budget) {
  const PermGroup hg = group_arg(h), kg = group_arg(k);
  const WreathBound w = wreath_upper_bound(hg, kg, k0, seed, budget);
  const NecessaryConditionRecord n = necessary_condition_check(hg, kg, seed, budget);
  const ModuliRecord mr = moduli_check(hg, kg, seed);
  Outcome out;
  out.report["command"] = "verify wreath";
  out.report["wreath_bound"] = to_json(w);
  out.report["necessary_conditions"] = to_json(n);
  out.report["case_bounds"] = to_json(mr);
  out.report["notes"] = report_footer(k0);
  out.violated = (w.applicable && w.verdict == Verdict::violated) ||
                 n.h_vs_wreath == Verdict::violated ||
                 n.abelianization_vs_wreath == Verdict::violated ||
                 mr.verdict() == Verdict::violated;
  return out;
}

}  // namespace cli
