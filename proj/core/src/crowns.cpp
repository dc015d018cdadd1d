#include "crownforge/crowns.hpp"

#include <algorithm>

#include "crownforge/constructions.hpp"
#include "crownforge/errors.hpp"

namespace crownforge {

ModuleAction quotient_module(const ChiefFactor& f) {
  const ModuleAction& m = f.module();
  if (m.is_trivial()) return ModuleAction::trivial(PermGroup::trivial(1), m.prime(), m.dim());
  const auto& act = m.vector_action();
  std::vector<Permutation> gens;
  std::vector<FpMatrix> mats;
  for (std::size_t s = 0; s < act.generator_images().size(); ++s) {
    if (act.generator_images()[s].is_identity()) continue;
    gens.push_back(act.generator_images()[s]);
    mats.push_back(m.matrices()[s]);
  }
  const Integer order = f.ambient().order() / f.centralizer().order();
  return ModuleAction(PermGroup(act.target_degree(), std::move(gens), order), m.prime(), std::move(mats));
}

PermGroup monolithic_group(const ChiefFactor& f) {
  if (f.frattini()) throw PreconditionError("monolithic group of a Frattini factor");
  if (f.abelian()) return module_semidirect(quotient_module(f)).group;
  const Integer order = f.ambient().order() / f.centralizer().order();
  return PermGroup(f.conj_action().target_degree(), f.conj_action().generator_images(), order);
}

Integer crown_quotient_order(const ChiefFactor& f, std::size_t delta) {
  const Integer l = f.ambient().order() / f.centralizer().order() * (f.abelian() ? f.order() : Integer(1));
  return ipow(f.order(), delta) * (l / f.order());
}

std::size_t delta(const ChiefSeries& series, const ChiefFactor& f) {
  std::size_t d = 0;
  for (const auto& h : series.factors)
    if (!h.frattini() && g_equivalent(h, f)) ++d;
  return d;
}

std::vector<Crown> crowns(const ChiefSeries& series, bool with_radicals, std::uint64_t seed) {
  std::vector<Crown> out;
  std::vector<std::size_t> frattini;
  for (std::size_t i = 0; i < series.factors.size(); ++i) {
    const auto& f = series.factors[i];
    if (f.frattini()) {
      frattini.push_back(i);
      continue;
    }
    bool placed = false;
    for (auto& c : out)
      if (g_equivalent(c.representative, f)) {
        c.members.push_back(i);
        placed = true;
        break;
      }
    if (!placed) out.push_back(Crown{f, {i}, 0, 0, PermGroup(), PermGroup(), std::nullopt});
  }
  for (auto& c : out) {
    c.delta = c.members.size();
    c.monolithic = monolithic_group(c.representative);
    c.inner_inducer = c.representative.inner_inducer();
    for (auto i : frattini)
      if (g_equivalent(series.factors[i], c.representative)) ++c.frattini_count;
    if (with_radicals) c.radical = crown_radical(series, c.representative, seed);
  }
  std::stable_sort(out.begin(), out.end(), [](const Crown& a, const Crown& b) {
    if (a.representative.order() != b.representative.order())
      return a.representative.order() < b.representative.order();
    if (a.representative.abelian() != b.representative.abelian()) return a.representative.abelian();
    if (a.delta != b.delta) return a.delta < b.delta;
    return a.members.front() < b.members.front();
  });
  return out;
}

namespace {

// Kernel of some map G -> L_A attached to a non-Frattini factor.
PermGroup crown_kernel(const ChiefFactor& f, std::uint64_t seed) {
  if (!f.abelian()) return f.centralizer();
  auto us = f.complements(1, seed);
  if (us.empty()) throw VerificationError("non-Frattini factor without complement");
  return coset_action(f.ambient(), us[0]).action.kernel();
}

}  // namespace

PermGroup crown_radical(const ChiefSeries& series, const ChiefFactor& f, std::uint64_t seed,
                        std::size_t retries) {
  const PermGroup& g = series.group;
  const std::size_t d = delta(series, f);
  if (d == 0) throw PreconditionError("crown radical of a Frattini factor");
  const Integer target = g.order() / crown_quotient_order(f, d);
  PermGroup r = g;
  auto absorb = [&](const ChiefSeries& cs, std::uint64_t s) {
    for (std::size_t i = 0; i < cs.factors.size(); ++i) {
      const auto& h = cs.factors[i];
      if (h.frattini() || !g_equivalent(h, f)) continue;
      const PermGroup k = crown_kernel(h, stream_seed(s, i));
      if (r.is_subgroup_of(k)) continue;
      const PermGroup both[] = {r, k};
      r = intersect_normal(g, both);
      if (r.order() == target) return true;
    }
    return r.order() == target;
  };
  if (absorb(series, seed)) return r;
  for (std::size_t t = 1; t <= retries; ++t) {
    const std::uint64_t s = stream_seed(seed, t);
    if (absorb(chief_series(g, {}, s), s)) return r;
  }
  throw VerificationError("crown radical: |G/R| = " + to_string(g.order() / r.order()) +
                          " never reached " + to_string(g.order() / target));
}

}  // namespace crownforge
