#include "crownforge/cohomology.hpp"

#include "crownforge/constructions.hpp"
#include "crownforge/errors.hpp"
#include "crownforge/limits.hpp"

namespace crownforge {

namespace {

void append_inverse(Word& w, const Word& u) {
  for (auto it = u.rbegin(); it != u.rend(); ++it) w.push_back(-*it);
}

}  // namespace

Presentation presentation_from_chain(const PermGroup& g) {
  const auto& c = g.chain();
  const auto& levels = c.levels();
  Presentation pres;
  pres.generators = c.strong_generators();
  std::vector<std::vector<Word>> tw(levels.size());
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const auto& lv = levels[l];
    tw[l].resize(lv.orbit.size());
    for (std::size_t k = 1; k < lv.orbit.size(); ++k) {
      tw[l][k] = tw[l][static_cast<std::size_t>(lv.parent[k])];
      tw[l][k].push_back(static_cast<std::int32_t>(lv.label[k]) + 1);
    }
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& lv = levels[i];
    for (std::size_t k = 0; k < lv.orbit.size(); ++k)
      for (auto sidx : lv.generators) {
        const Permutation& s = pres.generators[sidx];
        const auto pos = static_cast<std::size_t>(lv.position[s[lv.orbit[k]]]);
        if (lv.parent[pos] == static_cast<std::int32_t>(k) && lv.label[pos] == sidx) continue;
        Permutation h = lv.transversal[k] * s;
        h *= lv.inverse_transversal[pos];
        Word w = tw[i][k];
        w.push_back(static_cast<std::int32_t>(sidx) + 1);
        append_inverse(w, tw[i][pos]);
        for (std::size_t l = i + 1; l < levels.size(); ++l) {
          const auto q = levels[l].position[h[levels[l].base]];
          if (q < 0) throw VerificationError("stabilizer chain is incomplete");
          append_inverse(w, tw[l][static_cast<std::size_t>(q)]);
          h *= levels[l].inverse_transversal[static_cast<std::size_t>(q)];
        }
        if (!h.is_identity()) throw VerificationError("stabilizer chain is incomplete");
        if (!w.empty()) pres.relators.push_back(std::move(w));
      }
  }
  return pres;
}

Permutation evaluate(const Presentation& p, const Word& w) {
  const std::size_t n = p.generators.empty() ? 1 : p.generators[0].degree();
  Permutation r(n);
  for (auto x : w) {
    const auto& g = p.generators[static_cast<std::size_t>(std::abs(x)) - 1];
    r *= x > 0 ? g : g.inverse();
  }
  return r;
}

std::size_t z1_dimension(const ModuleAction& act) {
  const std::size_t d = act.dim();
  if (d == 0 || act.group().is_trivial()) return 0;
  if (!act.is_valid()) throw VerificationError("module matrices violate a relation of the group");
  const std::uint32_t p = act.prime();
  const Presentation pres = presentation_from_chain(act.group());
  const std::size_t ns = pres.generators.size(), vars = ns * d;
  std::vector<FpMatrix> mats, invs;
  for (const auto& s : pres.generators) {
    mats.push_back(act.matrix_of(s));
    invs.push_back(*mats.back().inverse());
  }
  std::vector<FpVector> rows;
  FpMatrix basis(p, 0, vars);
  auto flush = [&] {
    if (rows.empty()) return;
    std::vector<FpVector> all;
    for (std::size_t i = 0; i < basis.rows(); ++i) all.push_back(basis.row(i));
    all.insert(all.end(), rows.begin(), rows.end());
    basis = row_space(all, p, vars);
    rows.clear();
  };
  for (const auto& rel : pres.relators) {
    FpMatrix lin(p, vars, d);  // cocycle value of the prefix: unknowns * lin
    for (auto x : rel) {
      const auto s = static_cast<std::size_t>(std::abs(x)) - 1;
      lin = lin * (x > 0 ? mats[s] : invs[s]);
      if (x > 0) {
        for (std::size_t a = 0; a < d; ++a) lin.at(s * d + a, a) = (lin.at(s * d + a, a) + 1) % p;
      } else {
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b)
            lin.at(s * d + a, b) = (lin.at(s * d + a, b) + p - invs[s].at(a, b)) % p;
      }
    }
    for (std::size_t col = 0; col < d; ++col) {
      FpVector r(vars);
      for (std::size_t v = 0; v < vars; ++v) r[v] = lin.at(v, col);
      rows.push_back(std::move(r));
    }
    if (rows.size() >= 4 * vars) flush();
  }
  flush();
  return vars - basis.rows();
}

std::size_t fixed_dimension(const ModuleAction& act) {
  const std::size_t d = act.dim();
  const std::uint32_t p = act.prime();
  if (d == 0) return 0;
  FpMatrix sys(p, act.matrices().size() * d, d);
  for (std::size_t s = 0; s < act.matrices().size(); ++s) {
    const FpMatrix t = (act.matrices()[s] - FpMatrix::identity(p, d)).transpose();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) sys.at(s * d + i, j) = t.at(i, j);
  }
  return d - sys.rank();
}

std::size_t h1_dimension(const ModuleAction& act) {
  return z1_dimension(act) - (act.dim() - fixed_dimension(act));
}

Integer complement_count_oracle(const ModuleAction& act) {
  const SemidirectProduct sp = module_semidirect(act);
  const std::size_t k = sp.lifts.size();
  const Integer total = ipow(Integer(sp.module_points), k);
  if (total > limits().complement_search_cap) throw LimitError("complement search space exceeds cap");
  const Integer target = act.group().order();
  std::vector<Permutation> trans;
  for (std::size_t c = 0; c < sp.module_points; ++c) trans.push_back(sp.translation(decode(c, sp.p, sp.dim)));
  Integer count = 0;
  const auto n = static_cast<std::uint64_t>(total);
  std::vector<Permutation> gens(k);
  for (std::uint64_t t = 0; t < n; ++t) {
    std::uint64_t c = t;
    for (std::size_t i = 0; i < k; ++i) {
      gens[i] = sp.lifts[i] * trans[c % sp.module_points];
      c /= sp.module_points;
    }
    if (PermGroup(sp.degree, gens).order() == target) ++count;
  }
  return count;
}

namespace {

// Dimension of the submodule generated by v.
std::size_t spin(const ModuleAction& act, const FpVector& v) {
  const std::uint32_t p = act.prime();
  const std::size_t d = act.dim();
  std::vector<FpVector> basis;  // echelon rows
  std::vector<std::size_t> pivot;
  auto reduce = [&](FpVector w) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const std::uint64_t f = w[pivot[i]];
      if (!f) continue;
      for (std::size_t j = 0; j < d; ++j)
        w[j] = static_cast<std::uint32_t>((w[j] + (p - f) * basis[i][j]) % p);
    }
    return w;
  };
  auto insert = [&](FpVector w) {
    w = reduce(std::move(w));
    std::size_t j = 0;
    while (j < d && w[j] == 0) ++j;
    if (j == d) return false;
    const std::uint64_t inv = inverse_mod(w[j], p);
    for (auto& x : w) x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const std::uint64_t f = basis[i][j];
      if (!f) continue;
      for (std::size_t t = 0; t < d; ++t)
        basis[i][t] = static_cast<std::uint32_t>((basis[i][t] + (p - f) * w[t]) % p);
    }
    basis.push_back(std::move(w));
    pivot.push_back(j);
    return true;
  };
  insert(v);
  for (std::size_t i = 0; i < basis.size() && basis.size() < d; ++i)
    for (const auto& m : act.matrices()) insert(times(basis[i], m));
  return basis.size();
}

}  // namespace

bool is_irreducible(const ModuleAction& act, std::uint64_t seed) {
  const std::size_t d = act.dim();
  const std::uint32_t p = act.prime();
  if (d == 0) return false;
  if (d == 1) return true;
  const Integer points = ipow(Integer(p), d);
  if (points <= 100000) {
    const auto n = static_cast<std::uint64_t>(points);
    std::vector<char> done(n, 0);
    done[0] = 1;
    for (std::uint64_t c = 1; c < n; ++c) {
      if (done[c]) continue;
      const FpVector v = decode(c, p, d);
      if (spin(act, v) < d) return false;
      // the whole orbit of v spins to the same submodule
      std::vector<std::uint64_t> orbit{c};
      done[c] = 1;
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        const FpVector w = decode(orbit[i], p, d);
        for (const auto& m : act.matrices()) {
          const auto x = encode(times(w, m), p);
          if (!done[x]) {
            done[x] = 1;
            orbit.push_back(x);
          }
        }
        for (std::uint32_t a = 2; a < p; ++a) {
          FpVector sw = w;
          for (auto& t : sw) t = static_cast<std::uint32_t>(static_cast<std::uint64_t>(t) * a % p);
          const auto x = encode(sw, p);
          if (!done[x]) {
            done[x] = 1;
            orbit.push_back(x);
          }
        }
      }
    }
    return true;
  }
  Rng rng(seed);
  for (int t = 0; t < 64; ++t) {
    FpVector v(d);
    for (auto& x : v) x = static_cast<std::uint32_t>(rng.below(p));
    if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) continue;
    if (spin(act, v) < d) return false;
  }
  return true;
}

std::size_t end_degree(const ModuleAction& act) {
  if (!is_irreducible(act)) throw PreconditionError("reducible module action");
  return intertwiners(act, act).rows();
}

std::size_t h_formula(std::size_t s, std::size_t r) {
  if (r == 0) throw PreconditionError("r must be positive");
  // s >= 1 for non-Frattini crowns; (s - 1) / r is then an exact floor
  if (s == 0) throw PreconditionError("s must be positive");
  return (s - 1) / r + 2;
}

std::size_t s_value(const ChiefSeries& series, const ChiefFactor& f) {
  if (!f.abelian()) throw PreconditionError("s is defined for abelian factors");
  const std::size_t d = delta(series, f);
  if (d == 0) throw PreconditionError("s of a Frattini factor");
  const ModuleAction q = quotient_module(f);
  const std::size_t e = end_degree(f.module());
  const std::size_t h1 = h1_dimension(q);
  if (h1 % e) throw VerificationError("H^1 dimension not divisible by the End degree");
  return d + h1 / e;
}

HValueBreakdown h_value(const ChiefSeries& series, const ChiefFactor& f) {
  if (!f.abelian()) throw PreconditionError("h is defined for abelian factors");
  HValueBreakdown b;
  b.p = f.prime();
  b.dim = f.dim();
  b.e = end_degree(f.module());
  b.r = b.dim / b.e;
  b.delta = delta(series, f);
  if (b.delta == 0) throw PreconditionError("h of a Frattini factor");
  b.s = s_value(series, f);
  b.trivial_module = f.module().is_trivial();
  b.h = b.trivial_module ? b.delta : h_formula(b.s, b.r);
  return b;
}

std::size_t d_p_rank(const PermGroup& g, std::uint32_t p) {
  if (g.is_trivial()) return 0;
  std::vector<Permutation> s;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    s.push_back(gens[i].pow(p));
    for (std::size_t j = i + 1; j < gens.size(); ++j) s.push_back(commutator(gens[i], gens[j]));
  }
  Integer index = g.order() / normal_closure(g, s).order();
  std::size_t r = 0;
  while (index > 1) {
    index /= p;
    ++r;
  }
  return r;
}

std::vector<std::uint32_t> abelianization_primes(const PermGroup& g) {
  Integer n = g.order() / derived_subgroup(g).order();
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 2; n > 1; ++q) {
    if (Integer(q) * q > n) {
      out.push_back(static_cast<std::uint32_t>(n));
      break;
    }
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  return out;
}

}  // namespace crownforge
