#include "crownforge/chief.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "crownforge/errors.hpp"
#include "crownforge/limits.hpp"

namespace crownforge {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<Point>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Point x : v) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

using CosetMap = std::unordered_map<std::vector<Point>, std::uint64_t, KeyHash>;

// Keys for cosets of a normal subgroup: canonical representative images on
// the ambient group's base.
class CosetKeyer {
 public:
  CosetKeyer(const PermGroup& ambient, const PermGroup& lower)
      : chain_(lower.shared_chain()), base_(ambient.chain().base()) {}
  std::vector<Point> operator()(const Permutation& x) const {
    const Permutation c = chain_->canonical_coset_rep(x);
    std::vector<Point> k(base_.size());
    for (std::size_t i = 0; i < k.size(); ++i) k[i] = c[base_[i]];
    return k;
  }

 private:
  std::shared_ptr<const StabChain> chain_;
  std::vector<Point> base_;
};

bool prime_power(Integer n, std::uint32_t& p, std::size_t& e) {
  if (n < 2) return false;
  for (std::uint32_t d = 2;; ++d) {
    if (Integer(d) * d > n) {
      if (n > std::numeric_limits<std::uint32_t>::max()) return false;
      p = static_cast<std::uint32_t>(n);
      e = 1;
      return true;
    }
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return n == 1;
}

}  // namespace

struct ChiefFactor::Impl {
  PermGroup g, x, y;
  Integer order;
  bool abelian = false;
  std::uint32_t p = 0;
  std::size_t dim = 0;
  CosetKeyer keyer;

  std::once_flag coords_once;
  CosetMap coords;           // key -> vector code
  std::vector<Permutation> reps;  // by vector code

  std::once_flag module_once;
  std::optional<ModuleAction> module;

  std::once_flag conj_once;
  std::optional<Homomorphism> conj;

  std::once_flag table_once;
  std::unique_ptr<FactorTable> table;

  std::once_flag socle_once;
  SocleType socle;

  std::once_flag cent_once;
  PermGroup centralizer;

  std::once_flag inner_once;
  PermGroup inner;

  std::once_flag frattini_once;
  bool frattini = false;

  Impl(PermGroup g_, PermGroup x_, PermGroup y_)
      : g(std::move(g_)), x(std::move(x_)), y(std::move(y_)), keyer(g, y) {}

  void build_coordinates();
};

void ChiefFactor::Impl::build_coordinates() {
  if (order > limits().factor_cap) throw LimitError("abelian factor too large for coordinates");
  reps = {Permutation(g.degree())};
  coords.emplace(keyer(reps[0]), 0);
  for (const auto& b : x.generators()) {
    if (coords.count(keyer(b))) continue;
    const std::size_t base_size = reps.size();
    Permutation power(g.degree());
    for (std::uint32_t a = 1; a < p; ++a) {
      power *= b;
      for (std::size_t c = 0; c < base_size; ++c) {
        Permutation r = reps[c] * power;
        const std::uint64_t code = c + static_cast<std::uint64_t>(a) * base_size;
        if (!coords.emplace(keyer(r), code).second)
          throw VerificationError("factor is not elementary abelian");
        reps.push_back(std::move(r));
      }
    }
    if (reps.size() == order) break;
  }
  if (reps.size() != order) throw VerificationError("factor coordinates incomplete");
}

ChiefFactor::ChiefFactor(PermGroup ambient, PermGroup upper, PermGroup lower)
    : impl_(std::make_shared<Impl>(std::move(ambient), std::move(upper), std::move(lower))) {
  auto& m = *impl_;
  if (!m.y.is_subgroup_of(m.x)) throw PreconditionError("chief factor: lower term not inside upper");
  m.order = m.x.order() / m.y.order();
  if (m.order < 2) throw PreconditionError("chief factor must be nontrivial");
  m.abelian = true;
  const auto& xg = m.x.generators();
  for (std::size_t i = 0; i < xg.size() && m.abelian; ++i)
    for (std::size_t j = i + 1; j < xg.size(); ++j)
      if (!m.y.contains(commutator(xg[i], xg[j]))) {
        m.abelian = false;
        break;
      }
  if (m.abelian && !prime_power(m.order, m.p, m.dim))
    throw VerificationError("abelian factor of order " + to_string(m.order) + " is not a chief factor");
}

const PermGroup& ChiefFactor::ambient() const { return impl_->g; }
const PermGroup& ChiefFactor::upper() const { return impl_->x; }
const PermGroup& ChiefFactor::lower() const { return impl_->y; }
const Integer& ChiefFactor::order() const { return impl_->order; }
bool ChiefFactor::abelian() const { return impl_->abelian; }

std::uint32_t ChiefFactor::prime() const {
  if (!abelian()) throw PreconditionError("prime of a nonabelian factor");
  return impl_->p;
}

std::size_t ChiefFactor::dim() const {
  if (!abelian()) throw PreconditionError("dimension of a nonabelian factor");
  return impl_->dim;
}

FpVector ChiefFactor::coordinates(const Permutation& x) const {
  if (!abelian()) throw PreconditionError("coordinates of a nonabelian factor");
  std::call_once(impl_->coords_once, [this] { impl_->build_coordinates(); });
  auto it = impl_->coords.find(impl_->keyer(x));
  if (it == impl_->coords.end()) throw PreconditionError("element not in the factor");
  return decode(it->second, impl_->p, impl_->dim);
}

Permutation ChiefFactor::representative(const FpVector& v) const {
  if (!abelian()) throw PreconditionError("representative of a nonabelian factor");
  std::call_once(impl_->coords_once, [this] { impl_->build_coordinates(); });
  return impl_->reps[encode(v, impl_->p)];
}

const ModuleAction& ChiefFactor::module() const {
  if (!abelian()) throw PreconditionError("module of a nonabelian factor");
  std::call_once(impl_->module_once, [this] {
    auto& m = *impl_;
    std::call_once(m.coords_once, [&] { m.build_coordinates(); });
    std::vector<Permutation> basis;
    std::uint64_t code = 1;
    for (std::size_t i = 0; i < m.dim; ++i, code *= m.p) basis.push_back(m.reps[code]);
    std::vector<FpMatrix> mats;
    for (const auto& s : m.g.generators()) {
      FpMatrix mat(m.p, m.dim, m.dim);
      for (std::size_t i = 0; i < m.dim; ++i) {
        const FpVector row = coordinates(basis[i].conjugate_by(s));
        for (std::size_t j = 0; j < m.dim; ++j) mat.at(i, j) = row[j];
      }
      mats.push_back(std::move(mat));
    }
    m.module.emplace(m.g, m.p, std::move(mats));
  });
  return *impl_->module;
}

const Homomorphism& ChiefFactor::conj_action() const {
  if (abelian()) throw PreconditionError("conjugation action is kept for nonabelian factors");
  std::call_once(impl_->conj_once, [this] {
    auto& m = *impl_;
    CosetMap where;
    std::vector<Permutation> omega;
    for (const auto& b : m.x.generators()) {
      if (m.y.contains(b)) continue;
      if (where.emplace(m.keyer(b), omega.size()).second) omega.push_back(b);
    }
    const auto& gens = m.g.generators();
    std::vector<std::vector<Point>> img(gens.size());
    for (std::size_t i = 0; i < omega.size(); ++i)
      for (std::size_t s = 0; s < gens.size(); ++s) {
        Permutation c = omega[i].conjugate_by(gens[s]);
        auto [it, fresh] = where.emplace(m.keyer(c), omega.size());
        if (fresh) {
          omega.push_back(std::move(c));
          if (omega.size() > limits().factor_cap) throw LimitError("conjugation orbit exceeds cap");
        }
        img[s].push_back(static_cast<Point>(it->second));
      }
    std::vector<Permutation> perms;
    for (auto& v : img) perms.push_back(Permutation::unchecked(std::move(v)));
    m.conj.emplace(m.g, omega.size(), std::move(perms));
  });
  return *impl_->conj;
}

const FactorTable& ChiefFactor::table() const {
  std::call_once(impl_->table_once, [this] {
    impl_->table = std::make_unique<FactorTable>(impl_->g, impl_->x, impl_->y);
  });
  return *impl_->table;
}

namespace {

std::size_t log_of(Integer n, const Integer& base) {
  std::size_t a = 0;
  while (n > 1) {
    if (n % base != 0) throw VerificationError("factor is not a power of its component");
    n /= base;
    ++a;
  }
  return a;
}

}  // namespace

const SocleType& ChiefFactor::socle_type() const {
  if (abelian()) throw PreconditionError("socle type of an abelian factor");
  std::call_once(impl_->socle_once, [this] {
    auto& m = *impl_;
    SocleType st;
    std::set<std::uint64_t> orders;
    if (m.order <= limits().table_cap) {
      const auto& t = table();
      std::vector<FactorTable::Index> reps;
      t.classes(&reps);
      std::vector<FactorTable::Index> best;
      for (auto r : reps) {
        if (r == 0) continue;
        auto nc = t.normal_closure({r});
        if (best.empty() || nc.size() < best.size()) best = std::move(nc);
      }
      st.component_order = best.size();
      for (auto e : best) orders.insert(t.order_of(e));
    } else {
      // the factor acts faithfully on the coset set of the conjugation action
      const auto& f = conj_action();
      std::vector<Permutation> ximg;
      for (const auto& b : m.x.generators()) ximg.push_back(f(b));
      const PermGroup realized(f.target_degree(), std::move(ximg), m.order);
      Rng rng(0x50c1eULL);
      const PermGroup comp =
          minimal_normal_between(realized, realized, PermGroup::trivial(realized.degree()), rng);
      st.component_order = comp.order();
      for (const auto& e : comp.elements(limits().factor_cap)) orders.insert(static_cast<std::uint64_t>(e.order()));
    }
    st.power = log_of(m.order, st.component_order);
    st.info = identify_simple(st.component_order, orders);
    st.component = st.info ? st.info->name : "order " + to_string(st.component_order);
    m.socle = std::move(st);
  });
  return impl_->socle;
}

const PermGroup& ChiefFactor::centralizer() const {
  std::call_once(impl_->cent_once, [this] {
    impl_->centralizer = abelian() ? module().kernel() : conj_action().kernel();
  });
  return impl_->centralizer;
}

const PermGroup& ChiefFactor::inner_inducer() const {
  std::call_once(impl_->inner_once, [this] {
    impl_->inner = abelian() ? centralizer() : join(upper(), centralizer());
  });
  return impl_->inner;
}

std::vector<PermGroup> ChiefFactor::complements(std::size_t limit, std::uint64_t seed) const {
  std::vector<PermGroup> found;
  if (!abelian() || limit == 0) return found;
  auto& m = *impl_;
  std::call_once(m.coords_once, [&] { m.build_coordinates(); });
  // generators of G modulo X, greedily reduced
  std::vector<Permutation> gens;
  for (const auto& s : m.g.generators())
    if (!m.x.contains(s)) gens.push_back(s);
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Permutation> rest = m.x.generators();
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    if (PermGroup(m.g.degree(), rest).order() == m.g.order()) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
  }
  const Integer target = m.g.order() / m.order;
  Integer total = ipow(m.order, gens.size());
  if (total > limits().complement_search_cap) throw LimitError("complement search space exceeds cap");
  const auto count = static_cast<std::uint64_t>(total);
  const auto q = static_cast<std::uint64_t>(m.order);
  Rng rng(seed);
  const std::uint64_t start = seed ? rng.below(count) : 0;
  std::vector<Permutation> cand;
  for (std::uint64_t step = 0; step < count && found.size() < limit; ++step) {
    std::uint64_t c = (start + step) % count;
    cand = m.y.generators();
    for (const auto& s : gens) {
      cand.push_back(s * m.reps[c % q]);
      c /= q;
    }
    PermGroup u(m.g.degree(), cand);
    if (u.order() == target) found.push_back(std::move(u));
  }
  return found;
}

bool ChiefFactor::frattini() const {
  if (!abelian()) return false;
  std::call_once(impl_->frattini_once, [this] { impl_->frattini = complements(1, 0).empty(); });
  return impl_->frattini;
}

bool is_frattini_factor(const ChiefFactor& f) { return f.frattini(); }
const PermGroup& factor_centralizer(const ChiefFactor& f) { return f.centralizer(); }

}  // namespace crownforge

namespace crownforge {

namespace {

// A proper G-normal subgroup strictly between y and z, if one exists,
// found by checking every G-class of cosets of y in z.
std::optional<PermGroup> smaller_normal(const PermGroup& g, const PermGroup& z, const PermGroup& y) {
  const Integer index = z.order() / y.order();
  if (index > limits().factor_cap)
    throw LimitError("factor of order " + to_string(index) + " too large to verify minimality");
  const CosetKeyer keyer(g, y);
  CosetMap where;
  std::vector<Permutation> reps{Permutation(g.degree())};
  where.emplace(keyer(reps[0]), 0);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (const auto& s : z.generators()) {
      Permutation c = reps[i] * s;
      if (where.emplace(keyer(c), reps.size()).second) reps.push_back(std::move(c));
    }
  std::vector<char> done(reps.size(), 0);
  done[0] = 1;
  for (std::size_t r = 1; r < reps.size(); ++r) {
    if (done[r]) continue;
    std::vector<std::size_t> orbit{r};
    done[r] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& s : g.generators()) {
        const auto j = static_cast<std::size_t>(where.at(keyer(reps[orbit[i]].conjugate_by(s))));
        if (!done[j]) {
          done[j] = 1;
          orbit.push_back(j);
        }
      }
    PermGroup c = normal_closure(g, y, std::span<const Permutation>(&reps[r], 1));
    if (c.order() < z.order()) return c;
  }
  return std::nullopt;
}

bool is_prime_integer(const Integer& n) {
  std::uint32_t p;
  std::size_t e;
  return prime_power(n, p, e) && e == 1;
}

}  // namespace

PermGroup minimal_normal_between(const PermGroup& g, const PermGroup& x, const PermGroup& y,
                                 Rng& rng) {
  PermGroup z = x;
  const Integer yo = y.order();
  if (z.order() <= yo) throw PreconditionError("no subgroup strictly between equal terms");
  for (;;) {
    int fails = 0;
    while (fails < 6) {
      if (is_prime_integer(z.order() / yo)) return z;
      std::optional<Permutation> e;
      for (int t = 0; t < 32 && !e; ++t) {
        Permutation c = z.random_element(rng);
        if (!y.contains(c)) e = std::move(c);
      }
      if (!e) {
        ++fails;
        continue;
      }
      PermGroup c = normal_closure(g, y, std::span<const Permutation>(&*e, 1));
      if (c.order() < z.order()) {
        z = std::move(c);
        fails = 0;
      } else {
        ++fails;
      }
    }
    if (is_prime_integer(z.order() / yo)) return z;
    auto smaller = smaller_normal(g, z, y);
    if (!smaller) return z;
    z = std::move(*smaller);
  }
}

ChiefSeries chief_series(const PermGroup& g, std::span<const PermGroup> through, std::uint64_t seed) {
  std::vector<PermGroup> chain;
  if (through.empty()) {
    chain.push_back(g);
    while (!chain.back().is_trivial()) {
      PermGroup d = derived_subgroup(chain.back());
      if (d.order() == chain.back().order()) break;
      chain.push_back(std::move(d));
    }
  } else {
    for (const auto& n : through)
      if (!n.is_normal_in(g)) throw PreconditionError("prescribed subgroup is not normal");
    chain.assign(through.begin(), through.end());
    std::stable_sort(chain.begin(), chain.end(),
                     [](const PermGroup& a, const PermGroup& b) { return a.order() > b.order(); });
    if (chain.front().order() != g.order()) chain.insert(chain.begin(), g);
    for (std::size_t i = 1; i < chain.size(); ++i) {
      if (chain[i].order() == chain[i - 1].order()) {
        if (!chain[i].same_group(chain[i - 1])) throw PreconditionError("prescribed subgroups are not nested");
        chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(i--));
        continue;
      }
      if (!chain[i].is_subgroup_of(chain[i - 1])) throw PreconditionError("prescribed subgroups are not nested");
    }
  }
  if (!chain.back().is_trivial()) chain.push_back(PermGroup::trivial(g.degree()));

  ChiefSeries cs;
  cs.group = g;
  cs.terms.push_back(chain[0]);
  std::uint64_t step = 0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const PermGroup& top = chain[i];
    std::vector<PermGroup> found;
    PermGroup y = chain[i + 1];
    while (y.order() < top.order()) {
      Rng rng(stream_seed(seed, step++));
      y = minimal_normal_between(g, top, y, rng);
      found.push_back(y);
    }
    for (std::size_t k = found.size() - 1; k-- > 0;) cs.terms.push_back(found[k]);
    cs.terms.push_back(chain[i + 1]);
  }
  for (std::size_t i = 0; i + 1 < cs.terms.size(); ++i) cs.factors.emplace_back(g, cs.terms[i], cs.terms[i + 1]);
  return cs;
}

FpMatrix intertwiners(const ModuleAction& a, const ModuleAction& b) {
  if (a.prime() != b.prime() || a.matrices().size() != b.matrices().size())
    throw PreconditionError("intertwiners need modules over the same field and generators");
  const std::uint32_t p = a.prime();
  const std::size_t da = a.dim(), db = b.dim(), gens = a.matrices().size();
  FpMatrix sys(p, std::max<std::size_t>(gens, 1) * da * db, da * db);
  for (std::size_t s = 0; s < gens; ++s) {
    const auto& m = a.matrices()[s];
    const auto& n = b.matrices()[s];
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < db; ++j) {
        const std::size_t row = (s * da + i) * db + j;
        for (std::size_t k = 0; k < da; ++k) sys.at(row, k * db + j) = (sys.at(row, k * db + j) + m.at(i, k)) % p;
        for (std::size_t l = 0; l < db; ++l)
          sys.at(row, i * db + l) = (sys.at(row, i * db + l) + p - n.at(l, j)) % p;
      }
  }
  return sys.nullspace();
}

bool out_equivalent(const FactorTable& a, const FactorTable& b) {
  if (a.size() != b.size() || a.actions().size() != b.actions().size()) return false;
  const std::size_t n = b.size();
  std::vector<std::vector<FactorTable::Index>> binv;
  for (const auto& act : b.actions()) {
    std::vector<FactorTable::Index> v(n);
    for (std::size_t e = 0; e < n; ++e) v[act[e]] = static_cast<FactorTable::Index>(e);
    binv.push_back(std::move(v));
  }
  std::vector<FactorTable::Index> phiinv(n), aut(n, 0);
  return for_each_isomorphism(a, b, [&](const std::vector<FactorTable::Index>& phi) {
    for (std::size_t e = 0; e < n; ++e) phiinv[phi[e]] = static_cast<FactorTable::Index>(e);
    for (std::size_t s = 0; s < a.actions().size(); ++s) {
      for (auto x : b.generators()) aut[x] = binv[s][phi[a.actions()[s][phiinv[x]]]];
      if (!is_inner(b, aut)) return false;
    }
    return true;
  });
}

bool g_equivalent(const ChiefFactor& a, const ChiefFactor& b) {
  if (a.ambient().degree() != b.ambient().degree()) throw PreconditionError("factors of different groups");
  if (a.abelian() != b.abelian() || a.order() != b.order()) return false;
  if (a.abelian()) {
    if (a.prime() != b.prime() || a.dim() != b.dim()) return false;
    return intertwiners(a.module(), b.module()).rows() > 0;
  }
  if (!(a.socle_type() == b.socle_type())) return false;
  if (!a.inner_inducer().same_group(b.inner_inducer())) return false;
  return out_equivalent(a.table(), b.table());
}

bool equivalent_to_trivial_copy(const ChiefFactor& f) {
  if (f.abelian()) return f.module().is_trivial();
  if (f.inner_inducer().order() != f.ambient().order()) return false;
  return out_equivalent(f.table(), FactorTable::with_trivial_action(f.table()));
}

}  // namespace crownforge
