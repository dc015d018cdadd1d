#include "crownforge/constructions.hpp"

#include <unordered_map>

#include "crownforge/errors.hpp"
#include "crownforge/limits.hpp"

namespace crownforge {

namespace {

void check_degree(std::size_t degree) {
  if (degree > limits().max_degree)
    throw LimitError("degree " + std::to_string(degree) + " exceeds configured maximum " +
                     std::to_string(limits().max_degree));
}

std::string product_name(const PermGroup& a, const PermGroup& b, const char* op) {
  if (a.name().empty() || b.name().empty()) return {};
  return a.name() + op + b.name();
}

}  // namespace

PermGroup direct_product(const PermGroup& g, const PermGroup& h) {
  const std::size_t n = g.degree() + h.degree();
  check_degree(n);
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) gens.push_back(x.extended(n));
  for (const auto& x : h.generators()) gens.push_back(x.shifted(g.degree(), n));
  return PermGroup(n, std::move(gens), g.order() * h.order())
      .with_name(product_name(g, h, " x "));
}

PermGroup direct_product(std::span<const PermGroup> factors) {
  if (factors.empty()) return PermGroup::trivial(1);
  PermGroup out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out = direct_product(out, factors[i]);
  return out;
}

PermGroup wreath_product(const PermGroup& h, const PermGroup& k) {
  if (!k.is_transitive()) throw PreconditionError("wreath product: top group must be transitive");
  const std::size_t m = h.degree(), n = k.degree(), deg = m * n;
  check_degree(deg);
  std::vector<Permutation> gens;
  for (const auto& x : h.generators()) gens.push_back(x.extended(deg));
  for (const auto& y : k.generators()) {
    std::vector<Point> img(deg);
    for (Point j = 0; j < n; ++j)
      for (Point x = 0; x < m; ++x) img[j * m + x] = static_cast<Point>(y[j] * m + x);
    gens.push_back(Permutation::unchecked(std::move(img)));
  }
  Integer order = ipow(h.order(), n) * k.order();
  return PermGroup(deg, std::move(gens), order).with_name(product_name(h, k, " wr "));
}

GroupSequence::GroupSequence(std::vector<PermGroup> groups) : groups_(std::move(groups)) {
  for (std::size_t i = 0; i < groups_.size(); ++i)
    if (!groups_[i].is_transitive())
      throw PreconditionError("sequence entry " + std::to_string(i + 1) + " is not transitive");
}

PermGroup iterated_wreath(const GroupSequence& seq, std::size_t m) {
  if (m < 1 || m > seq.size()) throw PreconditionError("tower height out of range");
  std::size_t deg = 1;
  for (std::size_t i = 0; i < m; ++i) {
    deg *= seq.degree(i);
    check_degree(deg);
  }
  PermGroup w = seq[0];
  for (std::size_t i = 1; i < m; ++i) w = wreath_product(seq[i], w);
  return w;
}

Quotient quotient_group(const PermGroup& g, const PermGroup& n) {
  if (!n.is_normal_in(g)) throw PreconditionError("quotient: subgroup is not normal");
  auto ca = coset_action(g, n);
  PermGroup image(ca.action.target_degree(), ca.action.generator_images(), g.order() / n.order());
  return {std::move(image), std::move(ca.action)};
}

namespace {

// Representatives of the orbits of g acting by conjugation on the elements of
// a normal subgroup s (identity excluded).
std::vector<Permutation> class_reps_in(const PermGroup& g, const PermGroup& s) {
  const auto elems = s.elements(limits().factor_cap);
  std::unordered_map<Permutation, bool, PermutationHash> seen;
  seen.reserve(elems.size() * 2);
  std::vector<Permutation> reps;
  for (const auto& e : elems) {
    if (e.is_identity() || seen.count(e)) continue;
    reps.push_back(e);
    std::vector<Permutation> orbit{e};
    seen.emplace(e, true);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& y : g.generators()) {
        Permutation c = orbit[i].conjugate_by(y);
        if (seen.emplace(c, true).second) orbit.push_back(std::move(c));
      }
  }
  return reps;
}

}  // namespace

void require_unique_minimal_normal(const PermGroup& l, const PermGroup& a) {
  if (a.is_trivial() || !a.is_normal_in(l))
    throw PreconditionError("A must be a nontrivial normal subgroup");
  if (a.order() > limits().factor_cap) throw LimitError("socle too large to verify");
  for (const auto& x : class_reps_in(l, a))
    if (normal_closure(l, std::span<const Permutation>(&x, 1)).order() != a.order())
      throw PreconditionError("A is not a minimal normal subgroup");
  // Another minimal normal subgroup would centralise A.
  std::vector<Permutation> conj;
  const auto aelems = a.elements(limits().factor_cap);
  std::unordered_map<Permutation, Point, PermutationHash> index;
  for (std::size_t i = 0; i < aelems.size(); ++i) index.emplace(aelems[i], static_cast<Point>(i));
  for (const auto& y : l.generators()) {
    std::vector<Point> img(aelems.size());
    for (std::size_t i = 0; i < aelems.size(); ++i) img[i] = index.at(aelems[i].conjugate_by(y));
    conj.push_back(Permutation::unchecked(std::move(img)));
  }
  const PermGroup cent = Homomorphism(l, aelems.size(), std::move(conj)).kernel();
  for (const auto& x : class_reps_in(l, cent)) {
    const PermGroup nc = normal_closure(l, std::span<const Permutation>(&x, 1));
    if (!a.is_subgroup_of(nc))
      throw PreconditionError("A is not the unique minimal normal subgroup");
  }
}

PermGroup crown_based_power(const PermGroup& l, const PermGroup& a, std::size_t k) {
  if (k < 1) throw PreconditionError("crown-based power needs k >= 1");
  require_unique_minimal_normal(l, a);

  const std::size_t m = l.degree(), deg = m * k;
  check_degree(deg);
  std::vector<Permutation> gens;
  for (const auto& x : l.generators()) {
    std::vector<Point> img(deg);
    for (std::size_t c = 0; c < k; ++c)
      for (Point p = 0; p < m; ++p) img[c * m + p] = static_cast<Point>(c * m + x[p]);
    gens.push_back(Permutation::unchecked(std::move(img)));
  }
  for (std::size_t c = 0; c < k; ++c)
    for (const auto& x : a.generators()) gens.push_back(x.shifted(c * m, deg));
  const Integer order = ipow(a.order(), k) * (l.order() / a.order());
  std::string name = l.name().empty() ? std::string() : "(" + l.name() + ")_" + std::to_string(k);
  return PermGroup(deg, std::move(gens), order).with_name(std::move(name));
}

Permutation SemidirectProduct::translation(const FpVector& v) const {
  std::vector<Point> img(degree);
  for (std::size_t c = 0; c < module_points; ++c)
    img[c] = static_cast<Point>(encode(add(decode(c, p, dim), v, p), p));
  for (std::size_t x = module_points; x < degree; ++x) img[x] = static_cast<Point>(x);
  return Permutation::unchecked(std::move(img));
}

FpVector SemidirectProduct::vector_of(const Permutation& t) const { return decode(t[0], p, dim); }

SemidirectProduct module_semidirect(const ModuleAction& act) {
  if (!act.is_valid()) throw VerificationError("module matrices violate a relation of the group");
  const std::uint32_t p = act.prime();
  const std::size_t dim = act.dim();
  Integer points = ipow(Integer(p), dim);
  if (points > limits().module_points_cap) throw LimitError("module too large for affine action");
  SemidirectProduct sp;
  sp.p = p;
  sp.dim = dim;
  sp.module_points = static_cast<std::size_t>(points);
  const std::size_t gdeg = act.group().degree();
  const std::size_t deg = sp.module_points + gdeg;
  check_degree(deg);
  sp.degree = deg;
  std::vector<Permutation> lifts;
  const auto& gens = act.group().generators();
  for (std::size_t s = 0; s < gens.size(); ++s) {
    std::vector<Point> img(deg);
    for (std::size_t c = 0; c < sp.module_points; ++c)
      img[c] = static_cast<Point>(encode(times(decode(c, p, dim), act.matrices()[s]), p));
    for (Point x = 0; x < gdeg; ++x) img[sp.module_points + x] = static_cast<Point>(sp.module_points + gens[s][x]);
    lifts.push_back(Permutation::unchecked(std::move(img)));
  }
  std::vector<Permutation> trans;
  for (std::size_t i = 0; i < dim; ++i) {
    FpVector e(dim, 0);
    e[i] = 1;
    trans.push_back(sp.translation(e));
  }
  sp.module = PermGroup(deg, trans, points);
  std::vector<Permutation> all = trans;
  all.insert(all.end(), lifts.begin(), lifts.end());
  sp.group = PermGroup(deg, std::move(all), points * act.group().order());
  sp.lifts = std::move(lifts);
  return sp;
}

}  // namespace crownforge
