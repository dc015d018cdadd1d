#include "crownforge/perm_group.hpp"

#include <deque>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "crownforge/errors.hpp"

namespace crownforge {

struct PermGroup::State {
  std::size_t degree = 1;
  std::vector<Permutation> generators;
  std::optional<Integer> known_order;
  mutable std::once_flag once;
  mutable std::shared_ptr<const StabChain> chain;
  std::string name;
};

namespace {

std::vector<Permutation> clean(std::size_t degree, std::vector<Permutation> gens) {
  std::vector<Permutation> out;
  out.reserve(gens.size());
  for (auto& g : gens) {
    if (g.degree() != degree) throw PreconditionError("generator degree does not match group degree");
    if (!g.is_identity()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

PermGroup::PermGroup() : state_(std::make_shared<State>()) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : state_(std::make_shared<State>()) {
  if (degree == 0) throw PreconditionError("group degree must be positive");
  state_->degree = degree;
  state_->generators = clean(degree, std::move(generators));
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::shared_ptr<const StabChain> chain)
    : PermGroup(degree, std::move(generators)) {
  if (!chain || chain->degree() != degree) throw PreconditionError("chain degree mismatch");
  std::call_once(state_->once, [&] { state_->chain = std::move(chain); });
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     const Integer& known_order)
    : PermGroup(degree, std::move(generators)) {
  state_->known_order = known_order;
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

std::size_t PermGroup::degree() const { return state_->degree; }
const std::vector<Permutation>& PermGroup::generators() const { return state_->generators; }

const StabChain& PermGroup::chain() const { return *shared_chain(); }

std::shared_ptr<const StabChain> PermGroup::shared_chain() const {
  std::call_once(state_->once, [this] {
    const auto& s = *state_;
    if (s.known_order) {
      Rng rng(0x5eedULL ^ s.degree);
      auto c = StabChain::randomized(s.degree, s.generators, s.known_order, rng, 4000);
      if (c.order() == *s.known_order) {
        s.chain = std::make_shared<const StabChain>(std::move(c));
        return;
      }
    }
    s.chain = std::make_shared<const StabChain>(s.degree, s.generators);
  });
  return state_->chain;
}

Integer PermGroup::order() const { return chain().order(); }
bool PermGroup::is_trivial() const { return state_->generators.empty(); }

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree()) throw PreconditionError("degree mismatch in membership test");
  if (is_trivial()) return p.is_identity();
  return chain().contains(p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (other.degree() != degree()) return false;
  for (const auto& g : generators())
    if (!other.contains(g)) return false;
  return true;
}

bool PermGroup::is_normal_in(const PermGroup& other) const {
  if (!is_subgroup_of(other)) return false;
  for (const auto& y : other.generators())
    for (const auto& x : generators())
      if (!contains(x.conjugate_by(y))) return false;
  return true;
}

bool PermGroup::is_abelian() const {
  const auto& g = generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g[i] * g[j] != g[j] * g[i]) return false;
  return true;
}

bool PermGroup::same_group(const PermGroup& other) const {
  return degree() == other.degree() && order() == other.order() && is_subgroup_of(other);
}

std::vector<std::vector<Point>> orbits_of(std::size_t degree, std::span<const Permutation> gens) {
  std::vector<int> seen(degree, 0);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < degree; ++x) {
    if (seen[x]) continue;
    std::vector<Point> orb{x};
    seen[x] = 1;
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (const auto& g : gens) {
        const Point y = g[orb[k]];
        if (!seen[y]) {
          seen[y] = 1;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  return orbits_of(degree(), generators());
}

bool PermGroup::is_transitive() const { return orbits().size() == 1; }

Permutation PermGroup::random_element(Rng& rng) const {
  if (is_trivial()) return Permutation(degree());
  return chain().random_element(rng);
}

Permutation PermGroup::random_element(std::uint64_t seed) const {
  Rng rng(seed);
  return random_element(rng);
}

std::vector<Permutation> PermGroup::elements(std::size_t cap) const {
  const Integer n = order();
  if (n > cap) throw LimitError("group of order " + to_string(n) + " exceeds enumeration cap");
  const auto count = static_cast<std::uint64_t>(n);
  std::vector<Permutation> out;
  out.reserve(count);
  const auto& c = chain();
  for (std::uint64_t r = 0; r < count; ++r) out.push_back(c.unrank(r));
  return out;
}

const std::string& PermGroup::name() const { return state_->name; }

PermGroup PermGroup::with_name(std::string name) const {
  PermGroup g(degree(), generators(), shared_chain());
  g.state_->name = std::move(name);
  return g;
}

PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> s) {
  for (const auto& x : s)
    if (!g.contains(x)) throw PreconditionError("normal closure: element outside the group");
  StabChain chain(g.degree());
  std::vector<Permutation> gens;
  for (const auto& x : s)
    if (chain.add_generator(x)) gens.push_back(x);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (const auto& y : g.generators()) {
      Permutation c = gens[i].conjugate_by(y);
      if (chain.add_generator(c)) gens.push_back(std::move(c));
    }
  return PermGroup(g.degree(), std::move(gens), std::make_shared<const StabChain>(std::move(chain)));
}

PermGroup normal_closure(const PermGroup& g, const PermGroup& n, std::span<const Permutation> extra) {
  std::vector<Permutation> s(n.generators().begin(), n.generators().end());
  s.insert(s.end(), extra.begin(), extra.end());
  return normal_closure(g, s);
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

PermGroup derived_subgroup(const PermGroup& g) {
  return commutator_subgroup(g, g, g);
}

PermGroup commutator_subgroup(const PermGroup& g, const PermGroup& a, const PermGroup& b) {
  std::vector<Permutation> s;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) {
      Permutation c = commutator(x, y);
      if (!c.is_identity()) s.push_back(std::move(c));
    }
  return normal_closure(g, s);
}

PermGroup join(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw PreconditionError("join: degree mismatch");
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup(a.degree(), std::move(gens));
}

ConjugacyClasses conjugacy_classes(const PermGroup& g, std::size_t cap) {
  ConjugacyClasses cc;
  cc.elements = g.elements(cap);
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  index.reserve(cc.elements.size() * 2);
  for (std::size_t i = 0; i < cc.elements.size(); ++i) index.emplace(cc.elements[i], i);
  constexpr auto none = static_cast<std::size_t>(-1);
  cc.class_of.assign(cc.elements.size(), none);
  std::vector<std::size_t> order;
  order.reserve(cc.elements.size());
  // identity first, then by element index
  for (std::size_t i = 0; i < cc.elements.size(); ++i)
    if (cc.elements[i].is_identity()) order.push_back(i);
  for (std::size_t i = 0; i < cc.elements.size(); ++i)
    if (!cc.elements[i].is_identity()) order.push_back(i);
  for (std::size_t start : order) {
    if (cc.class_of[start] != none) continue;
    const std::size_t ci = cc.classes.size();
    std::vector<std::size_t> cls{start};
    cc.class_of[start] = ci;
    for (std::size_t k = 0; k < cls.size(); ++k)
      for (const auto& y : g.generators()) {
        const std::size_t j = index.at(cc.elements[cls[k]].conjugate_by(y));
        if (cc.class_of[j] == none) {
          cc.class_of[j] = ci;
          cls.push_back(j);
        }
      }
    cc.classes.push_back(std::move(cls));
  }
  return cc;
}

}  // namespace crownforge
