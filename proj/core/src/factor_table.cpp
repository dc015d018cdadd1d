#include "crownforge/factor_table.hpp"

#include <array>

#include "crownforge/errors.hpp"
#include "crownforge/limits.hpp"
#include "crownforge/random.hpp"

namespace crownforge {

std::size_t FactorTable::KeyHash::operator()(const std::vector<Point>& v) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : v) h = (h ^ x) * 1099511628211ULL;
  return h;
}

FactorTable::FactorTable(const PermGroup& g, const PermGroup& x, const PermGroup& y) {
  const Integer size = x.order() / y.order();
  if (size > limits().table_cap)
    throw LimitError("factor of order " + to_string(size) + " exceeds table cap");
  n_ = static_cast<std::size_t>(size);
  lower_chain_ = y.shared_chain();
  ambient_base_ = g.chain().base();

  std::vector<Permutation> reps{lower_chain_->canonical_coset_rep(Permutation(g.degree()))};
  std::vector<Index> parent{0}, label{0};
  auto key_of = [&](const Permutation& c) {
    std::vector<Point> k(ambient_base_.size());
    for (std::size_t i = 0; i < k.size(); ++i) k[i] = c[ambient_base_[i]];
    return k;
  };
  where_.emplace(key_of(reps[0]), 0);
  const auto& xg = x.generators();
  std::vector<std::vector<Index>> right(xg.size());
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t s = 0; s < xg.size(); ++s) {
      Permutation c = lower_chain_->canonical_coset_rep(reps[i] * xg[s]);
      auto [it, fresh] = where_.emplace(key_of(c), static_cast<Index>(reps.size()));
      if (fresh) {
        reps.push_back(std::move(c));
        parent.push_back(static_cast<Index>(i));
        label.push_back(static_cast<Index>(s));
      }
      right[s].push_back(it->second);
    }
  if (reps.size() != n_) throw VerificationError("coset enumeration of factor is inconsistent");

  mul_.assign(n_ * n_, 0);
  for (std::size_t c = 0; c < n_; ++c) mul_[c * n_] = static_cast<Index>(c);
  for (std::size_t e = 1; e < n_; ++e)
    for (std::size_t c = 0; c < n_; ++c)
      mul_[c * n_ + e] = right[label[e]][mul_[c * n_ + parent[e]]];
  inv_.assign(n_, 0);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (mul_[a * n_ + b] == 0) {
        inv_[a] = static_cast<Index>(b);
        break;
      }

  for (const auto& s : g.generators()) {
    std::vector<Index> act(n_);
    for (std::size_t e = 0; e < n_; ++e) act[e] = index_of(reps[e].conjugate_by(s));
    actions_.push_back(std::move(act));
  }

  // generating set: images of X's generators, then try to replace by a pair
  std::vector<Index> cand;
  for (std::size_t s = 0; s < xg.size(); ++s)
    if (right[s][0] != 0) cand.push_back(right[s][0]);
  std::vector<Index> chosen;
  std::size_t reached = 1;
  for (Index c : cand) {
    chosen.push_back(c);
    const std::size_t m = closure(chosen).size();
    if (m == reached) {
      chosen.pop_back();
    } else {
      reached = m;
    }
  }
  gens_ = chosen;
  if (gens_.size() > 2 && n_ > 1) {
    Rng rng(0xfac7ULL);
    for (int t = 0; t < 200; ++t) {
      std::vector<Index> pair{static_cast<Index>(rng.below(n_)), static_cast<Index>(rng.below(n_))};
      if (closure(pair).size() == n_) {
        gens_ = pair;
        break;
      }
    }
  }
}

FactorTable FactorTable::with_trivial_action(const FactorTable& base) {
  FactorTable t = base;
  for (auto& a : t.actions_)
    for (std::size_t e = 0; e < t.n_; ++e) a[e] = static_cast<Index>(e);
  return t;
}

FactorTable::Index FactorTable::index_of(const Permutation& x) const {
  const Permutation c = lower_chain_->canonical_coset_rep(x);
  std::vector<Point> k(ambient_base_.size());
  for (std::size_t i = 0; i < k.size(); ++i) k[i] = c[ambient_base_[i]];
  auto it = where_.find(k);
  if (it == where_.end()) throw PreconditionError("element does not lie in the factor");
  return it->second;
}

std::uint64_t FactorTable::order_of(Index a) const {
  std::uint64_t o = 1;
  for (Index x = a; x != 0; x = mul(x, a)) ++o;
  return o;
}

std::set<std::uint64_t> FactorTable::element_orders() const {
  std::set<std::uint64_t> out;
  for (std::size_t a = 0; a < n_; ++a) out.insert(order_of(static_cast<Index>(a)));
  return out;
}

std::vector<FactorTable::Index> FactorTable::closure(const std::vector<Index>& s) const {
  std::vector<char> seen(n_, 0);
  std::vector<Index> out{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Index g : s) {
      const Index y = mul(out[i], g);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  return out;
}

std::vector<FactorTable::Index> FactorTable::normal_closure(const std::vector<Index>& s) const {
  std::vector<Index> gens = s;
  std::vector<Index> h = closure(gens);
  std::vector<char> in(n_, 0);
  for (Index e : h) in[e] = 1;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Index t : gens_) {
      const Index c = conj(gens[i], t);
      if (in[c]) continue;
      gens.push_back(c);
      h = closure(gens);
      std::fill(in.begin(), in.end(), 0);
      for (Index e : h) in[e] = 1;
    }
  return h;
}

std::vector<std::uint32_t> FactorTable::classes(std::vector<Index>* reps) const {
  constexpr auto none = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> cls(n_, none);
  std::uint32_t next = 0;
  for (std::size_t a = 0; a < n_; ++a) {
    if (cls[a] != none) continue;
    if (reps) reps->push_back(static_cast<Index>(a));
    std::vector<Index> orbit{static_cast<Index>(a)};
    cls[a] = next;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Index t : gens_) {
        const Index c = conj(orbit[i], t);
        if (cls[c] == none) {
          cls[c] = next;
          orbit.push_back(c);
        }
      }
    ++next;
  }
  return cls;
}

bool is_inner(const FactorTable& t, const std::vector<FactorTable::Index>& aut) {
  for (std::size_t c = 0; c < t.size(); ++c) {
    bool ok = true;
    for (auto g : t.generators())
      if (t.conj(g, static_cast<FactorTable::Index>(c)) != aut[g]) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

namespace {

using Index = FactorTable::Index;

Index pow_in(const FactorTable& t, Index a, int e) {
  Index r = 0;
  for (int i = 0; i < e; ++i) r = t.mul(r, a);
  return r;
}

// Orders of a few short words in (x, y); an isomorphism preserves them.
std::array<std::uint64_t, 4> word_profile(const FactorTable& t, Index x, Index y) {
  const Index xy = t.mul(x, y);
  return {t.order_of(xy), t.order_of(t.mul(x, t.inv(y))), t.order_of(t.mul(pow_in(t, x, 2), y)),
          t.order_of(t.mul(t.mul(t.inv(x), t.inv(y)), xy))};
}

}  // namespace

bool for_each_isomorphism(const FactorTable& a, const FactorTable& b,
                          const std::function<bool(const std::vector<Index>&)>& visit) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  const auto& ag = a.generators();
  if (ag.empty()) {
    std::vector<Index> phi{0};
    return n == 1 && visit(phi);
  }
  // BFS spanning tree of a over its generators
  std::vector<Index> order{0}, parent(n, 0), label(n, 0);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t s = 0; s < ag.size(); ++s) {
      const Index y = a.mul(order[i], ag[s]);
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = order[i];
        label[y] = static_cast<Index>(s);
        order.push_back(y);
      }
    }
  std::vector<std::uint64_t> aord;
  for (Index g : ag) aord.push_back(a.order_of(g));
  std::vector<std::vector<Index>> by_order(n + 1);
  for (std::size_t e = 0; e < n; ++e) by_order[b.order_of(static_cast<Index>(e))].push_back(static_cast<Index>(e));
  std::vector<Index> reps;
  b.classes(&reps);
  std::vector<Index> first;
  for (Index r : reps)
    if (b.order_of(r) == aord[0]) first.push_back(r);
  std::vector<std::array<std::uint64_t, 4>> aprof;
  for (std::size_t s = 1; s < ag.size(); ++s) aprof.push_back(word_profile(a, ag[0], ag[s]));

  std::vector<Index> img(ag.size());
  std::vector<Index> phi(n);
  std::vector<char> hit(n);
  auto try_build = [&]() -> bool {
    phi[0] = 0;
    for (std::size_t i = 1; i < n; ++i) {
      const Index e = order[i];
      phi[e] = b.mul(phi[parent[e]], img[label[e]]);
    }
    std::fill(hit.begin(), hit.end(), 0);
    for (std::size_t e = 0; e < n; ++e) {
      if (hit[phi[e]]) return false;
      hit[phi[e]] = 1;
    }
    for (std::size_t e = 0; e < n; ++e)
      for (std::size_t s = 0; s < ag.size(); ++s)
        if (phi[a.mul(static_cast<Index>(e), ag[s])] != b.mul(phi[e], img[s])) return false;
    return true;
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t s) -> bool {
    if (s == ag.size()) return try_build() && visit(phi);
    const auto& pool = s == 0 ? first : by_order[aord[s]];
    for (Index c : pool) {
      if (s > 0 && word_profile(b, img[0], c) != aprof[s - 1]) continue;
      img[s] = c;
      if (rec(s + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace crownforge
