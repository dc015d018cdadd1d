#include "oracles/brute.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "crownforge/constructions.hpp"

namespace oracle {

bool Subgroup::subset_of(const Subgroup& o) const {
  return std::all_of(elements.begin(), elements.end(), [&](const Permutation& p) { return o.contains(p); });
}

Subgroup make_subgroup(ElementSet s) {
  Subgroup g;
  g.elements.assign(s.begin(), s.end());
  std::sort(g.elements.begin(), g.elements.end());
  g.set = std::move(s);
  return g;
}

Subgroup closure(std::size_t degree, const std::vector<Permutation>& gens, std::size_t cap) {
  ElementSet seen;
  std::vector<Permutation> queue{Permutation::identity(degree)};
  seen.insert(queue.front());
  for (std::size_t i = 0; i < queue.size() && seen.size() <= cap; ++i)
    for (const auto& s : gens) {
      Permutation x = queue[i] * s;
      if (seen.insert(x).second) queue.push_back(std::move(x));
    }
  return make_subgroup(std::move(seen));
}

std::vector<Permutation> small_generators(const Subgroup& g, std::size_t degree) {
  std::vector<Permutation> gens;
  Subgroup h = closure(degree, gens);
  for (const auto& x : g.elements) {
    if (h.size() == g.size()) break;
    if (h.contains(x)) continue;
    gens.push_back(x);
    h = closure(degree, gens);
  }
  return gens;
}

Subgroup normal_closure(const Subgroup& g, const std::vector<Permutation>& s) {
  const std::size_t degree = g.elements.front().degree();
  std::vector<Permutation> gens = s;
  const auto ggens = small_generators(g, degree);
  while (true) {
    Subgroup h = closure(degree, gens);
    bool grew = false;
    const std::size_t count = gens.size();
    for (std::size_t i = 0; i < count; ++i)
      for (const auto& x : ggens) {
        Permutation c = gens[i].conjugate_by(x);
        if (!h.contains(c)) {
          gens.push_back(c);
          h = closure(degree, gens);
          grew = true;
        }
      }
    if (!grew) return h;
  }
}

Subgroup derived(const Subgroup& g, std::size_t degree) {
  const auto gens = small_generators(g, degree);
  if (g.size() <= 1500) {
    ElementSet comms;
    for (const auto& x : g.elements)
      for (const auto& y : g.elements) comms.insert(x.inverse() * y.inverse() * x * y);
    return closure(degree, std::vector<Permutation>(comms.begin(), comms.end()));
  }
  // [x, s] for x in G and generators s lie in G', and their normal closure
  // contains the normal closure of generator commutators, which is G'.
  std::vector<Permutation> s;
  for (const auto& x : g.elements)
    for (const auto& y : gens) s.push_back(x.inverse() * y.inverse() * x * y);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const Subgroup c = closure(degree, s);
  return normal_closure(g, small_generators(c, degree));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  ElementSet s;
  for (const auto& x : a.elements)
    if (b.contains(x)) s.insert(x);
  return make_subgroup(std::move(s));
}

Subgroup join(const Subgroup& a, const Subgroup& b, std::size_t degree) {
  auto gens = small_generators(a, degree);
  for (const auto& x : small_generators(b, degree)) gens.push_back(x);
  return closure(degree, gens);
}

bool is_normal(const Subgroup& g, const Subgroup& n, std::size_t degree) {
  const auto ng = small_generators(n, degree);
  for (const auto& x : small_generators(g, degree))
    for (const auto& t : ng)
      if (!n.contains(t.conjugate_by(x))) return false;
  return true;
}

Cosets right_cosets(const Subgroup& g, const Subgroup& n) {
  std::unordered_map<Permutation, std::size_t, crownforge::PermutationHash> pos;
  for (std::size_t i = 0; i < g.elements.size(); ++i) pos.emplace(g.elements[i], i);
  Cosets c;
  c.index_of.assign(g.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (c.index_of[i] != static_cast<std::size_t>(-1)) continue;
    for (const auto& y : n.elements) c.index_of[pos.at(y * g.elements[i])] = c.count;
    ++c.count;
  }
  return c;
}

namespace {

// Coset table with coincidence handling (HLT strategy).
class CosetTable {
 public:
  CosetTable(std::size_t gens, std::size_t cap) : cols_(2 * gens), cap_(cap) { add(); }

  bool overflow() const { return overflow_; }
  std::size_t size() const { return rows_.size(); }
  bool alive(std::size_t c) const { return parent_[c] == c; }
  std::size_t live() const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < size(); ++c) n += alive(c);
    return n;
  }

  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::size_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && rows_[f][w[i]] != kNone) f = rows_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && rows_[b][w[j] ^ 1] != kNone) b = rows_[b][w[j--] ^ 1];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        rows_[f][w[i]] = b;
        rows_[b][w[i] ^ 1] = f;
        return;
      }
      define(f, w[i]);
      if (overflow_) return;
    }
  }

  void define(std::size_t c, std::size_t x) {
    if (size() >= cap_) {
      overflow_ = true;
      return;
    }
    const std::size_t n = add();
    rows_[c][x] = n;
    rows_[n][x ^ 1] = c;
  }

  std::size_t entry(std::size_t c, std::size_t x) const { return rows_[c][x]; }
  std::size_t cols() const { return cols_; }
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

 private:
  std::size_t add() {
    rows_.emplace_back(cols_, kNone);
    parent_.push_back(parent_.size());
    return rows_.size() - 1;
  }

  std::size_t rep(std::size_t k) {
    std::size_t l = k;
    while (parent_[l] != l) l = parent_[l];
    while (parent_[k] != l) {
      const std::size_t next = parent_[k];
      parent_[k] = l;
      k = next;
    }
    return l;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
    const std::size_t a = rep(k), b = rep(l);
    if (a == b) return;
    const std::size_t lo = std::min(a, b), hi = std::max(a, b);
    parent_[hi] = lo;
    queue.push_back(hi);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t g = queue[q];
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::size_t d = rows_[g][x];
        if (d == kNone) continue;
        rows_[d][x ^ 1] = kNone;
        const std::size_t mu = rep(g), nu = rep(d);
        if (rows_[mu][x] != kNone) {
          merge(nu, rows_[mu][x], queue);
        } else if (rows_[nu][x ^ 1] != kNone) {
          merge(mu, rows_[nu][x ^ 1], queue);
        } else {
          rows_[mu][x] = nu;
          rows_[nu][x ^ 1] = mu;
        }
      }
    }
  }

  std::size_t cols_, cap_;
  bool overflow_ = false;
  std::vector<std::vector<std::size_t>> rows_;
  std::vector<std::size_t> parent_;
};

}  // namespace

std::size_t todd_coxeter(std::size_t generators, const std::vector<crownforge::Word>& relators,
                         std::size_t max_cosets) {
  std::vector<std::vector<std::size_t>> rels;
  for (const auto& r : relators) {
    std::vector<std::size_t> w;
    for (auto l : r) w.push_back(l > 0 ? 2 * static_cast<std::size_t>(l - 1) : 2 * static_cast<std::size_t>(-l - 1) + 1);
    rels.push_back(std::move(w));
  }
  CosetTable t(generators, max_cosets);
  for (std::size_t c = 0; c < t.size(); ++c) {
    for (const auto& r : rels) {
      if (!t.alive(c)) break;
      t.scan_and_fill(c, r);
      if (t.overflow()) return 0;
    }
    if (!t.alive(c)) continue;
    for (std::size_t x = 0; x < t.cols(); ++x)
      if (t.entry(c, x) == CosetTable::kNone) {
        t.define(c, x);
        if (t.overflow()) return 0;
      }
  }
  return t.live();
}

std::size_t brute_complement_count(const crownforge::ModuleAction& act) {
  const auto sp = crownforge::module_semidirect(act);
  const std::size_t degree = sp.degree;
  const std::size_t target = static_cast<std::size_t>(act.group().order());
  const Subgroup m = closure(degree, sp.module.generators());
  const std::size_t k = sp.lifts.size();
  std::set<std::vector<Permutation>> found;
  std::vector<std::size_t> digits(k, 0);
  std::vector<Permutation> gens(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) gens[i] = sp.lifts[i] * m.elements[digits[i]];
    Subgroup c = closure(degree, gens, target);
    if (c.size() == target && intersection(c, m).size() == 1) found.insert(std::move(c.elements));
    std::size_t i = 0;
    while (i < k && ++digits[i] == m.size()) digits[i++] = 0;
    if (i == k) break;
  }
  return found.size();
}

std::vector<Subgroup> normal_subgroups(const Subgroup& g, std::size_t degree) {
  std::vector<Subgroup> result;
  auto add = [&](Subgroup s) {
    for (const auto& r : result)
      if (r == s) return false;
    result.push_back(std::move(s));
    return true;
  };
  add(closure(degree, {}));
  // One normal closure per conjugacy class, then joins until stable.
  ElementSet covered;
  const auto ggens = small_generators(g, degree);
  for (const auto& x : g.elements) {
    if (covered.count(x)) continue;
    std::vector<Permutation> cls{x};
    covered.insert(x);
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (const auto& s : ggens) {
        Permutation c = cls[i].conjugate_by(s);
        if (covered.insert(c).second) cls.push_back(std::move(c));
      }
    add(normal_closure(g, {x}));
  }
  for (std::size_t i = 0; i < result.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!result[i].subset_of(result[j]) && !result[j].subset_of(result[i]))
        add(join(result[i], result[j], degree));
  std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) { return a.size() < b.size(); });
  return result;
}

namespace {

// X/Y with explicit coset arithmetic.
struct QuotientTable {
  const Factor* f = nullptr;
  Cosets cosets;
  std::vector<Permutation> reps;  // one per coset
  std::unordered_map<Permutation, std::size_t, crownforge::PermutationHash> pos;

  explicit QuotientTable(const Factor& factor) : f(&factor), cosets(right_cosets(factor.x, factor.y)) {
    reps.resize(cosets.count);
    std::vector<bool> seen(cosets.count, false);
    for (std::size_t i = 0; i < factor.x.size(); ++i) {
      pos.emplace(factor.x.elements[i], i);
      const std::size_t c = cosets.index_of[i];
      if (!seen[c]) {
        seen[c] = true;
        reps[c] = factor.x.elements[i];
      }
    }
  }
  std::size_t size() const { return cosets.count; }
  std::size_t of(const Permutation& x) const { return cosets.index_of[pos.at(x)]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return of(reps[a] * reps[b]); }
  std::size_t conj(std::size_t a, const Permutation& g) const { return of(reps[a].conjugate_by(g)); }
};

// Extends generator images to a map on cosets; empty if not a well-defined
// bijective homomorphism.
std::vector<std::size_t> extend(const QuotientTable& a, const QuotientTable& b, const std::vector<std::size_t>& gens,
                                const std::vector<std::size_t>& images) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> phi(a.size(), none);
  std::vector<bool> hit(b.size(), false);
  const std::size_t one_a = a.of(a.f->y.elements.front()), one_b = b.of(b.f->y.elements.front());
  phi[one_a] = one_b;
  hit[one_b] = true;
  std::vector<std::size_t> queue{one_a};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::size_t c = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::size_t n = a.mul(c, gens[i]);
      const std::size_t v = b.mul(phi[c], images[i]);
      if (phi[n] == none) {
        if (hit[v]) return {};
        phi[n] = v;
        hit[v] = true;
        queue.push_back(n);
      } else if (phi[n] != v) {
        return {};
      }
    }
  }
  return phi;
}

}  // namespace

bool g_isomorphic(const Factor& a, const Factor& b, const std::vector<Permutation>& g_gens, std::size_t) {
  if (a.x.size() / a.y.size() != b.x.size() / b.y.size()) return false;
  const QuotientTable qa(a), qb(b);
  // Generators of X/Y: cosets picked greedily until their closure is everything.
  std::vector<std::size_t> gens;
  std::vector<bool> reached(qa.size(), false);
  std::size_t reached_count = 0;
  auto regrow = [&] {
    std::fill(reached.begin(), reached.end(), false);
    std::vector<std::size_t> queue{qa.of(a.y.elements.front())};
    reached[queue[0]] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (auto s : gens) {
        const std::size_t n = qa.mul(queue[i], s);
        if (!reached[n]) {
          reached[n] = true;
          queue.push_back(n);
        }
      }
    reached_count = queue.size();
  };
  regrow();
  for (std::size_t c = 0; c < qa.size() && reached_count < qa.size(); ++c)
    if (!reached[c]) {
      gens.push_back(c);
      regrow();
    }
  std::vector<std::size_t> images(gens.size(), 0);
  while (true) {
    const auto phi = extend(qa, qb, gens, images);
    if (!phi.empty()) {
      bool equivariant = true;
      for (const auto& g : g_gens) {
        for (std::size_t c = 0; c < qa.size() && equivariant; ++c)
          equivariant = phi[qa.conj(c, g)] == qb.conj(phi[c], g);
        if (!equivariant) break;
      }
      if (equivariant) return true;
    }
    std::size_t i = 0;
    while (i < images.size() && ++images[i] == qb.size()) images[i++] = 0;
    if (i == images.size()) return false;
  }
}

namespace {

// Whether N/K is a minimal normal subgroup of G/K.
bool minimal_over(const Subgroup& n, const Subgroup& k, const std::vector<Subgroup>& normals) {
  if (n.size() == k.size() || !k.subset_of(n)) return false;
  for (const auto& l : normals)
    if (l.size() > k.size() && l.size() < n.size() && k.subset_of(l) && l.subset_of(n)) return false;
  return true;
}

bool is_maximal(const Subgroup& g, const Subgroup& m, std::size_t degree) {
  const auto mg = small_generators(m, degree);
  ElementSet covered(m.set);
  for (const auto& x : g.elements) {
    if (covered.count(x)) continue;
    for (const auto& y : m.elements) covered.insert(y * x);
    auto gens = mg;
    gens.push_back(x);
    if (closure(degree, gens).size() != g.size()) return false;
  }
  return true;
}

}  // namespace

bool maximal_subgroup_equivalent(const Subgroup& g, const std::vector<Permutation>& g_gens, std::size_t degree,
                                 const Factor& a, const Factor& b) {
  if (g_isomorphic(a, b, g_gens, degree)) return true;
  const auto normals = normal_subgroups(g, degree);
  for (const auto& k : normals) {
    std::vector<const Subgroup*> over_a, over_b;
    for (const auto& n : normals) {
      if (!minimal_over(n, k, normals)) continue;
      if (g_isomorphic(Factor{n, k}, a, g_gens, degree)) over_a.push_back(&n);
      if (g_isomorphic(Factor{n, k}, b, g_gens, degree)) over_b.push_back(&n);
    }
    for (const Subgroup* n1 : over_a)
      for (const Subgroup* n2 : over_b) {
        if (n1 == n2 || intersection(*n1, *n2).size() != k.size()) continue;
        // M/K complements N1/K; lift a generating pair of G/N1 by elements of N1.
        const std::size_t target = g.size() / (n1->size() / k.size());
        std::vector<Permutation> tops;
        {
          const Cosets c = right_cosets(g, *n1);
          std::vector<Permutation> reps(c.count);
          std::vector<bool> seen(c.count, false);
          for (std::size_t i = 0; i < g.size(); ++i)
            if (!seen[c.index_of[i]]) {
              seen[c.index_of[i]] = true;
              reps[c.index_of[i]] = g.elements[i];
            }
          // A generating pair of G modulo N1 keeps the lift search at |N1/K|^2;
          // greedy generators are the fallback.
          const auto ngens = small_generators(*n1, degree);
          std::mt19937_64 rng(1);
          for (int attempt = 0; attempt < 500 && tops.empty(); ++attempt) {
            const auto& x = reps[rng() % reps.size()];
            const auto& y = reps[rng() % reps.size()];
            auto gens = ngens;
            gens.push_back(x);
            gens.push_back(y);
            if (closure(degree, gens).size() == g.size()) tops = {x, y};
          }
          auto gens = ngens;
          for (const auto& x : reps) {
            if (!tops.empty() || closure(degree, gens).size() == g.size()) break;
            if (closure(degree, gens).contains(x)) continue;
            gens.push_back(x);
          }
          if (tops.empty()) tops.assign(gens.begin() + static_cast<std::ptrdiff_t>(ngens.size()), gens.end());
        }
        const auto kgens = small_generators(k, degree);
        std::vector<Permutation> n_reps;
        {
          const Cosets c = right_cosets(*n1, k);
          std::vector<bool> seen(c.count, false);
          for (std::size_t i = 0; i < n1->size(); ++i)
            if (!seen[c.index_of[i]]) {
              seen[c.index_of[i]] = true;
              n_reps.push_back(n1->elements[i]);
            }
        }
        std::vector<std::size_t> digits(tops.size(), 0);
        while (true) {
          auto gens = kgens;
          for (std::size_t i = 0; i < tops.size(); ++i) gens.push_back(tops[i] * n_reps[digits[i]]);
          const Subgroup m = closure(degree, gens, target);
          if (m.size() == target && intersection(m, *n1).size() == k.size()) {
            bool core_is_k = true;
            for (const auto& l : normals)
              if (l.size() > k.size() && l.subset_of(m)) core_is_k = false;
            if (core_is_k && is_maximal(g, m, degree)) return true;
          }
          std::size_t i = 0;
          while (i < digits.size() && ++digits[i] == n_reps.size()) digits[i++] = 0;
          if (i == digits.size()) break;
        }
      }
  }
  return false;
}

}  // namespace oracle
