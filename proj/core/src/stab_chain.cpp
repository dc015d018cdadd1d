#include "crownforge/stab_chain.hpp"

#include <limits>

#include "crownforge/errors.hpp"

namespace crownforge {

StabChain::StabChain(std::size_t degree) : degree_(degree), is_base_(degree, false) {}

StabChain::StabChain(std::size_t degree, std::span<const Permutation> generators,
                     std::span<const Point> base_prefix)
    : StabChain(degree) {
  for (Point b : base_prefix) {
    if (b >= degree) throw PreconditionError("base point out of range");
    if (!is_base_[b]) add_level(b);
  }
  for (const auto& g : generators) add_generator(g);
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const auto& l : levels_) b.push_back(l.base);
  return b;
}

void StabChain::add_level(Point base) {
  Level l;
  l.base = base;
  l.position.assign(degree_, -1);
  l.orbit.push_back(base);
  l.position[base] = 0;
  l.transversal.emplace_back(degree_);
  l.inverse_transversal.emplace_back(degree_);
  l.parent.push_back(-1);
  l.label.push_back(0);
  l.checked.emplace_back();
  levels_.push_back(std::move(l));
  is_base_[base] = true;
}

void StabChain::extend_orbit(std::size_t li) {
  Level& l = levels_[li];
  for (std::size_t k = 0; k < l.orbit.size(); ++k) {
    const Point beta = l.orbit[k];
    for (std::uint32_t gi : l.generators) {
      const Permutation& s = strong_[gi];
      const Point img = s[beta];
      if (l.position[img] >= 0) continue;
      l.position[img] = static_cast<std::int32_t>(l.orbit.size());
      l.orbit.push_back(img);
      Permutation u = l.transversal[k] * s;
      l.inverse_transversal.push_back(u.inverse());
      l.transversal.push_back(std::move(u));
      l.parent.push_back(static_cast<std::int32_t>(k));
      l.label.push_back(gi);
      l.checked.emplace_back();
    }
  }
}

Point StabChain::choose_base_point(const Permutation& h) const {
  for (Point x = 0; x < degree_; ++x)
    if (h[x] != x && !is_base_[x]) return x;
  throw VerificationError("residue fixes every non-base point");
}

void StabChain::insert_strong(const Permutation& h, std::size_t upto) {
  if (upto == levels_.size()) add_level(choose_base_point(h));
  const auto idx = static_cast<std::uint32_t>(strong_.size());
  strong_.push_back(h);
  for (std::size_t l = 0; l <= upto; ++l) {
    levels_[l].generators.push_back(idx);
    extend_orbit(l);
  }
}

StabChain::SiftResult StabChain::sift(Permutation g, std::size_t from, std::size_t to) const {
  const std::size_t end = std::min(to, levels_.size());
  for (std::size_t l = from; l < end; ++l) {
    const Level& lv = levels_[l];
    const auto pos = lv.position[g[lv.base]];
    if (pos < 0) return {std::move(g), l};
    g *= lv.inverse_transversal[static_cast<std::size_t>(pos)];
  }
  return {std::move(g), end};
}

bool StabChain::add_generator(const Permutation& g) {
  if (g.degree() != degree_) throw PreconditionError("generator degree mismatch");
  auto [h, j] = sift(g);
  if (h.is_identity()) return false;
  insert_strong(h, j);
  complete(j);
  return true;
}

void StabChain::complete(std::size_t from) {
  auto i = static_cast<std::ptrdiff_t>(from);
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    bool restarted = false;
    for (std::size_t k = 0; k < levels_[li].orbit.size() && !restarted; ++k) {
      for (std::size_t jj = 0; jj < levels_[li].generators.size(); ++jj) {
        auto& row = levels_[li].checked[k];
        if (row.size() < levels_[li].generators.size())
          row.resize(levels_[li].generators.size(), false);
        if (row[jj]) continue;
        row[jj] = true;
        const Level& lv = levels_[li];
        const Permutation& s = strong_[lv.generators[jj]];
        const auto pos = static_cast<std::size_t>(lv.position[s[lv.orbit[k]]]);
        Permutation schreier = lv.transversal[k] * s;
        schreier *= lv.inverse_transversal[pos];
        auto [h, j] = sift(std::move(schreier), li + 1);
        if (!h.is_identity()) {
          insert_strong(h, j);
          i = static_cast<std::ptrdiff_t>(j);
          restarted = true;
          break;
        }
      }
    }
    if (!restarted) --i;
  }
}

StabChain StabChain::randomized(std::size_t degree, std::span<const Permutation> generators,
                                const std::optional<Integer>& target, Rng& rng,
                                std::size_t patience) {
  StabChain c(degree);
  std::vector<Permutation> slots;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw PreconditionError("generator degree mismatch");
    if (g.is_identity()) continue;
    slots.push_back(g);
    auto [h, j] = c.sift(g);
    if (!h.is_identity()) c.insert_strong(h, j);
  }
  if (slots.empty()) return c;
  const std::size_t base_count = slots.size();
  while (slots.size() < 10) slots.push_back(slots[slots.size() % base_count]);
  Permutation acc(degree);
  auto step = [&]() -> const Permutation& {
    const auto a = static_cast<std::size_t>(rng.below(slots.size()));
    auto b = static_cast<std::size_t>(rng.below(slots.size() - 1));
    if (b >= a) ++b;
    if (rng.below(2))
      slots[a] *= slots[b];
    else
      slots[a] = slots[b] * slots[a];
    acc *= slots[a];
    return acc;
  };
  for (int k = 0; k < 30; ++k) step();
  std::size_t fails = 0;
  while (fails < patience) {
    if (target && c.order() == *target) break;
    auto [h, j] = c.sift(step());
    if (h.is_identity()) {
      ++fails;
    } else {
      c.insert_strong(h, j);
      fails = 0;
    }
  }
  return c;
}

Integer StabChain::order() const {
  Integer o = 1;
  for (const auto& l : levels_) o *= l.orbit.size();
  return o;
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw PreconditionError("degree mismatch in membership test");
  auto r = sift(g);
  return r.level == levels_.size() && r.residue.is_identity();
}

std::vector<Permutation> StabChain::stabilizer_generators(std::size_t level) const {
  std::vector<Permutation> out;
  if (level >= levels_.size()) return out;
  for (auto gi : levels_[level].generators) out.push_back(strong_[gi]);
  return out;
}

Permutation StabChain::random_element(Rng& rng) const {
  Permutation g(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const auto& lv = levels_[l];
    g *= lv.transversal[static_cast<std::size_t>(rng.below(lv.orbit.size()))];
  }
  return g;
}

Permutation StabChain::element_at(std::span<const std::size_t> coords) const {
  Permutation g(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) g *= levels_[l].transversal[coords[l]];
  return g;
}

std::uint64_t StabChain::rank(const Permutation& g) const {
  if (order() > std::numeric_limits<std::uint64_t>::max())
    throw LimitError("group too large for element ranks");
  Permutation h = g;
  std::uint64_t r = 0, radix = 1;
  for (const auto& lv : levels_) {
    const auto pos = lv.position[h[lv.base]];
    if (pos < 0) throw PreconditionError("rank: element not in group");
    r += static_cast<std::uint64_t>(pos) * radix;
    radix *= lv.orbit.size();
    h *= lv.inverse_transversal[static_cast<std::size_t>(pos)];
  }
  if (!h.is_identity()) throw PreconditionError("rank: element not in group");
  return r;
}

Permutation StabChain::unrank(std::uint64_t r) const {
  std::vector<std::size_t> coords(levels_.size());
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    coords[l] = static_cast<std::size_t>(r % levels_[l].orbit.size());
    r /= levels_[l].orbit.size();
  }
  return element_at(coords);
}

Permutation StabChain::canonical_coset_rep(const Permutation& g) const {
  Permutation c = g;
  for (const auto& lv : levels_) {
    std::size_t best = 0;
    Point best_img = c[lv.orbit[0]];
    for (std::size_t k = 1; k < lv.orbit.size(); ++k) {
      const Point img = c[lv.orbit[k]];
      if (img < best_img) {
        best_img = img;
        best = k;
      }
    }
    if (best != 0) c = lv.transversal[best] * c;
  }
  return c;
}

std::vector<Point> StabChain::coset_key(const Permutation& g) const {
  const Permutation c = canonical_coset_rep(g);
  return {c.images().begin(), c.images().end()};
}

}  // namespace crownforge
