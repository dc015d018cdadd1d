#include "crownforge/homomorphism.hpp"

#include <mutex>
#include <unordered_map>

#include "crownforge/errors.hpp"
#include "crownforge/limits.hpp"

namespace crownforge {

struct Homomorphism::Cache {
  std::once_flag source_once;
  std::unique_ptr<StabChain> source_chain;
  std::size_t source_levels = 0;
  bool well_defined = false;

  std::once_flag target_once;
  std::unique_ptr<StabChain> target_chain;
  std::size_t target_levels = 0;
  PermGroup image;
};

Homomorphism::Homomorphism(PermGroup source, std::size_t target_degree,
                           std::vector<Permutation> images)
    : source_(std::move(source)),
      target_degree_(target_degree),
      images_(std::move(images)),
      cache_(std::make_shared<Cache>()) {
  if (target_degree_ == 0) throw PreconditionError("target degree must be positive");
  if (images_.size() != source_.generators().size())
    throw PreconditionError("need exactly one image per source generator");
  for (const auto& t : images_)
    if (t.degree() != target_degree_) throw PreconditionError("image degree mismatch");
}

Permutation Homomorphism::graph_element(const Permutation& g, const Permutation& t) const {
  const std::size_t m = source_.degree();
  std::vector<Point> img(m + target_degree_);
  for (Point x = 0; x < m; ++x) img[x] = g[x];
  for (Point y = 0; y < target_degree_; ++y) img[m + y] = static_cast<Point>(m + t[y]);
  return Permutation::unchecked(std::move(img));
}

const StabChain& Homomorphism::source_first() const {
  std::call_once(cache_->source_once, [this] {
    const auto base = source_.chain().base();
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < images_.size(); ++i)
      gens.push_back(graph_element(source_.generators()[i], images_[i]));
    cache_->source_chain =
        std::make_unique<StabChain>(source_.degree() + target_degree_, gens, base);
    cache_->source_levels = base.size();
    cache_->well_defined = cache_->source_chain->order() == source_.order();
  });
  return *cache_->source_chain;
}

bool Homomorphism::is_well_defined() const {
  source_first();
  return cache_->well_defined;
}

void Homomorphism::require_well_defined() const {
  if (!is_well_defined()) throw VerificationError("generator images do not define a homomorphism");
}

Permutation Homomorphism::operator()(const Permutation& g) const {
  if (g.degree() != source_.degree()) throw PreconditionError("element degree mismatch");
  const auto& c = source_first();
  require_well_defined();
  const std::size_t m = source_.degree();
  auto r = c.sift(graph_element(g, Permutation(target_degree_)), 0, cache_->source_levels);
  for (Point x = 0; x < m; ++x)
    if (r.residue[x] != x) throw PreconditionError("element is not in the source group");
  std::vector<Point> img(target_degree_);
  for (Point y = 0; y < target_degree_; ++y)
    img[r.residue[static_cast<Point>(m + y)] - m] = y;
  return Permutation::unchecked(std::move(img));
}

const StabChain& Homomorphism::target_first() const {
  require_well_defined();
  std::call_once(cache_->target_once, [this] {
    cache_->image = PermGroup(target_degree_, images_);
    const std::size_t m = source_.degree();
    std::vector<Point> prefix;
    for (Point b : cache_->image.chain().base()) prefix.push_back(static_cast<Point>(m + b));
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < images_.size(); ++i)
      gens.push_back(graph_element(source_.generators()[i], images_[i]));
    cache_->target_chain = std::make_unique<StabChain>(m + target_degree_, gens, prefix);
    cache_->target_levels = prefix.size();
  });
  return *cache_->target_chain;
}

PermGroup Homomorphism::image() const {
  target_first();
  return cache_->image;
}

PermGroup Homomorphism::kernel() const {
  const auto& c = target_first();
  std::vector<Permutation> gens;
  for (const auto& k : c.stabilizer_generators(cache_->target_levels))
    gens.push_back(k.restricted(source_.degree()));
  return PermGroup(source_.degree(), std::move(gens));
}

Permutation Homomorphism::lift(const Permutation& t) const {
  if (t.degree() != target_degree_) throw PreconditionError("element degree mismatch");
  const auto& c = target_first();
  const std::size_t m = source_.degree();
  auto r = c.sift(graph_element(Permutation(m), t), 0, cache_->target_levels);
  for (Point y = 0; y < target_degree_; ++y)
    if (r.residue[static_cast<Point>(m + y)] != m + y)
      throw PreconditionError("element is not in the image");
  return r.residue.restricted(m).inverse();
}

PermGroup Homomorphism::preimage(const PermGroup& sub) const {
  std::vector<Permutation> gens = kernel().generators();
  for (const auto& t : sub.generators()) gens.push_back(lift(t));
  return PermGroup(source_.degree(), std::move(gens));
}

PermGroup kernel(const Homomorphism& f) { return f.kernel(); }

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<Point>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Point x : v) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

CosetAction coset_action(const PermGroup& g, const PermGroup& h, std::size_t cap) {
  if (!h.is_subgroup_of(g)) throw PreconditionError("coset action: not a subgroup");
  const std::size_t limit = cap ? cap : limits().index_cap;
  const Integer index = g.order() / h.order();
  if (index > limit) throw LimitError("subgroup index " + to_string(index) + " exceeds cap");
  const auto& hc = h.chain();
  const auto& gens = g.generators();
  std::vector<Permutation> reps{hc.canonical_coset_rep(Permutation(g.degree()))};
  std::unordered_map<std::vector<Point>, Point, KeyHash> where;
  const auto gbase = g.chain().base();
  auto key_of = [&](const Permutation& c) {
    std::vector<Point> k;
    k.reserve(gbase.size());
    for (Point b : gbase) k.push_back(c[b]);
    return k;
  };
  where.emplace(key_of(reps[0]), 0);
  std::vector<std::vector<Point>> img(gens.size());
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation c = hc.canonical_coset_rep(reps[i] * gens[s]);
      auto [it, fresh] = where.emplace(key_of(c), static_cast<Point>(reps.size()));
      if (fresh) reps.push_back(std::move(c));
      img[s].push_back(it->second);
    }
  std::vector<Permutation> images;
  for (auto& v : img) images.push_back(Permutation::unchecked(std::move(v)));
  return {Homomorphism(g, reps.size(), std::move(images)), std::move(reps)};
}

PermGroup intersect_normal(const PermGroup& g, std::span<const PermGroup> normals) {
  if (normals.empty()) return g;
  std::vector<CosetAction> acts;
  std::size_t total = 0;
  for (const auto& n : normals) {
    acts.push_back(coset_action(g, n));
    total += acts.back().action.target_degree();
  }
  std::vector<Permutation> images;
  for (std::size_t s = 0; s < g.generators().size(); ++s) {
    std::vector<Point> v;
    std::size_t off = 0;
    for (const auto& a : acts) {
      for (Point x : a.action.generator_images()[s].images()) v.push_back(static_cast<Point>(x + off));
      off += a.action.target_degree();
    }
    images.push_back(Permutation::unchecked(std::move(v)));
  }
  return Homomorphism(g, total, std::move(images)).kernel();
}

}  // namespace crownforge
