#include "crownforge/module.hpp"

#include <mutex>
#include <optional>
#include <unordered_map>

#include "crownforge/errors.hpp"
#include "crownforge/limits.hpp"

namespace crownforge {

struct ModuleAction::Cache {
  std::once_flag once;
  std::vector<std::uint64_t> orbit;
  std::unordered_map<std::uint64_t, Point> where;
  std::optional<Homomorphism> action;
};

ModuleAction::ModuleAction(PermGroup group, std::uint32_t p, std::vector<FpMatrix> matrices)
    : group_(std::move(group)), p_(p), matrices_(std::move(matrices)), cache_(std::make_shared<Cache>()) {
  if (!is_prime(p_)) throw PreconditionError("module characteristic must be prime");
  if (p_ > limits().max_prime) throw LimitError("prime exceeds configured maximum");
  if (matrices_.size() != group_.generators().size())
    throw PreconditionError("need one matrix per group generator");
  dim_ = matrices_.empty() ? 0 : matrices_[0].rows();
  for (const auto& m : matrices_) {
    if (m.rows() != dim_ || m.cols() != dim_ || m.prime() != p_)
      throw PreconditionError("module matrices must be square of equal size over F_p");
    if (!m.inverse()) throw PreconditionError("non-invertible module matrix");
  }
  if (dim_ > limits().max_module_dim) throw LimitError("module dimension exceeds configured maximum");
}

ModuleAction ModuleAction::trivial(PermGroup group, std::uint32_t p, std::size_t dim) {
  std::vector<FpMatrix> ms(group.generators().size(), FpMatrix::identity(p, dim));
  ModuleAction a(std::move(group), p, std::move(ms));
  a.dim_ = dim;
  return a;
}

const Homomorphism& ModuleAction::vector_action() const {
  std::call_once(cache_->once, [this] {
    auto& c = *cache_;
    const std::size_t cap = limits().module_points_cap;
    for (std::size_t i = 0; i < dim_; ++i) {
      FpVector e(dim_, 0);
      e[i] = 1;
      const auto code = encode(e, p_);
      if (c.where.emplace(code, static_cast<Point>(c.orbit.size())).second) c.orbit.push_back(code);
    }
    std::vector<std::vector<Point>> img(matrices_.size());
    for (std::size_t k = 0; k < c.orbit.size(); ++k) {
      const FpVector v = decode(c.orbit[k], p_, dim_);
      for (std::size_t s = 0; s < matrices_.size(); ++s) {
        const auto code = encode(times(v, matrices_[s]), p_);
        auto [it, fresh] = c.where.emplace(code, static_cast<Point>(c.orbit.size()));
        if (fresh) {
          c.orbit.push_back(code);
          if (c.orbit.size() > cap) throw LimitError("module vector orbit exceeds cap");
        }
        img[s].push_back(it->second);
      }
    }
    std::vector<Permutation> perms;
    for (auto& v : img) perms.push_back(Permutation::unchecked(std::move(v)));
    c.action.emplace(group_, c.orbit.size(), std::move(perms));
  });
  return *cache_->action;
}

const std::vector<std::uint64_t>& ModuleAction::vector_orbit() const {
  vector_action();
  return cache_->orbit;
}

bool ModuleAction::is_valid() const {
  if (dim_ == 0) return true;
  return vector_action().is_well_defined();
}

bool ModuleAction::is_trivial() const {
  for (const auto& m : matrices_)
    if (!m.is_identity()) return false;
  return true;
}

FpMatrix ModuleAction::matrix_of(const Permutation& g) const {
  if (dim_ == 0) return FpMatrix(p_, 0, 0);
  const auto& f = vector_action();
  const Permutation t = f(g);
  FpMatrix m(p_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    const FpVector row = decode(cache_->orbit[t[static_cast<Point>(i)]], p_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) m.at(i, j) = row[j];
  }
  return m;
}

PermGroup ModuleAction::kernel() const {
  if (dim_ == 0 || is_trivial()) return group_;
  return vector_action().kernel();
}

ModuleAction ModuleAction::restricted_to(const PermGroup& sub) const {
  std::vector<FpMatrix> ms;
  for (const auto& g : sub.generators()) ms.push_back(matrix_of(g));
  ModuleAction a(sub, p_, std::move(ms));
  a.dim_ = dim_;
  return a;
}

}  // namespace crownforge
