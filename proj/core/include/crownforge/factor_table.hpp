#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <unordered_map>
#include <vector>

#include "crownforge/perm_group.hpp"

namespace crownforge {

/// A quotient X/Y of normal subgroups of G held as a multiplication table,
/// together with the permutation of its elements induced by conjugation
/// with each generator of G. Element 0 is the identity.
class FactorTable {
 public:
  using Index = std::uint32_t;

  /// Throws LimitError above limits().table_cap elements.
  FactorTable(const PermGroup& g, const PermGroup& x, const PermGroup& y);
  /// A copy of `base` on which G acts trivially.
  static FactorTable with_trivial_action(const FactorTable& base);

  std::size_t size() const { return n_; }
  Index mul(Index a, Index b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  Index inv(Index a) const { return inv_[a]; }
  Index conj(Index a, Index b) const { return mul(mul(inv(b), a), b); }
  std::uint64_t order_of(Index a) const;
  std::set<std::uint64_t> element_orders() const;

  /// Small generating set of the table group.
  const std::vector<Index>& generators() const { return gens_; }
  /// action(s)[a] = a^(g_s) for the s-th generator of G.
  const std::vector<std::vector<Index>>& actions() const { return actions_; }

  /// Index of the coset xY; x must lie in X.
  Index index_of(const Permutation& x) const;

  /// Elements of the subgroup generated by `s` inside the table.
  std::vector<Index> closure(const std::vector<Index>& s) const;
  /// Normal closure of `s` inside the table group itself.
  std::vector<Index> normal_closure(const std::vector<Index>& s) const;
  /// Conjugacy class of each element under the table group.
  std::vector<std::uint32_t> classes(std::vector<Index>* reps) const;

 private:
  FactorTable() = default;

  std::size_t n_ = 0;
  std::vector<Index> mul_, inv_, gens_;
  std::vector<std::vector<Index>> actions_;
  std::shared_ptr<const StabChain> lower_chain_;
  std::vector<Point> ambient_base_;
  struct KeyHash {
    std::size_t operator()(const std::vector<Point>& v) const noexcept;
  };
  std::unordered_map<std::vector<Point>, Index, KeyHash> where_;
};

/// Calls visit(phi) for isomorphisms phi: a -> b (phi[i] = image of element i),
/// one per choice of generator images with the first image taken up to
/// conjugacy in b. Stops when visit returns true; returns whether it did.
bool for_each_isomorphism(const FactorTable& a, const FactorTable& b,
                          const std::function<bool(const std::vector<FactorTable::Index>&)>& visit);

/// Whether the automorphism x -> aut[x] of t is inner.
bool is_inner(const FactorTable& t, const std::vector<FactorTable::Index>& aut);

}  // namespace crownforge
