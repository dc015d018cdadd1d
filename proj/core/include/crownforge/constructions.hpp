#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "crownforge/fp_matrix.hpp"
#include "crownforge/homomorphism.hpp"
#include "crownforge/module.hpp"

namespace crownforge {

/// G x H on the disjoint union of the domains (G's points first).
PermGroup direct_product(const PermGroup& g, const PermGroup& h);
PermGroup direct_product(std::span<const PermGroup> factors);

/// Imprimitive wreath product H wr K: block j is points [j*m, (j+1)*m) with
/// m = deg H; the copy of H in block 0 and K permuting the blocks generate.
/// Throws PreconditionError if K is not transitive.
PermGroup wreath_product(const PermGroup& h, const PermGroup& k);

/// Ordered list of transitive groups G_1, G_2, ... (stored 0-based).
class GroupSequence {
 public:
  GroupSequence() = default;
  /// Throws PreconditionError naming the first intransitive entry (1-based).
  explicit GroupSequence(std::vector<PermGroup> groups);

  std::size_t size() const { return groups_.size(); }
  const PermGroup& operator[](std::size_t i) const { return groups_[i]; }
  std::size_t degree(std::size_t i) const { return groups_[i].degree(); }
  const std::vector<PermGroup>& groups() const { return groups_; }

 private:
  std::vector<PermGroup> groups_;
};

/// W_m = G_m wr (... wr (G_2 wr G_1)), via W_i = G_i wr W_{i-1}.
/// Throws LimitError when n_1...n_m exceeds limits().max_degree.
PermGroup iterated_wreath(const GroupSequence& seq, std::size_t m);

struct Quotient {
  PermGroup group;
  Homomorphism projection;
};
/// G/N acting on the right cosets of N.
Quotient quotient_group(const PermGroup& g, const PermGroup& n);

/// Throws PreconditionError unless A is the unique minimal normal subgroup of L.
void require_unique_minimal_normal(const PermGroup& l, const PermGroup& a);

/// Crown-based power L_k on k disjoint copies of L's domain, generated by the
/// diagonal copies of L's generators and A's generators in each copy.
/// Verifies that A is the unique minimal normal subgroup of L.
PermGroup crown_based_power(const PermGroup& l, const PermGroup& a, std::size_t k);

/// M x| G on p^dim affine points followed by the acting group's own domain.
struct SemidirectProduct {
  PermGroup group;
  PermGroup module;               // the translation subgroup
  std::vector<Permutation> lifts;  // one per generator of the acting group
  std::uint32_t p = 2;
  std::size_t dim = 0;
  std::size_t module_points = 0;
  std::size_t degree = 0;

  Permutation translation(const FpVector& v) const;
  /// Translation vector of an element of the translation subgroup.
  FpVector vector_of(const Permutation& t) const;
};
/// Throws VerificationError if the matrices violate a relation of G.
SemidirectProduct module_semidirect(const ModuleAction& act);

}  // namespace crownforge
