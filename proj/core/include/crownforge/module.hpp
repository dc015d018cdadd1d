#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "crownforge/fp_matrix.hpp"
#include "crownforge/homomorphism.hpp"

namespace crownforge {

/// A finite F_p G-module given by one invertible matrix per generator of G
/// (row vectors, v -> v M_g, so M_{gh} = M_g M_h).
///
/// Matrices of arbitrary elements are read off a permutation representation
/// of G on the orbit of the standard basis vectors; that representation also
/// decides whether the matrices respect the relations of G.
class ModuleAction {
 public:
  /// Throws PreconditionError for a non-prime p, a count mismatch with the
  /// group's generators, or a non-invertible matrix.
  ModuleAction(PermGroup group, std::uint32_t p, std::vector<FpMatrix> matrices);
  static ModuleAction trivial(PermGroup group, std::uint32_t p, std::size_t dim);

  const PermGroup& group() const { return group_; }
  std::uint32_t prime() const { return p_; }
  std::size_t dim() const { return dim_; }
  const std::vector<FpMatrix>& matrices() const { return matrices_; }

  /// True iff the matrix assignment extends to a representation of G.
  bool is_valid() const;
  /// Every generator matrix is the identity.
  bool is_trivial() const;
  /// Matrix of an arbitrary element; requires is_valid().
  FpMatrix matrix_of(const Permutation& g) const;
  /// C_G(M): elements acting trivially.
  PermGroup kernel() const;
  /// Permutation action of G on the basis-vector orbit, and that orbit (as codes).
  const Homomorphism& vector_action() const;
  const std::vector<std::uint64_t>& vector_orbit() const;

  /// Same module restricted to a subgroup of G.
  ModuleAction restricted_to(const PermGroup& sub) const;

 private:
  struct Cache;
  PermGroup group_;
  std::uint32_t p_;
  std::size_t dim_;
  std::vector<FpMatrix> matrices_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace crownforge
