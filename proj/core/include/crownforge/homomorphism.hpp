#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "crownforge/perm_group.hpp"

namespace crownforge {

/// Homomorphism from a permutation group into Sym(target_degree), given by
/// images of the source generators.
///
/// Internally the graph {(g, f(g))} is a permutation group on the disjoint
/// union of both domains. A chain of the graph with the source points as base
/// prefix evaluates f and detects ill-defined images (a nontrivial pointwise
/// stabiliser of the source); a chain with the target points first yields the
/// kernel and lifts for preimages.
class Homomorphism {
 public:
  Homomorphism(PermGroup source, std::size_t target_degree, std::vector<Permutation> images);

  const PermGroup& source() const { return source_; }
  std::size_t target_degree() const { return target_degree_; }
  const std::vector<Permutation>& generator_images() const { return images_; }

  /// True iff the generator images extend to a homomorphism.
  bool is_well_defined() const;
  /// Image of g; throws PreconditionError if g is not in the source and
  /// VerificationError if the map is not a homomorphism.
  Permutation operator()(const Permutation& g) const;
  PermGroup image() const;
  PermGroup kernel() const;
  /// Full preimage of a subgroup of the image.
  PermGroup preimage(const PermGroup& sub) const;
  /// Some element mapping to t; throws PreconditionError if t is not in the image.
  Permutation lift(const Permutation& t) const;

 private:
  struct Cache;
  const StabChain& source_first() const;
  const StabChain& target_first() const;
  void require_well_defined() const;
  Permutation graph_element(const Permutation& g, const Permutation& t) const;

  PermGroup source_;
  std::size_t target_degree_;
  std::vector<Permutation> images_;
  std::shared_ptr<Cache> cache_;
};

/// Action of g on the right cosets of h.
struct CosetAction {
  Homomorphism action;
  std::vector<Permutation> representatives;  // canonical, index 0 is h itself
};

/// Throws PreconditionError if h is not a subgroup of g and LimitError if the
/// index exceeds limits().index_cap (or `cap` when given).
CosetAction coset_action(const PermGroup& g, const PermGroup& h, std::size_t cap = 0);

/// Kernel of a homomorphism (free function form).
PermGroup kernel(const Homomorphism& f);

/// Elementwise intersection of normal subgroups of g (kernel of the joint coset action).
PermGroup intersect_normal(const PermGroup& g, std::span<const PermGroup> normals);

}  // namespace crownforge
