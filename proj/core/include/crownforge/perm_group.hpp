#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "crownforge/integer.hpp"
#include "crownforge/permutation.hpp"
#include "crownforge/stab_chain.hpp"

namespace crownforge {

/// A permutation group given by generators. The stabilizer chain is built on
/// first use (once, thread-safely) and shared by all copies; a PermGroup is
/// immutable afterwards.
class PermGroup {
 public:
  /// Trivial group on one point.
  PermGroup();
  /// Identity generators are dropped; an empty list is the trivial group.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);
  /// Adopts an already completed chain for these generators.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::shared_ptr<const StabChain> chain);
  /// Builds the chain by random sifting until `known_order` is reached, which
  /// certifies it; falls back to the deterministic build otherwise.
  PermGroup(std::size_t degree, std::vector<Permutation> generators, const Integer& known_order);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const;
  const std::vector<Permutation>& generators() const;
  const StabChain& chain() const;
  std::shared_ptr<const StabChain> shared_chain() const;

  Integer order() const;
  bool is_trivial() const;
  /// Throws PreconditionError on degree mismatch.
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool is_normal_in(const PermGroup& other) const;
  bool is_abelian() const;
  bool same_group(const PermGroup& other) const;

  /// Orbits of {0..degree-1}, each sorted, ordered by least point.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  Permutation random_element(Rng& rng) const;
  /// Uniform element for a seed; deterministic.
  Permutation random_element(std::uint64_t seed) const;

  /// All elements in chain order; throws LimitError above `cap`.
  std::vector<Permutation> elements(std::size_t cap = 100000) const;

  /// Optional display name carried into reports.
  const std::string& name() const;
  PermGroup with_name(std::string name) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// Smallest normal subgroup of g containing s. Throws PreconditionError if an
/// element of s lies outside g.
PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> s);
/// Normal closure of n's generators together with extra elements.
PermGroup normal_closure(const PermGroup& g, const PermGroup& n, std::span<const Permutation> extra);
PermGroup derived_subgroup(const PermGroup& g);
/// [a, b] for subgroups normalised by g: normal closure in g of generator commutators.
PermGroup commutator_subgroup(const PermGroup& g, const PermGroup& a, const PermGroup& b);
/// <a, b> on a common domain.
PermGroup join(const PermGroup& a, const PermGroup& b);

/// Orbits of an arbitrary generating list on {0..degree-1}.
std::vector<std::vector<Point>> orbits_of(std::size_t degree, std::span<const Permutation> gens);

/// Conjugacy classes by explicit enumeration; each class is a list of element
/// indices into `elements`. Intended for groups of a few thousand elements.
struct ConjugacyClasses {
  std::vector<Permutation> elements;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;  // element index -> class index
};
ConjugacyClasses conjugacy_classes(const PermGroup& g, std::size_t cap = 100000);

Permutation commutator(const Permutation& a, const Permutation& b);

}  // namespace crownforge
