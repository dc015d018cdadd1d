#pragma once

// Enumeration oracles. They work on explicit element sets and share no code
// with the stabilizer-chain engine beyond the Permutation type.

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "crownforge/cohomology.hpp"
#include "crownforge/permutation.hpp"

namespace oracle {

using crownforge::Permutation;
using ElementSet = std::unordered_set<Permutation, crownforge::PermutationHash>;

struct Subgroup {
  std::vector<Permutation> elements;  // sorted
  ElementSet set;
  std::size_t size() const { return elements.size(); }
  bool contains(const Permutation& p) const { return set.count(p) > 0; }
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
  bool subset_of(const Subgroup& o) const;
};

Subgroup make_subgroup(ElementSet s);
/// <gens> by breadth-first multiplication; `degree` fixes the identity.
/// Stops early (returning a partial set) once more than `cap` elements appear.
Subgroup closure(std::size_t degree, const std::vector<Permutation>& gens,
                 std::size_t cap = static_cast<std::size_t>(-1));
/// A few elements generating g, picked greedily.
std::vector<Permutation> small_generators(const Subgroup& g, std::size_t degree);
Subgroup normal_closure(const Subgroup& g, const std::vector<Permutation>& s);
/// Generated by all commutators [x, y], x, y in G.
Subgroup derived(const Subgroup& g, std::size_t degree);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b, std::size_t degree);
bool is_normal(const Subgroup& g, const Subgroup& n, std::size_t degree);

/// Right cosets N x: coset index of every element of G.
struct Cosets {
  std::vector<std::size_t> index_of;  // parallel to G.elements
  std::size_t count = 0;
};
Cosets right_cosets(const Subgroup& g, const Subgroup& n);

/// Order of the group given by a presentation, by Todd-Coxeter coset
/// enumeration over the trivial subgroup; 0 if more than `max_cosets` arise.
std::size_t todd_coxeter(std::size_t generators, const std::vector<crownforge::Word>& relators,
                         std::size_t max_cosets = 200000);

/// Complements of the translation subgroup in M x| G, counted as distinct
/// subgroups of order |G| meeting M trivially.
std::size_t brute_complement_count(const crownforge::ModuleAction& act);

/// Normal subgroups of G, as closures of unions of conjugacy classes.
std::vector<Subgroup> normal_subgroups(const Subgroup& g, std::size_t degree);

/// A chief factor X/Y of G as explicit cosets.
struct Factor {
  Subgroup x, y;
};
/// Whether X1/Y1 and X2/Y2 are isomorphic as groups with G acting by
/// conjugation; G is given by generators.
bool g_isomorphic(const Factor& a, const Factor& b, const std::vector<Permutation>& g_gens,
                  std::size_t degree);
/// G-equivalence through the maximal-subgroup characterisation: G-isomorphic,
/// or some maximal M makes both factors minimal normal subgroups of G/core(M).
/// Complements M are searched as lifts of a generating pair of G/N.
bool maximal_subgroup_equivalent(const Subgroup& g, const std::vector<Permutation>& g_gens,
                                 std::size_t degree, const Factor& a, const Factor& b);

}  // namespace oracle
