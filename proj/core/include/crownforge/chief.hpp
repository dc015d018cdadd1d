#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crownforge/factor_table.hpp"
#include "crownforge/module.hpp"
#include "crownforge/simple_groups.hpp"

namespace crownforge {

/// Isomorphism type of a nonabelian chief factor S^power.
struct SocleType {
  std::string component;  // table name, or "order N" when not in the table
  Integer component_order;
  std::size_t power = 1;
  std::optional<SimpleGroupInfo> info;

  friend bool operator==(const SocleType& a, const SocleType& b) {
    return a.component == b.component && a.component_order == b.component_order &&
           a.power == b.power;
  }
};

/// A chief factor X/Y of G. Derived data is computed on first use and cached;
/// copies share the cache.
class ChiefFactor {
 public:
  ChiefFactor(PermGroup ambient, PermGroup upper, PermGroup lower);

  const PermGroup& ambient() const;
  const PermGroup& upper() const;
  const PermGroup& lower() const;
  const Integer& order() const;
  bool abelian() const;

  // abelian factors
  std::uint32_t prime() const;
  std::size_t dim() const;
  /// Action of the ambient group on X/Y as row-vector matrices.
  const ModuleAction& module() const;
  FpVector coordinates(const Permutation& x) const;
  /// Some element of X in the coset with these coordinates.
  Permutation representative(const FpVector& v) const;

  // nonabelian factors
  /// Conjugation action of G on a G-invariant generating set of cosets of X/Y.
  const Homomorphism& conj_action() const;
  const FactorTable& table() const;
  const SocleType& socle_type() const;

  /// C_G(X/Y).
  const PermGroup& centralizer() const;
  /// I_G(X/Y) = X C_G(X/Y).
  const PermGroup& inner_inducer() const;

  /// Abelian and without complement; false for nonabelian factors.
  bool frattini() const;
  /// Complements U (Y <= U, UX = G, U meets X in Y), searched from a random
  /// starting point; at most `limit` distinct ones.
  std::vector<PermGroup> complements(std::size_t limit, std::uint64_t seed) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

struct ChiefSeries {
  PermGroup group;
  std::vector<PermGroup> terms;  // G = terms[0] > ... > terms.back() = 1
  std::vector<ChiefFactor> factors;  // factors[i] = terms[i] / terms[i+1]
};

/// Chief series of G refining `through` (normal, nested; G and 1 are added),
/// or the derived series when `through` is empty. Minimality of every factor
/// is verified exhaustively; LimitError above limits().factor_cap.
ChiefSeries chief_series(const PermGroup& g, std::span<const PermGroup> through = {},
                         std::uint64_t seed = 0);

/// A minimal normal subgroup of G strictly between y and x (y < result <= x).
PermGroup minimal_normal_between(const PermGroup& g, const PermGroup& x, const PermGroup& y,
                                 Rng& rng);

bool is_frattini_factor(const ChiefFactor& f);
const PermGroup& factor_centralizer(const ChiefFactor& f);
bool g_equivalent(const ChiefFactor& a, const ChiefFactor& b);

/// Out-level equivalence of two G-groups held as tables over the same G
/// generators: an isomorphism conjugating the induced maps G -> Out.
bool out_equivalent(const FactorTable& a, const FactorTable& b);
/// Equivalence with the copy of the factor on which G acts trivially.
bool equivalent_to_trivial_copy(const ChiefFactor& f);

/// Linear maps T with M_g T = T N_g for all generators (basis as flattened rows).
FpMatrix intertwiners(const ModuleAction& a, const ModuleAction& b);

}  // namespace crownforge
