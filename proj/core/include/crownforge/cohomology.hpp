#pragma once

#include <cstdint>
#include <vector>

#include "crownforge/crowns.hpp"

namespace crownforge {

/// Letter k+1 is strong generator k, -(k+1) its inverse.
using Word = std::vector<std::int32_t>;

struct Presentation {
  std::vector<Permutation> generators;
  std::vector<Word> relators;
};

/// Schreier relators along the stabilizer chain: for every level, orbit point
/// beta and level generator s, the word u_beta s u_{beta^s}^-1 times the
/// inverses of the deeper transversal words it sifts to. Relators that reduce
/// freely to the empty word (Schreier tree edges) are omitted.
Presentation presentation_from_chain(const PermGroup& g);
Permutation evaluate(const Presentation& p, const Word& w);

/// dim Z^1(G, M), the fixed subspace, and dim H^1 = dim Z^1 - (dim M - dim M^G).
std::size_t z1_dimension(const ModuleAction& act);
std::size_t fixed_dimension(const ModuleAction& act);
std::size_t h1_dimension(const ModuleAction& act);

/// Number of complements of M in M x| G, counted by lifting the generators of
/// G; equals |Z^1|. Throws LimitError when |M|^k exceeds the search cap.
Integer complement_count_oracle(const ModuleAction& act);

/// Whether the module has no proper nonzero submodule: exhaustive over
/// vector orbits up to 10^5 points, random spinning (seeded) beyond.
bool is_irreducible(const ModuleAction& act, std::uint64_t seed = 0);
/// dim_{F_p} End_G(M); throws PreconditionError if M is reducible.
std::size_t end_degree(const ModuleAction& act);

struct HValueBreakdown {
  std::uint32_t p = 0;
  std::size_t dim = 0;
  std::size_t e = 1;
  std::size_t r = 1;
  std::size_t delta = 0;
  std::size_t s = 0;
  bool trivial_module = false;
  std::size_t h = 0;
};

/// floor((s - 1) / r) + 2.
std::size_t h_formula(std::size_t s, std::size_t r);

/// s_G(M) = delta + dim H^1(G/C_G(M), M) / e.
std::size_t s_value(const ChiefSeries& series, const ChiefFactor& f);
HValueBreakdown h_value(const ChiefSeries& series, const ChiefFactor& f);

/// Rank of the Sylow p-subgroup of G/G': log_p |G : G' G^p|.
std::size_t d_p_rank(const PermGroup& g, std::uint32_t p);
/// Primes dividing |G/G'|.
std::vector<std::uint32_t> abelianization_primes(const PermGroup& g);

}  // namespace crownforge
