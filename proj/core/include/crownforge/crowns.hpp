#pragma once

#include <optional>
#include <vector>

#include "crownforge/chief.hpp"

namespace crownforge {

/// An equivalence class of non-Frattini chief factors of one series.
struct Crown {
  ChiefFactor representative;
  std::vector<std::size_t> members;  // factor indices in the series
  std::size_t delta = 0;
  std::size_t frattini_count = 0;    // Frattini factors G-isomorphic to the class
  PermGroup monolithic;              // L_A
  PermGroup inner_inducer;           // I_G(A)
  std::optional<PermGroup> radical;  // R_G(A), when requested
};

/// Crowns of the series ordered by (factor order, abelian, delta, position).
std::vector<Crown> crowns(const ChiefSeries& series, bool with_radicals = false,
                          std::uint64_t seed = 0);

/// Number of non-Frattini factors of the series G-equivalent to f.
std::size_t delta(const ChiefSeries& series, const ChiefFactor& f);

/// L_A: A x| G/C_G(A) for abelian A (as an affine group), G/C_G(A) otherwise
/// (as the image of the conjugation action).
PermGroup monolithic_group(const ChiefFactor& f);

/// |socle(L_A)|^delta |L_A / socle|.
Integer crown_quotient_order(const ChiefFactor& f, std::size_t delta);

/// R_G(A) as the intersection of kernels of maps G -> L_A collected from
/// equivalent factors over several independently seeded series. Throws
/// VerificationError if |G/R| never reaches crown_quotient_order.
PermGroup crown_radical(const ChiefSeries& series, const ChiefFactor& f, std::uint64_t seed = 0,
                        std::size_t retries = 6);

/// The G-module induced on an abelian factor by G/C_G(A), realised on the
/// image of the module's vector action.
ModuleAction quotient_module(const ChiefFactor& f);

}  // namespace crownforge
