#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crownforge/constructions.hpp"
#include "crownforge/group_io.hpp"
#include "crownforge/permutation.hpp"

namespace suite {

using crownforge::PermGroup;

inline PermGroup g(const char* name) { return crownforge::builtin_group(name); }

inline PermGroup make(std::size_t degree, std::initializer_list<const char*> cycles, std::string name) {
  std::vector<crownforge::Permutation> gens;
  for (const char* c : cycles) gens.push_back(crownforge::parse_permutation(c, degree));
  return PermGroup(degree, std::move(gens)).with_name(std::move(name));
}

inline PermGroup klein() { return make(4, {"(1,2)(3,4)", "(1,3)(2,4)"}, "V4"); }
inline PermGroup c2xc2() { return crownforge::direct_product(g("Cyclic(2)"), g("Cyclic(2)")); }
inline PermGroup a3_in_s3() { return make(3, {"(1,2,3)"}, "A3"); }

/// S3 wr C3, the order-648 example.
inline PermGroup s3_wr_c3() { return crownforge::wreath_product(g("Sym(3)"), g("Cyclic(3)")); }

/// The groups used for ground-truth comparisons, all of order at most 5000.
inline std::vector<PermGroup> small_groups() {
  return {g("Cyclic(1)"), g("Cyclic(6)"), g("Sym(3)"), g("Alt(4)"), g("Dihedral(4)"), klein(), c2xc2(),
          g("Sym(4)"), g("Alt(5)"), g("Sym(5)"), g("Alt(6)"), s3_wr_c3(),
          crownforge::wreath_product(klein(), g("Cyclic(2)")),
          crownforge::direct_product(g("Alt(5)"), g("Alt(5)")),
          crownforge::crown_based_power(g("Sym(3)"), a3_in_s3(), 2)};
}

}  // namespace suite
