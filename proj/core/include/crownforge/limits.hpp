#pragma once

#include <cstddef>
#include <cstdint>

namespace crownforge {

/// Size caps shared by every module. Defaults are read once; the degree cap
/// honours the CROWNFORGE_MAX_DEGREE environment variable.
struct Limits {
  std::size_t max_degree = 10000;
  std::size_t index_cap = 100000;
  std::size_t factor_cap = 100000;        // chief factor minimality / element sets
  std::size_t table_cap = 4096;           // multiplication tables of nonabelian factors
  std::uint64_t complement_search_cap = 10000000;
  std::uint64_t exhaustion_budget = 200000000;  // tuples for exact probabilities
  std::uint32_t max_prime = 97;
  std::size_t max_module_dim = 64;
  std::size_t module_points_cap = 1u << 20;  // p^dim for affine realisations
};

const Limits& limits();

/// Replaces the process-wide limits. Intended for tools and tests; not
/// synchronised with concurrent readers.
void set_limits(const Limits& l);

}  // namespace crownforge
