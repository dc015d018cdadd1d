#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crownforge/integer.hpp"

namespace crownforge {

struct SimpleGroupInfo {
  std::string name;
  Integer order;
  Integer aut_order;
  Integer min_degree;  // least degree of a faithful transitive action
};

/// Nonabelian simple groups of order at most 10^6. Orders are unique there
/// except for 20160, where the element orders separate Alt(8) (which has
/// elements of order 6 and 15) from PSL(3,4).
const std::vector<SimpleGroupInfo>& simple_group_table();

std::optional<SimpleGroupInfo> identify_simple(const Integer& order,
                                               const std::set<std::uint64_t>& element_orders);
std::optional<SimpleGroupInfo> simple_by_name(const std::string& name);

}  // namespace crownforge
