#include "crownforge/simple_groups.hpp"

#include <algorithm>

namespace crownforge {

namespace {

bool prime_power(std::uint64_t q, std::uint64_t& p, std::uint64_t& f) {
  for (p = 2; p <= q; ++p)
    if (q % p == 0) break;
  f = 0;
  while (q % p == 0) {
    q /= p;
    ++f;
  }
  return q == 1;
}

std::vector<SimpleGroupInfo> build() {
  std::vector<SimpleGroupInfo> t;
  Integer fact = 2;
  for (int n = 3; n <= 9; ++n) {
    fact *= n;
    if (n >= 5) t.push_back({"A" + std::to_string(n), fact / 2, n == 6 ? Integer(1440) : fact, n});
  }
  for (std::uint64_t q = 7; q <= 125; ++q) {
    std::uint64_t p, f;
    if (!prime_power(q, p, f) || q == 9) continue;
    const std::uint64_t g = p == 2 ? 1 : 2;
    const Integer order = Integer(q) * (q * q - 1) / g;
    const std::uint64_t deg = q == 7 ? 7 : q == 11 ? 11 : q + 1;
    t.push_back({"PSL(2," + std::to_string(q) + ")", order, order * g * f, deg});
  }
  const std::vector<SimpleGroupInfo> sporadic = {
      {"PSL(3,3)", 5616, 11232, 13},     {"PSU(3,3)", 6048, 12096, 28},
      {"M11", 7920, 7920, 11},           {"PSL(3,4)", 20160, 241920, 21},
      {"PSU(4,2)", 25920, 51840, 27},    {"Sz(8)", 29120, 87360, 65},
      {"PSU(3,4)", 62400, 249600, 65},   {"M12", 95040, 190080, 12},
      {"PSU(3,5)", 126000, 756000, 50},  {"J1", 175560, 175560, 266},
      {"PSL(3,5)", 372000, 744000, 31},  {"M22", 443520, 887040, 22},
      {"J2", 604800, 1209600, 100},      {"PSp(4,4)", 979200, 3916800, 85},
  };
  t.insert(t.end(), sporadic.begin(), sporadic.end());
  std::stable_sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.order < b.order; });
  return t;
}

}  // namespace

const std::vector<SimpleGroupInfo>& simple_group_table() {
  static const std::vector<SimpleGroupInfo> table = build();
  return table;
}

std::optional<SimpleGroupInfo> identify_simple(const Integer& order,
                                               const std::set<std::uint64_t>& element_orders) {
  std::vector<const SimpleGroupInfo*> hits;
  for (const auto& s : simple_group_table())
    if (s.order == order) hits.push_back(&s);
  if (hits.empty()) return std::nullopt;
  if (hits.size() == 1) return *hits[0];
  const bool alt8 = element_orders.count(15) || element_orders.count(6);
  for (const auto* s : hits)
    if ((s->name == "A8") == alt8) return *s;
  return std::nullopt;
}

std::optional<SimpleGroupInfo> simple_by_name(const std::string& name) {
  for (const auto& s : simple_group_table())
    if (s.name == name) return s;
  return std::nullopt;
}

}  // namespace crownforge
