#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crownforge/constructions.hpp"
#include "crownforge/generation.hpp"

namespace crownforge {

using Json = nlohmann::ordered_json;

/// d of the product of G_1/G_1', ..., G_m/G_m'.
std::size_t abelianization_product_rank(const GroupSequence& seq, std::size_t m);

/// First index i (1-based) with n_1...n_i >= log_60(k0), if one is <= seq.size().
std::optional<std::size_t> first_large_index(const GroupSequence& seq, std::uint64_t k0);

struct IndexRecord {
  std::size_t index = 0;  // 1-based
  std::size_t degree = 0;
  Integer order;
  DBounds d;
  std::map<std::uint32_t, std::size_t> p_ranks;  // d_p(G_i/G_i')
  Integer prior_degree;                          // n_1...n_{i-1}
  Verdict condition2 = Verdict::holds;           // d(G_i) <= D n_1...n_{i-1}
};

struct TowerRecord {
  std::size_t m = 0;
  std::size_t degree = 0;
  Integer order;
  std::size_t product_rank = 0;  // d(prod_{i<=m} Gbar_i)
  DBounds d;
  bool in_range = false;         // m >= i0
  std::size_t tail_rank = 0;     // d(prod_{i0<=i<=m} Gbar_i)
  std::size_t rhs_lower = 0, rhs_upper = 0;
  Verdict verdict = Verdict::undecided;  // d(W_m) <= E + tail_rank
};

struct SequenceReport {
  std::size_t m_max = 0;
  std::size_t d_param = 0;
  std::uint64_t k0 = 60, seed = 0, budget = 0;
  std::vector<IndexRecord> entries;
  std::vector<TowerRecord> towers;
  std::optional<std::size_t> i0;
  std::size_t e_lower = 0, e_upper = 0;  // interval for max(D + 2, d(W_i0))
  std::vector<std::string> notes;
};

SequenceReport main_theorem_report(const GroupSequence& seq, std::size_t m_max, std::size_t d_param,
                                   std::uint64_t k0, std::uint64_t seed, std::uint64_t budget);

/// Checks on a non-Frattini chief factor of W = H wr K lying in H'^n.
struct ChiefPart1Record {
  std::string factor;  // "|A| = ..., position j of the H series"
  std::size_t delta_h = 0, delta_w = 0;
  Integer l_a_order, l_m_order, k_order;
  std::size_t n = 0;
  bool socle_matches = false;     // |M| = |A|^n
  bool l_identity = false;        // |L_M| = |L_A|^n |K|
  bool not_above_b_prime = false; // M is not W-equivalent to a factor of W/B'
  bool holds() const { return delta_h == delta_w && socle_matches && l_identity && not_above_b_prime; }
};
/// delta_W(M) <= delta_K(M) + d_p(H/H') r_K(M) for factors between B' and B.
struct ChiefPart2Record {
  std::uint32_t p = 0;
  std::size_t dim = 0, delta_w = 0, delta_k = 0, d_p_h = 0, r = 0;
  bool holds() const { return delta_w <= delta_k + d_p_h * r; }
};
struct ChiefCheckRecord {
  Integer wreath_order;
  std::vector<ChiefPart1Record> part1;
  std::vector<ChiefPart2Record> part2;
  bool holds() const;
};
ChiefCheckRecord prop_chief_check(const PermGroup& h, const PermGroup& k, std::uint64_t seed = 1);

/// One nontrivial abelian crown of W = H wr K against the case bounds for h_W(M).
struct ModuliCase {
  std::uint32_t p = 0;
  std::size_t dim = 0;
  std::size_t h_w = 0, delta_w = 0;
  int case_number = 0;  // 1, 2, 3; 0 when no case hypothesis applies
  std::size_t bound = 0;
  Verdict verdict = Verdict::undecided;
  std::string detail;
};
struct ModuliRecord {
  std::size_t n = 0;
  std::vector<ModuliCase> cases;
  Verdict verdict() const;
};
ModuliRecord moduli_check(const PermGroup& h, const PermGroup& k, std::uint64_t seed = 1);

/// h_{W_m}(M) <= E + d_p(prod_{i0<=i<=m} Gbar_i) for every nontrivial abelian
/// crown module M of W_m, with the case bounds for W_m = G_m wr W_{m-1}.
struct HBoundEntry {
  std::uint32_t p = 0;
  std::size_t dim = 0, h = 0, bound_lower = 0, bound_upper = 0;
  Verdict verdict = Verdict::undecided;
};
struct HBoundRecord {
  std::size_t m = 0;
  std::optional<std::size_t> i0;
  std::size_t d_param = 0;
  std::uint64_t k0 = 60;
  std::size_t e_lower = 0, e_upper = 0;
  bool vacuous = false;  // no nontrivial abelian crown module
  std::vector<HBoundEntry> entries;
  std::optional<ModuliRecord> moduli;
  Verdict verdict() const;
};
/// D defaults to the least value meeting d(G_i) <= D n_1...n_{i-1} on the
/// upper ends of the d-bounds.
HBoundRecord h_bound_check(const GroupSequence& seq, std::size_t m, std::uint64_t k0,
                           std::optional<std::size_t> d_param = std::nullopt,
                           std::uint64_t seed = 1, std::uint64_t budget = 20000);

/// d(Gbar wr K) <= max_p max(d(Gbar x K), rho_p) with rho_p taken over the
/// nontrivial modules occurring as chief factors of K only.
struct WreathAbRecord {
  DBounds d_wreath, d_product;
  std::map<std::uint32_t, std::size_t> rho;  // restricted rho per prime
  std::size_t bound_lower = 0, bound_upper = 0;
  Verdict verdict = Verdict::undecided;  // a violation here is reported as undecided
};
WreathAbRecord wreath_ab_check(const PermGroup& abelian_h, const PermGroup& k, std::uint64_t seed = 1,
                               std::uint64_t budget = 20000);

enum class PfgStatus { satisfied, violated, unknown_type };
const char* to_string(PfgStatus s);
/// delta <= l^exponent.
bool pfg_inequality(std::size_t delta, const Integer& l, const Integer& exponent);

struct PfgEntry {
  std::size_t index = 0;
  std::string socle;  // e.g. "A5^2"
  std::size_t delta = 0;
  std::optional<Integer> l;  // l(S)^a
  Integer exponent;          // c n_1...n_{i-1}
  PfgStatus status = PfgStatus::unknown_type;
};
struct PfgRecord {
  std::uint64_t c = 1;
  std::vector<PfgEntry> entries;
  PfgStatus status() const;
};
PfgRecord pfg_check(const GroupSequence& seq, std::size_t m_max, std::uint64_t c,
                    std::uint64_t seed = 1);

Json to_json(const DBounds& b);
Json to_json(const ProbEstimate& p);
Json to_json(const TheoremFBound& t);
Json to_json(const WreathBound& w);
Json to_json(const NecessaryConditionRecord& r);
Json to_json(const SequenceReport& r);
Json to_json(const ChiefCheckRecord& r);
Json to_json(const ModuliRecord& r);
Json to_json(const HBoundRecord& r);
Json to_json(const WreathAbRecord& r);
Json to_json(const PfgRecord& r);

/// Notes attached to every report.
std::vector<std::string> report_footer(std::uint64_t k0);

}  // namespace crownforge
