#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "crownforge/harness.hpp"

namespace cli {

using crownforge::Json;

// Result of one subcommand: the report and whether a checked claim failed.
struct Outcome {
  Json report;
  bool violated = false;
};

crownforge::PermGroup group_arg(const std::string& arg);
crownforge::GroupSequence sequence_arg(const std::string& arg);

Outcome pgen(const std::string& group, std::size_t d, bool exact, std::optional<std::uint64_t> mc,
             std::uint64_t seed);
Outcome dmin(const std::string& group, std::uint64_t budget, std::uint64_t seed);
Outcome crownpow_cutoff(const std::string& l, const std::string& socle, std::size_t d,
                        std::optional<std::uint64_t> caut, std::uint64_t seed);

Outcome seq_validate(const std::string& seq);
Outcome seq_rank_trace(const std::string& seq, std::optional<std::size_t> m);
Outcome tower_build(const std::string& seq, std::size_t m);
Outcome tower_chief(const std::string& seq, std::size_t m, std::uint64_t seed);
Outcome tower_crowns(const std::string& seq, std::size_t m, std::uint64_t seed);

Outcome verify_main(const std::string& seq, std::size_t d, std::uint64_t k0, std::size_t m,
                    std::uint64_t seed, std::uint64_t budget);
Outcome verify_chief(const std::string& h, const std::string& k, std::uint64_t seed);
Outcome verify_hbounds(const std::string& seq, std::size_t m, std::uint64_t k0,
                       std::optional<std::size_t> d, std::uint64_t seed, std::uint64_t budget);
Outcome verify_pfg(const std::string& seq, std::uint64_t c, std::size_t m, std::uint64_t seed);
Outcome verify_wreath(const std::string& h, const std::string& k, std::uint64_t k0, std::uint64_t seed,
                      std::uint64_t budget);

}  // namespace cli
