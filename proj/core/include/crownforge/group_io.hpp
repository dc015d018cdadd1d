#pragma once

#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "crownforge/constructions.hpp"

namespace crownforge {

/// Sym(n), Alt(n), Cyclic(n), Dihedral(n) on n points; throws ParseError for
/// anything else.
PermGroup builtin_group(std::string_view name);

/// A group literal {"name", "degree", "generators": [cycle strings]} or a
/// built-in name as a JSON string.
PermGroup group_from_json(const nlohmann::json& j);
nlohmann::ordered_json group_to_json(const PermGroup& g);

/// {"sequence": [literal or built-in, ...]}; every entry must be transitive.
GroupSequence sequence_from_json(const nlohmann::json& j);

/// File loaders; the file holds JSON (a literal, or a quoted/bare built-in name).
PermGroup load_group(const std::filesystem::path& path);
GroupSequence load_sequence(const std::filesystem::path& path);

}  // namespace crownforge
