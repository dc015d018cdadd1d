#include "crownforge/group_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "crownforge/errors.hpp"
#include "crownforge/limits.hpp"

namespace crownforge {

namespace {

Permutation cycle(std::size_t degree, Point first, Point last) {
  std::vector<Point> img(degree);
  for (Point x = 0; x < degree; ++x) img[x] = x;
  for (Point x = first; x < last; ++x) img[x] = x + 1;
  img[last] = first;
  return Permutation::unchecked(std::move(img));
}

}  // namespace

PermGroup builtin_group(std::string_view name) {
  const auto open = name.find('(');
  if (open == std::string_view::npos || name.back() != ')')
    throw ParseError("unknown group name '" + std::string(name) + "'");
  const auto kind = name.substr(0, open);
  const auto arg = name.substr(open + 1, name.size() - open - 2);
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
  if (ec != std::errc() || ptr != arg.data() + arg.size() || n == 0)
    throw ParseError("bad degree in '" + std::string(name) + "'");
  if (n > limits().max_degree) throw LimitError("built-in degree exceeds configured maximum");
  std::vector<Permutation> gens;
  const auto last = static_cast<Point>(n - 1);
  if (kind == "Sym") {
    if (n >= 2) gens = {cycle(n, 0, 1), cycle(n, 0, last)};
  } else if (kind == "Alt") {
    if (n >= 3) gens = {cycle(n, 0, 2), n % 2 ? cycle(n, 0, last) : cycle(n, 1, last)};
  } else if (kind == "Cyclic") {
    if (n >= 2) gens = {cycle(n, 0, last)};
  } else if (kind == "Dihedral") {
    if (n >= 2) {
      std::vector<Point> refl(n);
      for (Point x = 0; x < n; ++x) refl[x] = last - x;
      gens = {cycle(n, 0, last), Permutation::unchecked(std::move(refl))};
    }
  } else {
    throw ParseError("unknown group family '" + std::string(kind) + "'");
  }
  return PermGroup(n, std::move(gens)).with_name(std::string(name));
}

PermGroup group_from_json(const nlohmann::json& j) {
  if (j.is_string()) return builtin_group(j.get<std::string>());
  if (!j.is_object()) throw ParseError("group literal must be an object or a built-in name");
  if (!j.contains("degree") || !j["degree"].is_number_unsigned())
    throw ParseError("group literal needs a positive integer 'degree'");
  const auto degree = j["degree"].get<std::size_t>();
  if (degree == 0) throw ParseError("group degree must be positive");
  if (degree > limits().max_degree) throw LimitError("group degree exceeds configured maximum");
  std::vector<Permutation> gens;
  if (j.contains("generators")) {
    if (!j["generators"].is_array()) throw ParseError("'generators' must be a list");
    for (const auto& g : j["generators"]) {
      if (!g.is_string()) throw ParseError("generators must be cycle strings");
      gens.push_back(parse_permutation(g.get<std::string>(), degree));
    }
  }
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  return PermGroup(degree, std::move(gens)).with_name(std::move(name));
}

nlohmann::ordered_json group_to_json(const PermGroup& g) {
  nlohmann::ordered_json j;
  j["name"] = g.name();
  j["degree"] = g.degree();
  auto gens = nlohmann::ordered_json::array();
  for (const auto& x : g.generators()) gens.push_back(x.to_string());
  j["generators"] = std::move(gens);
  return j;
}

GroupSequence sequence_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("sequence") || !j["sequence"].is_array())
    throw ParseError("sequence file needs a 'sequence' list");
  std::vector<PermGroup> groups;
  std::size_t i = 0;
  for (const auto& e : j["sequence"]) {
    ++i;
    try {
      groups.push_back(group_from_json(e));
    } catch (const ParseError& err) {
      throw ParseError("sequence entry " + std::to_string(i) + ": " + err.what());
    }
  }
  if (groups.empty()) throw ParseError("sequence is empty");
  return GroupSequence(std::move(groups));
}

namespace {

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw ParseError(path.string() + " is empty");
  // a bare built-in name such as Alt(5)
  if (std::isalpha(static_cast<unsigned char>(text[start]))) {
    const auto end = text.find_last_not_of(" \t\r\n");
    return nlohmann::json(text.substr(start, end - start + 1));
  }
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace

PermGroup load_group(const std::filesystem::path& path) { return group_from_json(read_json(path)); }

GroupSequence load_sequence(const std::filesystem::path& path) {
  return sequence_from_json(read_json(path));
}

}  // namespace crownforge
