#include "crownforge/limits.hpp"

#include <cstdlib>
#include <string>

namespace crownforge {
namespace {

Limits initial_limits() {
  Limits l;
  if (const char* env = std::getenv("CROWNFORGE_MAX_DEGREE")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) l.max_degree = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      // unparsable override: keep the default
    }
  }
  return l;
}

Limits& mutable_limits() {
  static Limits l = initial_limits();
  return l;
}

}  // namespace

const Limits& limits() { return mutable_limits(); }

void set_limits(const Limits& l) { mutable_limits() = l; }

}  // namespace crownforge
