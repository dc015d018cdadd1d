#pragma once

#include <string>
#include <vector>

#include "crownforge/module.hpp"
#include "suite.hpp"

namespace suite {

struct NamedModule {
  std::string name;
  crownforge::ModuleAction action;
};

inline crownforge::FpMatrix mat(std::uint32_t p, std::size_t n, std::vector<std::uint32_t> e) {
  return crownforge::FpMatrix(p, n, n, std::move(e));
}

/// Small modules with |M x| G| at most 5000.
inline std::vector<NamedModule> modules() {
  using crownforge::ModuleAction;
  const auto c3_f2 = mat(2, 2, {0, 1, 1, 1});
  std::vector<NamedModule> out;
  out.push_back({"C2 on F3 sign", ModuleAction(g("Cyclic(2)"), 3, {mat(3, 1, {2})})});
  out.push_back({"S3 on F2^2 natural",
                 ModuleAction(make(3, {"(1,2,3)", "(1,2)"}, "S3"), 2, {c3_f2, mat(2, 2, {0, 1, 1, 0})})});
  out.push_back({"C3 on F2^2 irreducible", ModuleAction(g("Cyclic(3)"), 2, {c3_f2})});
  out.push_back({"A4 on F2^2 natural",
                 ModuleAction(make(4, {"(1,2)(3,4)", "(1,2,3)"}, "A4"), 2, {mat(2, 2, {1, 0, 0, 1}), c3_f2})});
  out.push_back({"S3 on F2 trivial", ModuleAction::trivial(make(3, {"(1,2,3)", "(1,2)"}, "S3"), 2, 1)});
  out.push_back({"C2xC2 on F2 trivial", ModuleAction::trivial(c2xc2(), 2, 1)});
  out.push_back({"S3 on F3 sign", ModuleAction(make(3, {"(1,2,3)", "(1,2)"}, "S3"), 3, {mat(3, 1, {1}), mat(3, 1, {2})})});
  out.push_back({"C4 on F2 trivial", ModuleAction::trivial(g("Cyclic(4)"), 2, 1)});
  return out;
}

}  // namespace suite
