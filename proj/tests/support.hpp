#pragma once

#include <string>
#include <vector>

#include "r0/suite.hpp"

namespace testsupport {

inline std::string fixture(const std::string& name) {
  return std::string(R0_FIXTURES_DIR) + "/" + name;
}

// Chain algebra on n equally spaced grades with the standard order-reversing
// involution and the nilpotent-minimum arrow: x -> y = 1 when x <= y, else
// max(1-x, y). The 6-element shipped fixture is the n = 6 instance.
inline r0::Algebra make_chain_algebra(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  std::vector<r0::ElementId> neg;
  for (int i = 0; i < n; ++i) neg.push_back(n - 1 - i);
  std::vector<r0::ElementId> arrow(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      arrow[x * n + y] = x <= y ? n - 1 : std::max(n - 1 - x, y);
  return r0::Algebra(std::move(names), std::move(neg), std::move(arrow));
}

inline r0::Subset by_names(const r0::Algebra& alg, std::initializer_list<const char*> names) {
  r0::Subset s = r0::Subset::empty(alg.size());
  for (const char* n : names) s.add(*alg.find(n));
  return s;
}

inline r0::FuzzySubset grades(const r0::Algebra& alg,
                              std::initializer_list<std::pair<const char*, r0::Rat>> vals) {
  std::vector<r0::Rat> g(alg.size(), r0::Rat(0));
  for (const auto& [name, r] : vals) g[*alg.find(name)] = r;
  return r0::FuzzySubset(alg, std::move(g));
}

}  // namespace testsupport
