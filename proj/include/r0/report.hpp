#pragma once

#include <string>
#include <utility>
#include <vector>

#include "r0/rational.hpp"

namespace r0 {

using ElementId = int;

// One quantified check: a label, a verdict, and on failure the first witness
// tuple found in canonical scan order (ascending element indices).
struct CheckItem {
  std::string label;
  bool pass{true};
  std::vector<std::pair<std::string, ElementId>> witness;  // role -> element
  std::string note;
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  const CheckItem* first_fail() const {
    for (const auto& it : items)
      if (!it.pass) return &it;
    return nullptr;
  }
  CheckItem& add(std::string label) {
    CheckItem item;
    item.label = std::move(label);
    items.push_back(std::move(item));
    return items.back();
  }
};

// Report for the axiom block R1..R6 plus the structural lattice checks.
using AxiomReport = CheckReport;

// Verdict of a fuzzy-filter predicate. Failing verdicts carry the condition
// label and enough bindings (elements and grades) to re-evaluate the
// violation through the atomic relations.
struct Verdict {
  bool pass{true};
  std::string condition;
  std::vector<std::pair<std::string, ElementId>> elems;
  std::vector<std::pair<std::string, Rat>> grades;
  std::string note;
};

}  // namespace r0
