#pragma once

#include <vector>

#include "r0/crisp.hpp"
#include "r0/rational.hpp"

namespace r0 {

// Total map from the carrier into [0,1] with exact rational grades.
struct FuzzySubset {
  const Algebra* alg{nullptr};
  std::vector<Rat> grade;

  FuzzySubset() = default;
  FuzzySubset(const Algebra& a, std::vector<Rat> g);

  const Rat& operator()(ElementId x) const { return grade[static_cast<size_t>(x)]; }
  int size() const { return static_cast<int>(grade.size()); }

  friend bool operator==(const FuzzySubset& a, const FuzzySubset& b) {
    return a.alg == b.alg && a.grade == b.grade;
  }
};

// Fuzzy point x_t: support x with value t in (0,1].
struct FuzzyPoint {
  ElementId support;
  Rat value;

  FuzzyPoint(ElementId x, const Rat& t);
};

// x_t in mu          iff mu(x) >= t
// x_t q mu           iff mu(x) + t > 1
// x_t q_k mu         iff mu(x) + t + k > 1
// x_t in-or-q_k mu   iff either of the first and third
bool belongs(const FuzzyPoint& p, const FuzzySubset& mu);
bool quasi(const FuzzyPoint& p, const FuzzySubset& mu);
bool quasi_k(const FuzzyPoint& p, const FuzzySubset& mu, const KParam& k);
bool in_vee_qk(const FuzzyPoint& p, const FuzzySubset& mu, const KParam& k);

// Level extractors; t must lie in (0,1].
Subset upper_level(const FuzzySubset& mu, const Rat& t);                    // U(mu;t)
Subset quasi_level(const FuzzySubset& mu, const Rat& t, const KParam& k);   // Q_k(mu;t)
Subset bracket_level(const FuzzySubset& mu, const Rat& t, const KParam& k); // U union Q_k

// Thresholds where some belongs/quasi_k truth value changes: every grade and
// every 1-k-grade that lands in (0,1], plus (1-k)/2 and 1.
std::vector<Rat> threshold_breakpoints(const FuzzySubset& mu, const KParam& k);

// threshold_breakpoints plus the midpoint of every consecutive pair. Between
// consecutive breakpoints the truth of belongs/quasi_k is constant in t for
// every element, so a statement quantified over t in an interval I is decided
// by evaluating at these points intersected with I (each maximal constant
// piece (b, b'] contributes its right endpoint, and 1 closes the last piece).
std::vector<Rat> critical_thresholds(const FuzzySubset& mu, const KParam& k);

FuzzySubset fuzzy_union(const FuzzySubset& mu, const FuzzySubset& nu);  // pointwise max
std::vector<Rat> image(const FuzzySubset& mu);                          // attained grades, ascending

// Equality of the families {U(mu;t) : t in (0,1]} as sets of subsets.
bool same_level_family(const FuzzySubset& mu, const FuzzySubset& nu);

// Maximal constant intervals (lo, hi] of a level-set family, highest t first.
enum class LevelKind { Upper, Quasi, Bracket };

struct IntervalRow {
  Rat lo, hi;   // the row covers t in (lo, hi]
  Subset set;
};

std::vector<IntervalRow> level_table(const FuzzySubset& mu, const KParam& k, LevelKind kind,
                                     const Rat& lo, const Rat& hi);

// Distinct level subsets over the given range, via level_table.
std::vector<Subset> level_family(const FuzzySubset& mu, const KParam& k, LevelKind kind,
                                 const Rat& lo, const Rat& hi);

}  // namespace r0
