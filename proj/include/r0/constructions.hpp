#pragma once

#include <utility>
#include <vector>

#include "r0/fuzzy.hpp"

namespace r0 {

// Strictly increasing chain F0 < F1 < ... < Fn = L of fated filters.
struct FilterChain {
  const Algebra* alg{nullptr};
  std::vector<Subset> members;

  static FilterChain of(const Algebra& alg, std::vector<Subset> members);
};

// Finite family {F_t : t in Lambda}, Lambda within (0,(1-k)/2], such that the
// union covers L and s < t iff F_t is strictly inside F_s.
struct IndexedFamily {
  const Algebra* alg{nullptr};
  std::vector<std::pair<Rat, Subset>> entries;  // ascending t

  static IndexedFamily of(const Algebra& alg, std::vector<std::pair<Rat, Subset>> entries,
                          const KParam& k);
};

// Two-valued subset t1 on F, t2 off F, with t1 in [(1-k)/2, 1] and
// t2 in (0,(1-k)/2). F must be a fated filter.
FuzzySubset two_level(const Algebra& alg, const Subset& f, const Rat& t1, const Rat& t2,
                      const KParam& k);

// Piecewise subset over a chain: 1 gets t0 (>= (1-k)/2), F0 \ {1} gets
// t (>= t0), Fi \ Fi-1 gets the i-th level, levels strictly decreasing in
// (0,(1-k)/2). Its upper levels on (0,(1-k)/2] are exactly the chain, with
// U(.;(1-k)/2) = F0.
FuzzySubset chain_construction(const FilterChain& chain, const KParam& k, const Rat& t0,
                               const Rat& t, const std::vector<Rat>& levels);

// Deterministic defaults: t0 = t = (1-k)/2, levels evenly spaced below it.
FuzzySubset chain_construction(const FilterChain& chain, const KParam& k);

// mu(x) = max{t : x in F_t} over the finite family.
FuzzySubset sup_construction(const IndexedFamily& family, const KParam& k);

// Splits a qk fated filter with at least three distinct grades below
// (1-k)/2 into two proper, non-equivalent qk fated filters whose pointwise
// max is mu. The interior value of the second component is the midpoint of
// the second and third sub-threshold grades.
std::pair<FuzzySubset, FuzzySubset> decompose(const FuzzySubset& mu, const KParam& k);

}  // namespace r0
