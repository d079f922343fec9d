#pragma once

#include <optional>

#include "r0/fuzzy.hpp"

namespace r0 {

// Every notion below is decided exhaustively over the finite carrier; the
// pointwise variants additionally quantify thresholds over
// critical_thresholds, which decides the corresponding continuum statement
// exactly. Where two routes exist they are independent implementations whose
// agreement is a tested theorem, not shared code.

// Fuzzy filter via c1/c2: mu(x odot y) >= min(mu(x),mu(y)) and mu order-preserving.
Verdict is_fuzzy_filter(const FuzzySubset& mu);

// Fuzzy filter via c3/c4: mu(1) >= mu(x) and mu(y) >= min(mu(x->y), mu(x)).
Verdict is_fuzzy_filter_mp(const FuzzySubset& mu);

// (in,in)-fuzzy fated filter, inequality form:
//   mu(1) >= mu(x),  mu(x) >= min(mu(a->((x->y)->x)), mu(a)).
Verdict is_in_in_fated(const FuzzySubset& mu);
// Same notion decided pointwise over the k = 0 threshold grid.
Verdict is_in_in_fated_pointwise(const FuzzySubset& mu);

// (in, in-or-q_k)-fuzzy fated filter, inequality form:
//   mu(1) >= min(mu(x), (1-k)/2),
//   mu(x) >= min(mu(a->((x->y)->x)), mu(a), (1-k)/2).
Verdict is_qk_fated(const FuzzySubset& mu, const KParam& k);

// Same notion straight from the defining point conditions:
//   x_t in mu                         =>  1_t in-or-q_k mu
//   (a->((x->y)->x))_t in mu, a_s in mu  =>  x_min(t,s) in-or-q_k mu
// with t, s quantified over critical_thresholds(mu, k).
Verdict is_qk_fated_pointwise(const FuzzySubset& mu, const KParam& k);

// Strong variant: c3 plus the second point condition above.
Verdict is_strong_qk_fated(const FuzzySubset& mu, const KParam& k);

// Level-set characterization: U(mu;t) must be a fated filter or empty for
// every t in (0,(1-k)/2].
Verdict qk_upper_levels_fated(const FuzzySubset& mu, const KParam& k, const FatedFamily& ff);

// Necessary condition only (the converse fails): Q_k(mu;t) must be a fated
// filter or empty for every t in ((1-k)/2, 1].
Verdict qk_quasi_levels_fated(const FuzzySubset& mu, const KParam& k, const FatedFamily& ff);

// Bracket-level characterization: [mu]_t^k must be a fated filter or empty
// for every t in (0,1].
Verdict qk_bracket_levels_fated(const FuzzySubset& mu, const KParam& k, const FatedFamily& ff);

// Derived grade bounds every qk fated filter satisfies:
//   mu(x->z) >= min(mu(x->(y->z)), mu(x->y), (1-k)/2),
//   mu(x)    >= min(mu((x->y)->x), (1-k)/2).
Verdict deduction_grade_bounds(const FuzzySubset& mu, const KParam& k);

// Conditional reduction: a qk fated filter with mu(1) < (1-k)/2 must already
// be an (in,in)-fuzzy fated filter. Vacuous pass when the guard fails.
Verdict top_below_half_reduction(const FuzzySubset& mu, const KParam& k);

// Least k on the candidate grid {0} union {1-2*mu(x) : mu(x) < 1/2} for which
// is_qk_fated passes; nullopt when none does. Verifies that passing is upward
// closed in k along the grid.
std::optional<Rat> min_valid_k(const FuzzySubset& mu);

}  // namespace r0
