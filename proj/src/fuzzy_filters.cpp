#include "r0/fuzzy_filters.hpp"

#include <algorithm>
#include <stdexcept>

namespace r0 {

namespace {

Verdict failure(std::string condition, std::vector<std::pair<std::string, ElementId>> elems,
                std::vector<std::pair<std::string, Rat>> grades, std::string note = "") {
  Verdict v;
  v.pass = false;
  v.condition = std::move(condition);
  v.elems = std::move(elems);
  v.grades = std::move(grades);
  v.note = std::move(note);
  return v;
}

// First grid value strictly above lo, or nullopt.
std::optional<Rat> first_above(const std::vector<Rat>& grid, const Rat& lo) {
  auto it = std::upper_bound(grid.begin(), grid.end(), lo);
  if (it == grid.end()) return std::nullopt;
  return *it;
}

}  // namespace

Verdict is_fuzzy_filter(const FuzzySubset& mu) {
  const Algebra& A = *mu.alg;
  const int n = A.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (mu(A.odot(x, y)) < rat_min(mu(x), mu(y)))
        return failure("c1", {{"x", x}, {"y", y}, {"x.y", A.odot(x, y)}},
                       {{"mu(x.y)", mu(A.odot(x, y))}, {"mu(x)", mu(x)}, {"mu(y)", mu(y)}});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (A.leq(x, y) && mu(x) > mu(y))
        return failure("c2", {{"x", x}, {"y", y}}, {{"mu(x)", mu(x)}, {"mu(y)", mu(y)}});
  return {};
}

Verdict is_fuzzy_filter_mp(const FuzzySubset& mu) {
  const Algebra& A = *mu.alg;
  const int n = A.size();
  const ElementId one = A.top();
  for (int x = 0; x < n; ++x)
    if (mu(one) < mu(x))
      return failure("c3", {{"x", x}}, {{"mu(1)", mu(one)}, {"mu(x)", mu(x)}});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (mu(y) < rat_min(mu(A.arrow(x, y)), mu(x)))
        return failure("c4", {{"x", x}, {"y", y}},
                       {{"mu(y)", mu(y)}, {"mu(x->y)", mu(A.arrow(x, y))}, {"mu(x)", mu(x)}});
  return {};
}

Verdict is_in_in_fated(const FuzzySubset& mu) {
  const Algebra& A = *mu.alg;
  const int n = A.size();
  const ElementId one = A.top();
  for (int x = 0; x < n; ++x)
    if (mu(one) < mu(x))
      return failure("in-in.1", {{"x", x}}, {{"mu(1)", mu(one)}, {"mu(x)", mu(x)}});
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a)
      for (int y = 0; y < n; ++y) {
        const ElementId w = A.arrow(a, A.arrow(A.arrow(x, y), x));
        if (mu(x) < rat_min(mu(w), mu(a)))
          return failure("in-in.2", {{"x", x}, {"a", a}, {"y", y}, {"w", w}},
                         {{"mu(x)", mu(x)}, {"mu(w)", mu(w)}, {"mu(a)", mu(a)}});
      }
  return {};
}

Verdict is_in_in_fated_pointwise(const FuzzySubset& mu) {
  const Algebra& A = *mu.alg;
  const int n = A.size();
  const ElementId one = A.top();
  const std::vector<Rat> grid = critical_thresholds(mu, KParam::zero());

  // x_t in mu must force 1_t in mu: a failing t is any grid point in
  // (mu(1), mu(x)], and the least one suffices as witness.
  for (int x = 0; x < n; ++x) {
    const auto t = first_above(grid, mu(one));
    if (t && *t <= mu(x))
      return failure("in-in.pt1", {{"x", x}}, {{"t", *t}, {"mu(1)", mu(one)}, {"mu(x)", mu(x)}});
  }
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a)
      for (int y = 0; y < n; ++y) {
        const ElementId w = A.arrow(a, A.arrow(A.arrow(x, y), x));
        const Rat cap = rat_min(mu(w), mu(a));  // min(t,s) ranges over grid points <= cap
        if (mu(x) >= cap) continue;
        const auto m = first_above(grid, mu(x));
        if (m && *m <= cap)
          return failure("in-in.pt2", {{"x", x}, {"a", a}, {"y", y}, {"w", w}},
                         {{"t", *m}, {"s", *m}, {"mu(x)", mu(x)}});
      }
  return {};
}

Verdict is_qk_fated(const FuzzySubset& mu, const KParam& k) {
  const Algebra& A = *mu.alg;
  const int n = A.size();
  const ElementId one = A.top();
  const Rat half = k.half();
  for (int x = 0; x < n; ++x)
    if (mu(one) < rat_min(mu(x), half))
      return failure("qk.1", {{"x", x}},
                     {{"mu(1)", mu(one)}, {"mu(x)", mu(x)}, {"half", half}});
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a)
      for (int y = 0; y < n; ++y) {
        const ElementId w = A.arrow(a, A.arrow(A.arrow(x, y), x));
        if (mu(x) < rat_min(rat_min(mu(w), mu(a)), half))
          return failure("qk.2", {{"x", x}, {"a", a}, {"y", y}, {"w", w}},
                         {{"mu(x)", mu(x)}, {"mu(w)", mu(w)}, {"mu(a)", mu(a)}, {"half", half}});
      }
  return {};
}

namespace {

// Least grid point m <= cap for which neither mu(e) >= m nor
// mu(e) + m + k > 1 holds; the point conditions fail exactly there.
std::optional<Rat> failing_threshold(const std::vector<Rat>& grid, const Rat& cap,
                                     const Rat& grade_e, const KParam& k) {
  if (grade_e >= cap) return std::nullopt;
  const Rat quasi_bound = Rat(1) - k.k - grade_e;  // quasi_k holds iff m > this
  const auto m = first_above(grid, grade_e);
  if (m && *m <= cap && *m <= quasi_bound) return m;
  return std::nullopt;
}

Verdict pointwise_condition2(const FuzzySubset& mu, const KParam& k,
                             const std::vector<Rat>& grid, const char* label) {
  const Algebra& A = *mu.alg;
  const int n = A.size();
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a)
      for (int y = 0; y < n; ++y) {
        const ElementId w = A.arrow(a, A.arrow(A.arrow(x, y), x));
        const Rat cap = rat_min(mu(w), mu(a));
        if (auto m = failing_threshold(grid, cap, mu(x), k))
          return failure(label, {{"x", x}, {"a", a}, {"y", y}, {"w", w}},
                         {{"t", *m}, {"s", *m}, {"mu(x)", mu(x)}});
      }
  return {};
}

}  // namespace

Verdict is_qk_fated_pointwise(const FuzzySubset& mu, const KParam& k) {
  const Algebra& A = *mu.alg;
  const int n = A.size();
  const ElementId one = A.top();
  const std::vector<Rat> grid = critical_thresholds(mu, k);

  for (int x = 0; x < n; ++x)
    if (auto t = failing_threshold(grid, mu(x), mu(one), k))
      return failure("qk.pt1", {{"x", x}}, {{"t", *t}, {"mu(1)", mu(one)}, {"mu(x)", mu(x)}});
  return pointwise_condition2(mu, k, grid, "qk.pt2");
}

Verdict is_strong_qk_fated(const FuzzySubset& mu, const KParam& k) {
  const Algebra& A = *mu.alg;
  const int n = A.size();
  const ElementId one = A.top();
  for (int x = 0; x < n; ++x)
    if (mu(one) < mu(x))
      return failure("strong.c3", {{"x", x}}, {{"mu(1)", mu(one)}, {"mu(x)", mu(x)}});
  Verdict v = pointwise_condition2(mu, k, critical_thresholds(mu, k), "strong.2");
  return v;
}

namespace {

Verdict levels_in_family(const FuzzySubset& mu, const KParam& k, const FatedFamily& ff,
                         LevelKind kind, const Rat& lo, const Rat& hi, const char* label) {
  const std::vector<Rat> grid = critical_thresholds(mu, k);
  for (const Rat& t : grid) {
    if (!(t > lo && t <= hi)) continue;
    Subset s = kind == LevelKind::Upper    ? upper_level(mu, t)
               : kind == LevelKind::Quasi  ? quasi_level(mu, t, k)
                                           : bracket_level(mu, t, k);
    if (!s.is_empty() && !ff.contains(s))
      return failure(label, {}, {{"t", t}}, s.str(*mu.alg) + " is not a fated filter");
  }
  return {};
}

}  // namespace

Verdict qk_upper_levels_fated(const FuzzySubset& mu, const KParam& k, const FatedFamily& ff) {
  return levels_in_family(mu, k, ff, LevelKind::Upper, Rat(0), k.half(), "thm312");
}

Verdict qk_quasi_levels_fated(const FuzzySubset& mu, const KParam& k, const FatedFamily& ff) {
  return levels_in_family(mu, k, ff, LevelKind::Quasi, k.half(), Rat(1), "thm321");
}

Verdict qk_bracket_levels_fated(const FuzzySubset& mu, const KParam& k, const FatedFamily& ff) {
  return levels_in_family(mu, k, ff, LevelKind::Bracket, Rat(0), Rat(1), "thm324");
}

Verdict deduction_grade_bounds(const FuzzySubset& mu, const KParam& k) {
  const Algebra& A = *mu.alg;
  const int n = A.size();
  const Rat half = k.half();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const Rat rhs = rat_min(rat_min(mu(A.arrow(x, A.arrow(y, z))), mu(A.arrow(x, y))), half);
        if (mu(A.arrow(x, z)) < rhs)
          return failure("prop316.1", {{"x", x}, {"y", y}, {"z", z}},
                         {{"mu(x->z)", mu(A.arrow(x, z))}, {"half", half}});
      }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const ElementId w = A.arrow(A.arrow(x, y), x);
      if (mu(x) < rat_min(mu(w), half))
        return failure("prop316.2", {{"x", x}, {"y", y}, {"w", w}},
                       {{"mu(x)", mu(x)}, {"mu(w)", mu(w)}, {"half", half}});
    }
  return {};
}

Verdict top_below_half_reduction(const FuzzySubset& mu, const KParam& k) {
  const Algebra& A = *mu.alg;
  if (!is_qk_fated(mu, k).pass || mu(A.top()) >= k.half()) {
    Verdict v;
    v.note = "vacuous (guard not met)";
    return v;
  }
  Verdict inner = is_in_in_fated(mu);
  if (!inner.pass) inner.note = "qk holds and mu(1) < (1-k)/2, yet the (in,in) form fails";
  return inner;
}

std::optional<Rat> min_valid_k(const FuzzySubset& mu) {
  // Verdicts can only flip where (1-k)/2 crosses a grade, i.e. at
  // k = 1 - 2*mu(x); between candidates they are constant, and a flip point
  // itself lands on the passing side.
  std::vector<Rat> candidates{Rat(0)};
  for (const Rat& g : image(mu))
    if (g < Rat(1, 2) && g > Rat(0)) candidates.push_back(Rat(1) - Rat(2) * g);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::optional<Rat> least;
  for (const Rat& k : candidates) {
    const bool ok = is_qk_fated(mu, KParam(k)).pass;
    if (ok && !least) least = k;
    if (!ok && least)
      throw std::logic_error("qk verdicts not upward closed in k on the candidate grid");
  }
  return least;
}

}  // namespace r0
