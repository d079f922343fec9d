#include "r0/fuzzy.hpp"

#include <algorithm>
#include <stdexcept>

namespace r0 {

FuzzySubset::FuzzySubset(const Algebra& a, std::vector<Rat> g) : alg(&a), grade(std::move(g)) {
  if (static_cast<int>(grade.size()) != a.size())
    throw std::invalid_argument("fuzzy subset must grade every carrier element");
  for (const Rat& r : grade)
    if (!is_grade(r)) throw std::domain_error("grade outside [0,1]: " + r.str());
}

FuzzyPoint::FuzzyPoint(ElementId x, const Rat& t) : support(x), value(t) {
  if (t <= Rat(0) || t > Rat(1)) throw std::domain_error("fuzzy point value must lie in (0,1]");
}

namespace {

void check_same(const FuzzyPoint& p, const FuzzySubset& mu) {
  if (p.support < 0 || p.support >= mu.size())
    throw std::domain_error("fuzzy point support outside carrier");
}

void check_level_t(const Rat& t) {
  if (t <= Rat(0) || t > Rat(1))
    throw std::domain_error("level threshold must lie in (0,1]");
}

}  // namespace

bool belongs(const FuzzyPoint& p, const FuzzySubset& mu) {
  check_same(p, mu);
  return mu(p.support) >= p.value;
}

bool quasi(const FuzzyPoint& p, const FuzzySubset& mu) {
  return quasi_k(p, mu, KParam::zero());
}

bool quasi_k(const FuzzyPoint& p, const FuzzySubset& mu, const KParam& k) {
  check_same(p, mu);
  return mu(p.support) + p.value + k.k > Rat(1);
}

bool in_vee_qk(const FuzzyPoint& p, const FuzzySubset& mu, const KParam& k) {
  return belongs(p, mu) || quasi_k(p, mu, k);
}

Subset upper_level(const FuzzySubset& mu, const Rat& t) {
  check_level_t(t);
  Subset s = Subset::empty(mu.size());
  for (int x = 0; x < mu.size(); ++x)
    if (mu(x) >= t) s.add(x);
  return s;
}

Subset quasi_level(const FuzzySubset& mu, const Rat& t, const KParam& k) {
  check_level_t(t);
  Subset s = Subset::empty(mu.size());
  for (int x = 0; x < mu.size(); ++x)
    if (mu(x) + t + k.k > Rat(1)) s.add(x);
  return s;
}

Subset bracket_level(const FuzzySubset& mu, const Rat& t, const KParam& k) {
  return upper_level(mu, t) | quasi_level(mu, t, k);
}

std::vector<Rat> threshold_breakpoints(const FuzzySubset& mu, const KParam& k) {
  std::vector<Rat> pts;
  for (const Rat& g : mu.grade) {
    if (g > Rat(0)) pts.push_back(g);
    const Rat q = Rat(1) - k.k - g;  // quasi_k truth for this grade flips here
    if (q > Rat(0) && q <= Rat(1)) pts.push_back(q);
  }
  pts.push_back(k.half());
  pts.push_back(Rat(1));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<Rat> critical_thresholds(const FuzzySubset& mu, const KParam& k) {
  const std::vector<Rat> base = threshold_breakpoints(mu, k);
  std::vector<Rat> pts = base;
  for (size_t i = 0; i + 1 < base.size(); ++i)
    pts.push_back((base[i] + base[i + 1]) / Rat(2));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

FuzzySubset fuzzy_union(const FuzzySubset& mu, const FuzzySubset& nu) {
  if (mu.alg != nu.alg) throw std::domain_error("fuzzy union across different algebras");
  std::vector<Rat> g(mu.grade.size());
  for (size_t i = 0; i < g.size(); ++i) g[i] = rat_max(mu.grade[i], nu.grade[i]);
  return FuzzySubset(*mu.alg, std::move(g));
}

std::vector<Rat> image(const FuzzySubset& mu) {
  std::vector<Rat> v = mu.grade;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<IntervalRow> level_table(const FuzzySubset& mu, const KParam& k, LevelKind kind,
                                     const Rat& lo, const Rat& hi) {
  if (!(Rat(0) <= lo && lo < hi && hi <= Rat(1)))
    throw std::domain_error("level table range must satisfy 0 <= lo < hi <= 1");

  auto eval = [&](const Rat& t) {
    switch (kind) {
      case LevelKind::Upper: return upper_level(mu, t);
      case LevelKind::Quasi: return quasi_level(mu, t, k);
      default: return bracket_level(mu, t, k);
    }
  };

  // Each family is constant on (b, b'] between consecutive breakpoints, so
  // evaluating at right endpoints of the clipped pieces is exact.
  std::vector<Rat> cuts{lo};
  for (const Rat& b : threshold_breakpoints(mu, k))
    if (b > lo && b < hi) cuts.push_back(b);
  cuts.push_back(hi);

  std::vector<IntervalRow> rows;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    IntervalRow row{cuts[i], cuts[i + 1], eval(cuts[i + 1])};
    if (!rows.empty() && rows.back().set == row.set && rows.back().hi == row.lo)
      rows.back().hi = row.hi;  // merge equal adjacent pieces
    else
      rows.push_back(row);
  }
  std::reverse(rows.begin(), rows.end());  // highest thresholds first
  return rows;
}

std::vector<Subset> level_family(const FuzzySubset& mu, const KParam& k, LevelKind kind,
                                 const Rat& lo, const Rat& hi) {
  std::vector<Subset> fam;
  for (const auto& row : level_table(mu, k, kind, lo, hi))
    if (std::find(fam.begin(), fam.end(), row.set) == fam.end()) fam.push_back(row.set);
  return fam;
}

bool same_level_family(const FuzzySubset& mu, const FuzzySubset& nu) {
  if (mu.alg != nu.alg) throw std::domain_error("level family comparison across different algebras");
  auto fam_of = [](const FuzzySubset& f) {
    auto fam = level_family(f, KParam::zero(), LevelKind::Upper, Rat(0), Rat(1));
    std::sort(fam.begin(), fam.end(),
              [](const Subset& a, const Subset& b) { return a.bits < b.bits; });
    return fam;
  };
  return fam_of(mu) == fam_of(nu);
}

}  // namespace r0
