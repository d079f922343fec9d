#include "r0/constructions.hpp"

#include <algorithm>

#include "r0/errors.hpp"
#include "r0/fuzzy_filters.hpp"

namespace r0 {

FilterChain FilterChain::of(const Algebra& alg, std::vector<Subset> members) {
  if (members.empty()) throw PreconditionError("chain must have at least one member");
  for (const auto& f : members)
    if (!is_fated_filter(alg, f).pass())
      throw PreconditionError("chain member " + f.str(alg) + " is not a fated filter");
  for (size_t i = 0; i + 1 < members.size(); ++i)
    if (!(members[i].subset_of(members[i + 1]) && members[i] != members[i + 1]))
      throw PreconditionError("chain inclusions must be strict: " + members[i].str(alg) +
                              " vs " + members[i + 1].str(alg));
  if (members.back() != Subset::full(alg.size()))
    throw PreconditionError("chain must end at the full carrier");
  return FilterChain{&alg, std::move(members)};
}

IndexedFamily IndexedFamily::of(const Algebra& alg, std::vector<std::pair<Rat, Subset>> entries,
                                const KParam& k) {
  if (entries.empty()) throw PreconditionError("family must be nonempty");
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 0; i + 1 < entries.size(); ++i)
    if (entries[i].first == entries[i + 1].first)
      throw PreconditionError("duplicate family index " + entries[i].first.str());
  const Rat half = k.half();
  Subset covered = Subset::empty(alg.size());
  for (const auto& [t, f] : entries) {
    if (!(t > Rat(0) && t <= half))
      throw PreconditionError("family index " + t.str() + " outside (0,(1-k)/2]");
    if (!is_fated_filter(alg, f).pass())
      throw PreconditionError("family member " + f.str(alg) + " is not a fated filter");
    covered = covered | f;
  }
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = 0; j < entries.size(); ++j) {
      if (i == j) continue;
      const bool less = entries[i].first < entries[j].first;
      const bool strict_super =
          entries[j].second.subset_of(entries[i].second) && entries[j].second != entries[i].second;
      if (less != strict_super)
        throw PreconditionError("family order mismatch at indices " + entries[i].first.str() +
                                " and " + entries[j].first.str() +
                                ": s < t must hold exactly when F_t is strictly inside F_s");
    }
  if (covered != Subset::full(alg.size()))
    throw PreconditionError("family union does not cover the carrier");
  return IndexedFamily{&alg, std::move(entries)};
}

FuzzySubset two_level(const Algebra& alg, const Subset& f, const Rat& t1, const Rat& t2,
                      const KParam& k) {
  const Rat half = k.half();
  if (!(t1 >= half && t1 <= Rat(1)))
    throw std::domain_error("t1 must lie in [(1-k)/2, 1]");
  if (!(t2 > Rat(0) && t2 < half))
    throw std::domain_error("t2 must lie in (0, (1-k)/2)");
  if (!is_fated_filter(alg, f).pass())
    throw PreconditionError("two-level base " + f.str(alg) + " is not a fated filter");
  std::vector<Rat> g(alg.size());
  for (int x = 0; x < alg.size(); ++x) g[x] = f.contains(x) ? t1 : t2;
  return FuzzySubset(alg, std::move(g));
}

FuzzySubset chain_construction(const FilterChain& chain, const KParam& k, const Rat& t0,
                               const Rat& t, const std::vector<Rat>& levels) {
  const Algebra& alg = *chain.alg;
  const Rat half = k.half();
  const size_t n_blocks = chain.members.size() - 1;
  if (levels.size() != n_blocks)
    throw std::domain_error("need exactly one level grade per proper chain step");
  if (t0 < half) throw std::domain_error("t0 must be at least (1-k)/2");
  if (t > Rat(1) || t < t0) throw std::domain_error("t must lie in [t0, 1]");
  for (size_t i = 0; i < levels.size(); ++i) {
    if (!(levels[i] > Rat(0) && levels[i] < half))
      throw std::domain_error("level grades must lie in (0, (1-k)/2)");
    if (i > 0 && !(levels[i] < levels[i - 1]))
      throw std::domain_error("level grades must be strictly decreasing");
  }

  const ElementId one = alg.top();
  std::vector<Rat> g(alg.size());
  for (int x = 0; x < alg.size(); ++x) {
    if (x == one) { g[x] = t0; continue; }
    if (chain.members.front().contains(x)) { g[x] = t; continue; }
    for (size_t i = 1; i < chain.members.size(); ++i)
      if (chain.members[i].contains(x) && !chain.members[i - 1].contains(x)) {
        g[x] = levels[i - 1];
        break;
      }
  }
  return FuzzySubset(alg, std::move(g));
}

FuzzySubset chain_construction(const FilterChain& chain, const KParam& k) {
  const Rat half = k.half();
  const size_t n_blocks = chain.members.size() - 1;
  std::vector<Rat> levels;
  for (size_t i = 1; i <= n_blocks; ++i)
    levels.push_back(half * Rat(static_cast<long long>(n_blocks + 1 - i),
                                static_cast<long long>(n_blocks + 1)));
  return chain_construction(chain, k, half, half, levels);
}

FuzzySubset sup_construction(const IndexedFamily& family, const KParam& k) {
  const Algebra& alg = *family.alg;
  (void)k;  // the family is validated against k at construction
  std::vector<Rat> g(alg.size(), Rat(0));
  for (const auto& [t, f] : family.entries)
    for (int x = 0; x < alg.size(); ++x)
      if (f.contains(x)) g[x] = rat_max(g[x], t);
  return FuzzySubset(alg, std::move(g));
}

std::pair<FuzzySubset, FuzzySubset> decompose(const FuzzySubset& mu, const KParam& k) {
  const Algebra& alg = *mu.alg;
  if (!is_qk_fated(mu, k).pass)
    throw PreconditionError("decompose input is not a qk fuzzy fated filter");

  const Rat half = k.half();
  std::vector<Rat> sub;  // distinct grades below (1-k)/2, descending
  for (const Rat& g : image(mu))
    if (g < half) sub.push_back(g);
  std::sort(sub.begin(), sub.end(), [](const Rat& a, const Rat& b) { return b < a; });

  if (sub.size() < 2)
    throw PreconditionError("decompose needs at least two distinct grades below (1-k)/2, found " +
                            std::to_string(sub.size()));
  if (sub.size() == 2)
    throw PreconditionError(
        "decompose with exactly two sub-threshold grades has no interior value "
        "(the second component needs a third grade to bound it); refusing to "
        "improvise a variant construction");

  const size_t r = sub.size();
  std::vector<Subset> bracket(r);
  for (size_t i = 0; i < r; ++i) bracket[i] = bracket_level(mu, sub[i], k);
  const Subset base = bracket_level(mu, half, k);
  const Rat interior = (sub[1] + sub[2]) / Rat(2);

  // First component: constant on each bracket-level block.
  std::vector<Rat> nu(alg.size());
  for (int x = 0; x < alg.size(); ++x)
    for (size_t i = 0; i < r; ++i)
      if (bracket[i].contains(x) && (i == 0 || !bracket[i - 1].contains(x))) {
        nu[x] = sub[i];
        break;
      }

  // Second component: keeps mu above the threshold, uses the interior value
  // on the merged first two blocks, then follows the remaining blocks.
  std::vector<Rat> ga(alg.size());
  for (int x = 0; x < alg.size(); ++x) {
    if (base.contains(x)) { ga[x] = mu(x); continue; }
    if (bracket[1].contains(x)) { ga[x] = interior; continue; }
    for (size_t i = 2; i < r; ++i)
      if (bracket[i].contains(x) && !bracket[i - 1].contains(x)) {
        ga[x] = sub[i];
        break;
      }
  }

  return {FuzzySubset(alg, std::move(nu)), FuzzySubset(alg, std::move(ga))};
}

}  // namespace r0
