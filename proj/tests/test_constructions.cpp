#include <doctest.h>

#include <algorithm>

#include "r0/errors.hpp"
#include "r0/suite.hpp"
#include "support.hpp"

using namespace r0;
using testsupport::by_names;

namespace {

const Algebra& chain_alg() {
  static const Algebra alg = fixture_example34();
  return alg;
}

const Algebra& cube() {
  static const Algebra alg = fixture_cube8();
  return alg;
}

}  // namespace

TEST_CASE("two-level outputs pass both checkers across a parameter grid") {
  for (const Algebra* alg : {&chain_alg(), &cube()}) {
    const FatedFamily ff = enumerate_fated_filters(*alg);
    for (const Rat& kr : {Rat(0), Rat(1, 5), Rat(2, 5)}) {
      const KParam k(kr);
      const Rat half = k.half();
      for (const Subset& f : ff.members)
        for (const Rat& t1 : {half, Rat(1)})
          for (const Rat& t2 : {half / Rat(2), half * Rat(7, 8)}) {
            const FuzzySubset mu = two_level(*alg, f, t1, t2, k);
            CHECK(is_qk_fated(mu, k).pass);
            CHECK(is_qk_fated_pointwise(mu, k).pass);
            CHECK(upper_level(mu, half) == f);
            CHECK(upper_level(mu, t2) == Subset::full(alg->size()));
          }
    }
  }
}

TEST_CASE("two-level validates its grade ranges and base") {
  const Algebra& alg = chain_alg();
  const KParam k(Rat(1, 5));
  const Subset good = by_names(alg, {"c", "d", "1"});
  CHECK_THROWS_AS(two_level(alg, good, Rat(1), k.half(), k), std::domain_error);   // t2 = half
  CHECK_THROWS_AS(two_level(alg, good, Rat(1, 5), Rat(1, 10), k), std::domain_error);  // t1 < half
  CHECK_THROWS_AS(two_level(alg, by_names(alg, {"d", "1"}), Rat(1), Rat(1, 5), k),
                  PreconditionError);  // not fated
}

TEST_CASE("a two-valued subset over a non-fated base fails the checker") {
  const Algebra& alg = chain_alg();
  const KParam k(Rat(1, 5));
  std::vector<Rat> g(alg.size(), Rat(1, 5));
  for (const char* n : {"d", "1"}) g[*alg.find(n)] = Rat(1);
  const FuzzySubset forced(alg, std::move(g));
  CHECK_FALSE(is_qk_fated(forced, k).pass);
  CHECK_FALSE(is_qk_fated_pointwise(forced, k).pass);
}

TEST_CASE("chain construction reproduces the chain as its level family") {
  const Algebra& alg = cube();
  const FilterChain chain = FilterChain::of(
      alg, {by_names(alg, {"1"}), by_names(alg, {"ab", "1"}),
            by_names(alg, {"a", "ab", "ac", "1"}), Subset::full(alg.size())});
  for (const Rat& kr : {Rat(0), Rat(3, 10)}) {
    const KParam k(kr);
    const FuzzySubset mu = chain_construction(chain, k);
    CHECK(is_qk_fated(mu, k).pass);
    CHECK(is_qk_fated_pointwise(mu, k).pass);
    CHECK(upper_level(mu, k.half()) == chain.members.front());
    auto fam = level_family(mu, k, LevelKind::Upper, Rat(0), k.half());
    CHECK(fam.size() == chain.members.size());
    for (const Subset& f : chain.members)
      CHECK(std::find(fam.begin(), fam.end(), f) != fam.end());
  }
}

TEST_CASE("chain construction on the two-element algebra pins the base at half") {
  const Algebra b2 = fixture_bool2();
  Subset top_only = Subset::empty(2);
  top_only.add(b2.top());
  const FilterChain chain = FilterChain::of(b2, {top_only, Subset::full(2)});
  const FuzzySubset mu = chain_construction(chain, KParam::zero());
  CHECK(upper_level(mu, Rat(1, 2)) == top_only);
  CHECK(is_qk_fated(mu, KParam::zero()).pass);
  auto fam = level_family(mu, KParam::zero(), LevelKind::Upper, Rat(0), Rat(1, 2));
  CHECK(fam.size() == 2);
}

TEST_CASE("degenerate one-member chain gives a two-valued passing subset") {
  const Algebra& alg = chain_alg();
  const FilterChain chain = FilterChain::of(alg, {Subset::full(alg.size())});
  const KParam k(Rat(1, 5));
  const FuzzySubset mu = chain_construction(chain, k);
  CHECK(is_qk_fated(mu, k).pass);
  CHECK(image(mu).size() <= 2);
}

TEST_CASE("chain validation rejects junk") {
  const Algebra& alg = chain_alg();
  const Subset cd1 = by_names(alg, {"c", "d", "1"});
  const Subset full = Subset::full(alg.size());
  CHECK_THROWS_AS(FilterChain::of(alg, {by_names(alg, {"1"}), full}), PreconditionError);
  CHECK_THROWS_AS(FilterChain::of(alg, {cd1}), PreconditionError);          // does not end at L
  CHECK_THROWS_AS(FilterChain::of(alg, {full, cd1}), PreconditionError);    // not increasing
  CHECK_THROWS_AS(FilterChain::of(alg, {cd1, cd1, full}), PreconditionError);  // not strict

  const FilterChain chain = FilterChain::of(alg, {cd1, full});
  const KParam k(Rat(0));
  CHECK_THROWS_AS(chain_construction(chain, k, Rat(1, 4), Rat(1, 2), {Rat(1, 4)}),
                  std::domain_error);  // t0 below half
  CHECK_THROWS_AS(chain_construction(chain, k, Rat(1, 2), Rat(1, 4), {Rat(1, 4)}),
                  std::domain_error);  // t below t0
  CHECK_THROWS_AS(chain_construction(chain, k, Rat(1, 2), Rat(1, 2), {Rat(1, 2)}),
                  std::domain_error);  // level not below half
  CHECK_THROWS_AS(chain_construction(chain, k, Rat(1, 2), Rat(1, 2), {}), std::domain_error);
}

TEST_CASE("sup construction over nested families") {
  const Algebra& alg = chain_alg();
  const KParam k(Rat(0));
  const Subset cd1 = by_names(alg, {"c", "d", "1"});
  const Subset full = Subset::full(alg.size());

  const IndexedFamily single = IndexedFamily::of(alg, {{Rat(1, 3), full}}, k);
  const FuzzySubset constant = sup_construction(single, k);
  for (int x = 0; x < alg.size(); ++x) CHECK(constant(x) == Rat(1, 3));
  CHECK(is_qk_fated(constant, k).pass);

  const IndexedFamily pair =
      IndexedFamily::of(alg, {{Rat(1, 5), full}, {Rat(2, 5), cd1}}, k);
  const FuzzySubset mu = sup_construction(pair, k);
  for (int x = 0; x < alg.size(); ++x)
    CHECK(mu(x) == (cd1.contains(x) ? Rat(2, 5) : Rat(1, 5)));
  CHECK(is_qk_fated(mu, k).pass);
  CHECK(is_qk_fated_pointwise(mu, k).pass);
}

TEST_CASE("sup construction on the two-element algebra with the least filter") {
  const Algebra b2 = fixture_bool2();
  Subset top_only = Subset::empty(2);
  top_only.add(b2.top());
  const KParam k(Rat(0));
  const FuzzySubset mu = sup_construction(
      IndexedFamily::of(b2, {{Rat(1, 4), Subset::full(2)}, {Rat(1, 2), top_only}}, k), k);
  CHECK(mu(b2.top()) == Rat(1, 2));
  CHECK(mu(b2.bottom()) == Rat(1, 4));
  CHECK(is_qk_fated(mu, k).pass);
}

TEST_CASE("family validation enforces the paper hypotheses") {
  const Algebra& alg = chain_alg();
  const KParam k(Rat(0));
  const Subset cd1 = by_names(alg, {"c", "d", "1"});
  const Subset full = Subset::full(alg.size());
  // union must cover the carrier
  CHECK_THROWS_AS(IndexedFamily::of(alg, {{Rat(1, 4), cd1}}, k), PreconditionError);
  // indices must be inside (0,(1-k)/2]
  CHECK_THROWS_AS(IndexedFamily::of(alg, {{Rat(3, 4), full}}, k), PreconditionError);
  // strictly smaller index must mean strictly bigger member
  CHECK_THROWS_AS(IndexedFamily::of(alg, {{Rat(1, 5), full}, {Rat(2, 5), full}}, k),
                  PreconditionError);
  CHECK_THROWS_AS(IndexedFamily::of(alg, {{Rat(1, 5), cd1}, {Rat(2, 5), full}}, k),
                  PreconditionError);
  // members must be fated
  CHECK_THROWS_AS(IndexedFamily::of(alg, {{Rat(1, 5), full}, {Rat(2, 5), by_names(alg, {"d", "1"})}}, k),
                  PreconditionError);
  // duplicate indices
  CHECK_THROWS_AS(IndexedFamily::of(alg, {{Rat(1, 5), full}, {Rat(1, 5), cd1}}, k),
                  PreconditionError);
}

TEST_CASE("decomposition splits the cube fixture as expected") {
  const Algebra& alg = cube();
  const FuzzySubset mu = fixture_mu_cube8(alg);
  const KParam k(Rat(0));
  REQUIRE(is_qk_fated(mu, k).pass);

  const auto [nu, ga] = decompose(mu, k);

  // frozen component values, derived by hand from the block construction
  auto expect_nu = testsupport::grades(
      alg, {{"1", Rat(3, 8)}, {"ab", Rat(3, 8)}, {"a", Rat(1, 4)}, {"ac", Rat(1, 4)},
            {"0", Rat(1, 8)}, {"b", Rat(1, 8)}, {"c", Rat(1, 8)}, {"bc", Rat(1, 8)}});
  auto expect_ga = testsupport::grades(
      alg, {{"1", Rat(1, 2)}, {"ab", Rat(3, 16)}, {"a", Rat(3, 16)}, {"ac", Rat(3, 16)},
            {"0", Rat(1, 8)}, {"b", Rat(1, 8)}, {"c", Rat(1, 8)}, {"bc", Rat(1, 8)}});
  CHECK(nu == expect_nu);
  CHECK(ga == expect_ga);

  CHECK(is_qk_fated(nu, k).pass);
  CHECK(is_qk_fated_pointwise(nu, k).pass);
  CHECK(is_qk_fated(ga, k).pass);
  CHECK(is_qk_fated_pointwise(ga, k).pass);
  CHECK(image(nu).size() >= 2);
  CHECK(image(ga).size() >= 2);
  CHECK_FALSE(same_level_family(nu, ga));
  CHECK(fuzzy_union(nu, ga) == mu);
}

TEST_CASE("decomposition preconditions") {
  // only one grade below (1-k)/2 = 3/10 on the monotone fixture at k = 2/5
  CHECK_THROWS_AS(decompose(fixture_mu315(chain_alg()), KParam(Rat(2, 5))), PreconditionError);
  // not qk fated at all
  CHECK_THROWS_AS(decompose(fixture_mu315(chain_alg()), KParam(Rat(3, 10))), PreconditionError);

  // exactly two sub-threshold grades: the interior value has no bounds
  const Algebra& alg = cube();
  const FilterChain chain = FilterChain::of(
      alg, {by_names(alg, {"1"}), by_names(alg, {"a", "ab", "ac", "1"}), Subset::full(alg.size())});
  const FuzzySubset two = chain_construction(chain, KParam::zero());
  REQUIRE(is_qk_fated(two, KParam::zero()).pass);
  CHECK_THROWS_AS(decompose(two, KParam::zero()), PreconditionError);
}

TEST_CASE("decomposition round-trips from a constructed chain subject") {
  const Algebra& alg = cube();
  const FilterChain chain = FilterChain::of(
      alg, {by_names(alg, {"1"}), by_names(alg, {"ab", "1"}),
            by_names(alg, {"a", "ab", "ac", "1"}), Subset::full(alg.size())});
  for (const Rat& kr : {Rat(0), Rat(1, 5), Rat(1, 2)}) {
    const KParam k(kr);
    const FuzzySubset mu = chain_construction(chain, k);
    const auto [nu, ga] = decompose(mu, k);
    CAPTURE(kr.str());
    CHECK(is_qk_fated(nu, k).pass);
    CHECK(is_qk_fated(ga, k).pass);
    CHECK(image(nu).size() >= 2);
    CHECK(image(ga).size() >= 2);
    CHECK_FALSE(same_level_family(nu, ga));
    CHECK(fuzzy_union(nu, ga) == mu);
  }
}
