#include <doctest.h>

#include <algorithm>

#include "r0/suite.hpp"
#include "support.hpp"

using namespace r0;
using testsupport::by_names;
using testsupport::grades;

namespace {

const Algebra& chain() {
  static const Algebra alg = fixture_example34();
  return alg;
}

}  // namespace

TEST_CASE("membership relations on the fixture subjects") {
  const FuzzySubset mu = fixture_mu34(chain());
  const ElementId c = *chain().find("c"), d = *chain().find("d");
  CHECK(belongs(FuzzyPoint(c, Rat(3, 5)), mu));        // boundary is non-strict
  CHECK_FALSE(belongs(FuzzyPoint(d, Rat(1, 2)), mu));  // 2/5 < 1/2

  const FuzzySubset nu = fixture_nu34(chain());
  CHECK(quasi_k(FuzzyPoint(c, Rat(1, 2)), nu, KParam(Rat(1, 5))));  // 4/5+1/2+1/5 > 1

  // exact boundary: mu(x)+t+k = 1 is not quasi-coincident
  const FuzzySubset flat = grades(chain(), {{"0", Rat(3, 10)}, {"a", Rat(3, 10)},
                                            {"b", Rat(3, 10)}, {"c", Rat(3, 10)},
                                            {"d", Rat(3, 10)}, {"1", Rat(3, 10)}});
  CHECK_FALSE(quasi_k(FuzzyPoint(c, Rat(1, 2)), flat, KParam(Rat(1, 5))));
  CHECK(quasi_k(FuzzyPoint(c, Rat(51, 100)), flat, KParam(Rat(1, 5))));

  CHECK_THROWS_AS(FuzzyPoint(c, Rat(0)), std::domain_error);
  CHECK_THROWS_AS(FuzzyPoint(c, Rat(2)), std::domain_error);
}

TEST_CASE("quasi with k = 0 is plain quasi-coincidence") {
  SubjectGen gen(11, 10);
  for (int i = 0; i < 200; ++i) {
    const FuzzySubset mu = gen.next(chain());
    const Rat t = [&] {
      Rat r = gen.next_grade();
      return r == Rat(0) ? Rat(1) : r;
    }();
    for (int x = 0; x < chain().size(); ++x) {
      const FuzzyPoint p(x, t);
      CHECK(quasi(p, mu) == quasi_k(p, mu, KParam::zero()));
      CHECK(in_vee_qk(p, mu, KParam::zero()) == (belongs(p, mu) || quasi(p, mu)));
    }
  }
}

TEST_CASE("upper level sets of the monotone fixture") {
  const FuzzySubset mu = fixture_mu315(chain());
  CHECK(upper_level(mu, Rat(1, 5)) == by_names(chain(), {"c", "d", "1"}));
  CHECK(upper_level(mu, Rat(8, 25)) == by_names(chain(), {"c", "d"}));  // t = 0.32
  CHECK(upper_level(mu, Rat(1, 10)) == Subset::full(6));
  CHECK(upper_level(mu, Rat(1)) == Subset::empty(6));
  CHECK_THROWS_AS(upper_level(mu, Rat(0)), std::domain_error);
  CHECK_THROWS_AS(quasi_level(mu, Rat(0), KParam::zero()), std::domain_error);
}

TEST_CASE("quasi level sets match the non-strong fixture rows") {
  const FuzzySubset nu = fixture_nu34(chain());
  const KParam k(Rat(1, 5));
  CHECK(quasi_level(nu, Rat(7, 10), k) == Subset::full(6));
  CHECK(quasi_level(nu, Rat(9, 20), k) == by_names(chain(), {"c", "d", "1"}));
}

TEST_CASE("bracket level is exactly the union") {
  SubjectGen gen(5, 10);
  for (int i = 0; i < 100; ++i) {
    const FuzzySubset mu = gen.next(chain());
    const KParam k(Rat(static_cast<long long>(gen.raw() % 10), 10));
    for (const Rat& t : critical_thresholds(mu, k))
      CHECK(bracket_level(mu, t, k) == (upper_level(mu, t) | quasi_level(mu, t, k)));
  }
}

TEST_CASE("critical thresholds contain the grades, flips, half and one") {
  const FuzzySubset ones = grades(chain(), {{"0", Rat(1)}, {"a", Rat(1)}, {"b", Rat(1)},
                                            {"c", Rat(1)}, {"d", Rat(1)}, {"1", Rat(1)}});
  const auto base = critical_thresholds(ones, KParam::zero());
  CHECK(std::count(base.begin(), base.end(), Rat(1, 2)) == 1);
  CHECK(std::count(base.begin(), base.end(), Rat(1)) == 1);
  CHECK(std::count(base.begin(), base.end(), Rat(3, 4)) == 1);  // midpoint

  const auto crit = critical_thresholds(fixture_mu315(chain()), KParam(Rat(2, 5)));
  for (const Rat& expect : {Rat(1, 10), Rat(3, 10), Rat(7, 10), Rat(9, 10), Rat(1, 2), Rat(1)})
    CHECK(std::count(crit.begin(), crit.end(), expect) == 1);
  CHECK(std::is_sorted(crit.begin(), crit.end()));
}

TEST_CASE("level sets are constant between consecutive breakpoints") {
  SubjectGen gen(23, 10);
  for (int i = 0; i < 1000; ++i) {
    const FuzzySubset mu = gen.next(chain());
    const KParam k(Rat(static_cast<long long>(gen.raw() % 10), 10));
    const auto brk = threshold_breakpoints(mu, k);
    std::vector<Rat> edges{Rat(0)};
    edges.insert(edges.end(), brk.begin(), brk.end());
    const size_t gap = gen.raw() % (edges.size() - 1);
    const Rat lo = edges[gap], hi = edges[gap + 1];
    const Rat t = lo + (hi - lo) * Rat(1 + static_cast<long long>(gen.raw() % 63), 64);
    const Rat mid = (lo + hi) / Rat(2);
    CHECK(upper_level(mu, t) == upper_level(mu, mid));
    CHECK(quasi_level(mu, t, k) == quasi_level(mu, mid, k));
  }
}

TEST_CASE("levels nest monotonically in t and k") {
  SubjectGen gen(31, 10);
  for (int i = 0; i < 200; ++i) {
    const FuzzySubset mu = gen.next(chain());
    const KParam k1(Rat(static_cast<long long>(gen.raw() % 5), 10));
    const KParam k2(k1.k + Rat(static_cast<long long>(gen.raw() % 5), 10));
    const auto crit = critical_thresholds(mu, k1);
    for (size_t a = 0; a + 1 < crit.size(); ++a) {
      CHECK(upper_level(mu, crit[a + 1]).subset_of(upper_level(mu, crit[a])));
      CHECK(quasi_level(mu, crit[a], k1).subset_of(quasi_level(mu, crit[a + 1], k1)));
    }
    for (const Rat& t : crit)
      CHECK(quasi_level(mu, t, k1).subset_of(quasi_level(mu, t, k2)));
  }
}

TEST_CASE("union, image and the level-family comparison") {
  const FuzzySubset mu = fixture_mu34(chain());
  CHECK(fuzzy_union(mu, mu) == mu);
  CHECK(image(mu) == std::vector<Rat>{Rat(1, 5), Rat(2, 5), Rat(3, 5), Rat(7, 10)});

  CHECK(same_level_family(mu, mu));
  // same image, different level families (values placed on different blocks)
  const FuzzySubset swapped = grades(chain(), {{"1", Rat(7, 10)}, {"d", Rat(3, 5)},
                                               {"c", Rat(2, 5)}, {"0", Rat(1, 5)},
                                               {"a", Rat(1, 5)}, {"b", Rat(1, 5)}});
  CHECK_FALSE(same_level_family(mu, swapped));

  // scaling all grades preserves nothing pointwise but the family can match:
  // two-valued subsets over the same block have the same family shape
  const FuzzySubset lowered = grades(chain(), {{"1", Rat(3, 5)}, {"c", Rat(3, 5)},
                                               {"d", Rat(1, 5)}, {"0", Rat(1, 5)},
                                               {"a", Rat(1, 5)}, {"b", Rat(1, 5)}});
  const FuzzySubset raised = grades(chain(), {{"1", Rat(9, 10)}, {"c", Rat(9, 10)},
                                              {"d", Rat(1, 2)}, {"0", Rat(1, 2)},
                                              {"a", Rat(1, 2)}, {"b", Rat(1, 2)}});
  CHECK(same_level_family(lowered, raised));
}

TEST_CASE("interval tables carry maximal constant intervals, highest first") {
  const FuzzySubset mu = fixture_mu315(chain());
  const auto rows = level_table(mu, KParam(Rat(3, 10)), LevelKind::Upper, Rat(0), Rat(1));
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].lo == Rat(9, 10));
  CHECK(rows[0].hi == Rat(1));
  CHECK(rows[0].set == Subset::empty(6));
  CHECK(rows[2].lo == Rat(3, 10));
  CHECK(rows[2].hi == Rat(7, 10));
  CHECK(rows[2].set == by_names(chain(), {"c", "d"}));
  CHECK(rows[4].lo == Rat(0));
  CHECK(rows[4].hi == Rat(1, 10));
  CHECK(rows[4].set == Subset::full(6));
  for (size_t i = 0; i + 1 < rows.size(); ++i) {
    CHECK(rows[i].lo == rows[i + 1].hi);          // contiguous
    CHECK_FALSE(rows[i].set == rows[i + 1].set);  // maximal
  }

  const auto clipped = level_table(mu, KParam(Rat(3, 10)), LevelKind::Upper, Rat(0), Rat(7, 20));
  REQUIRE(clipped.size() == 3);
  CHECK(clipped[0].lo == Rat(3, 10));
  CHECK(clipped[0].hi == Rat(7, 20));
  CHECK(clipped[0].set == by_names(chain(), {"c", "d"}));
}

TEST_CASE("grades outside the unit interval are rejected") {
  CHECK_THROWS_AS(grades(chain(), {{"0", Rat(3, 2)}}), std::domain_error);
  std::vector<Rat> bad(6, Rat(0));
  bad[0] = Rat(-1, 2);
  CHECK_THROWS_AS(FuzzySubset(chain(), bad), std::domain_error);
}
