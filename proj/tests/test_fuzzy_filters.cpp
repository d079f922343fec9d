#include <doctest.h>

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

FuzzySubset constant(const Algebra& alg, const Rat& c) {
  return FuzzySubset(alg, std::vector<Rat>(alg.size(), c));
}

FuzzySubset characteristic(const Algebra& alg, const Subset& s) {
  std::vector<Rat> g(alg.size(), Rat(0));
  for (int x = 0; x < alg.size(); ++x)
    if (s.contains(x)) g[x] = Rat(1);
  return FuzzySubset(alg, std::move(g));
}

}  // namespace

TEST_CASE("fuzzy filter forms and their witnesses") {
  for (const Rat& c : {Rat(0), Rat(1, 3), Rat(1)}) {
    CHECK(is_fuzzy_filter(constant(chain(), c)).pass);
    CHECK(is_fuzzy_filter_mp(constant(chain(), c)).pass);
  }
  for (const Subset& f : enumerate_filters(chain()))
    CHECK(is_fuzzy_filter(characteristic(chain(), f)).pass);

  const Verdict v = is_fuzzy_filter(fixture_mu34(chain()));
  CHECK_FALSE(v.pass);
  CHECK(v.condition == "c2");
  REQUIRE(v.elems.size() == 2);
  CHECK(chain().name(v.elems[0].second) == "c");
  CHECK(chain().name(v.elems[1].second) == "d");
}

TEST_CASE("fuzzy filter routes agree and match the level characterization") {
  SubjectGen gen(101, 10);
  for (int i = 0; i < 2000; ++i) {
    const FuzzySubset mu = gen.next(chain());
    const bool def_route = is_fuzzy_filter(mu).pass;
    CHECK(def_route == is_fuzzy_filter_mp(mu).pass);
    bool levels_ok = true;
    for (const Rat& t : critical_thresholds(mu, KParam::zero())) {
      const Subset u = upper_level(mu, t);
      if (!u.is_empty() && !is_filter(chain(), u).pass()) { levels_ok = false; break; }
    }
    CHECK(def_route == levels_ok);
  }
}

TEST_CASE("(in,in) fated filters") {
  CHECK(is_in_in_fated(characteristic(chain(), by_names(chain(), {"c", "d", "1"}))).pass);
  CHECK(is_in_in_fated_pointwise(characteristic(chain(), by_names(chain(), {"c", "d", "1"}))).pass);
  CHECK(is_in_in_fated(constant(chain(), Rat(2, 7))).pass);
  CHECK_FALSE(is_in_in_fated(fixture_nu34(chain())).pass);
  CHECK_FALSE(is_in_in_fated_pointwise(fixture_nu34(chain())).pass);
}

TEST_CASE("qk fated filter fixture verdicts through every route") {
  const FatedFamily ff = enumerate_fated_filters(chain());
  struct Row {
    FuzzySubset mu;
    Rat k;
    bool expect;
  };
  const std::vector<Row> rows{
      {fixture_mu34(chain()), Rat(2, 5), true},
      {fixture_nu34(chain()), Rat(1, 5), true},
      {fixture_mu315(chain()), Rat(2, 5), true},
      {fixture_mu315(chain()), Rat(3, 10), false},
  };
  for (const auto& row : rows) {
    const KParam k(row.k);
    CAPTURE(row.k.str());
    CHECK(is_qk_fated(row.mu, k).pass == row.expect);
    CHECK(is_qk_fated_pointwise(row.mu, k).pass == row.expect);
    CHECK(qk_upper_levels_fated(row.mu, k, ff).pass == row.expect);
    CHECK(qk_bracket_levels_fated(row.mu, k, ff).pass == row.expect);
  }
}

TEST_CASE("strong variant fixture verdicts") {
  CHECK(is_strong_qk_fated(fixture_mu34(chain()), KParam(Rat(2, 5))).pass);
  const Verdict v = is_strong_qk_fated(fixture_nu34(chain()), KParam(Rat(1, 5)));
  CHECK_FALSE(v.pass);
  CHECK(v.condition == "strong.c3");
  CHECK(is_strong_qk_fated(constant(chain(), Rat(1)), KParam(Rat(1, 5))).pass);
}

TEST_CASE("level-route failure pinpoints a non-fated level") {
  const FatedFamily ff = enumerate_fated_filters(chain());
  const Verdict v = qk_upper_levels_fated(fixture_mu315(chain()), KParam(Rat(3, 10)), ff);
  CHECK_FALSE(v.pass);
  CHECK(v.condition == "thm312");
  REQUIRE(v.grades.size() == 1);
  const Rat t = v.grades[0].second;
  CHECK(t > Rat(3, 10));
  CHECK(t <= Rat(7, 20));
  CHECK(upper_level(fixture_mu315(chain()), t) == by_names(chain(), {"c", "d"}));
}

TEST_CASE("all four characterizations agree on random subjects over two algebras") {
  const std::vector<Rat> ks{Rat(0), Rat(1, 5), Rat(3, 10), Rat(2, 5), Rat(1, 2)};
  for (const Algebra& alg : {fixture_example34(), fixture_bool2()}) {
    const FatedFamily ff = enumerate_fated_filters(alg);
    SubjectGen gen(42, 10);
    for (int i = 0; i < 2000; ++i) {
      const FuzzySubset mu = gen.next(alg);
      for (const Rat& kr : ks) {
        const KParam k(kr);
        const bool iq = is_qk_fated(mu, k).pass;
        CAPTURE(alg.size());
        CAPTURE(kr.str());
        CHECK(iq == is_qk_fated_pointwise(mu, k).pass);
        CHECK(iq == qk_upper_levels_fated(mu, k, ff).pass);
        CHECK(iq == qk_bracket_levels_fated(mu, k, ff).pass);
      }
    }
  }
}

TEST_CASE("necessary condition and derived bounds follow from qk") {
  const FatedFamily ff = enumerate_fated_filters(chain());
  SubjectGen gen(43, 10);
  for (int i = 0; i < 2000; ++i) {
    const FuzzySubset mu = gen.next(chain());
    const KParam k(Rat(static_cast<long long>(gen.raw() % 10), 10));
    if (is_qk_fated(mu, k).pass) {
      CHECK(qk_quasi_levels_fated(mu, k, ff).pass);
      CHECK(deduction_grade_bounds(mu, k).pass);
    }
  }
}

TEST_CASE("the quasi-level condition is not sufficient (non-converse witness)") {
  const FatedFamily ff = enumerate_fated_filters(chain());
  const KParam k(Rat(1, 5));
  const FuzzySubset nu = fixture_nu34(chain());
  CHECK(qk_quasi_levels_fated(nu, k, ff).pass);
  CHECK_FALSE(is_strong_qk_fated(nu, k).pass);
}

TEST_CASE("k = 0 reduction agrees with a hand-rolled 1/2-bounded check") {
  SubjectGen gen(44, 10);
  for (int i = 0; i < 1000; ++i) {
    const FuzzySubset mu = gen.next(chain());
    const Algebra& A = chain();
    bool expect = true;
    for (int x = 0; x < A.size() && expect; ++x)
      expect = mu(A.top()) >= rat_min(mu(x), Rat(1, 2));
    for (int x = 0; x < A.size() && expect; ++x)
      for (int a = 0; a < A.size() && expect; ++a)
        for (int y = 0; y < A.size() && expect; ++y) {
          const ElementId w = A.arrow(a, A.arrow(A.arrow(x, y), x));
          expect = mu(x) >= rat_min(rat_min(mu(w), mu(a)), Rat(1, 2));
        }
    CHECK(is_qk_fated(mu, KParam::zero()).pass == expect);
  }
}

TEST_CASE("passing is monotone in k and min_valid_k finds the least grid point") {
  SubjectGen gen(45, 10);
  const std::vector<Rat> grid{Rat(0), Rat(1, 10), Rat(1, 5), Rat(3, 10), Rat(2, 5),
                              Rat(1, 2), Rat(3, 5), Rat(7, 10), Rat(4, 5), Rat(9, 10)};
  for (int i = 0; i < 1000; ++i) {
    const FuzzySubset mu = gen.next(chain());
    bool seen_pass = false;
    for (const Rat& kr : grid) {
      const bool ok = is_qk_fated(mu, KParam(kr)).pass;
      if (seen_pass) CHECK(ok);
      seen_pass = seen_pass || ok;
    }
    const auto least = min_valid_k(mu);
    if (least) {
      CHECK(is_qk_fated(mu, KParam(*least)).pass);
      // nothing on the candidate grid below it passes, and candidates are the
      // only flip points, so nothing below passes at all
      for (const Rat& kr : grid)
        if (kr < *least) CHECK_FALSE(is_qk_fated(mu, KParam(kr)).pass);
    } else {
      for (const Rat& kr : grid) CHECK_FALSE(is_qk_fated(mu, KParam(kr)).pass);
    }
  }
}

TEST_CASE("min_valid_k on the fixtures") {
  CHECK(*min_valid_k(fixture_mu315(chain())) == Rat(2, 5));
  CHECK(*min_valid_k(constant(chain(), Rat(1))) == Rat(0));
  // top graded 0 while something else is positive: no k can work
  const FuzzySubset hopeless = grades(chain(), {{"0", Rat(1)}});
  CHECK_FALSE(min_valid_k(hopeless).has_value());
}

TEST_CASE("reduction to (in,in) when the top grade sits below half") {
  // guard not met: vacuous pass
  CHECK(top_below_half_reduction(fixture_mu315(chain()), KParam(Rat(2, 5))).pass);
  SubjectGen gen(46, 10);
  for (int i = 0; i < 10000; ++i) {
    const FuzzySubset mu = gen.next(chain());
    const KParam k(Rat(static_cast<long long>(gen.raw() % 10), 10));
    CHECK(top_below_half_reduction(mu, k).pass);
  }
}

TEST_CASE("failing witnesses re-evaluate to genuine violations") {
  SubjectGen gen(47, 10);
  long long failures = 0;
  for (int i = 0; i < 2000; ++i) {
    const FuzzySubset mu = gen.next(chain());
    const KParam k(Rat(static_cast<long long>(gen.raw() % 10), 10));
    for (const Verdict& v : {is_qk_fated(mu, k), is_qk_fated_pointwise(mu, k),
                             is_strong_qk_fated(mu, k), is_in_in_fated(mu),
                             is_in_in_fated_pointwise(mu), is_fuzzy_filter(mu),
                             is_fuzzy_filter_mp(mu), deduction_grade_bounds(mu, k)}) {
      if (v.pass) continue;
      ++failures;
      CAPTURE(v.condition);
      CHECK(witness_reevaluates(mu, k, v));
    }
  }
  CHECK(failures > 1000);  // the sweep must actually exercise failures
}
