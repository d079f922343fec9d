#include "r0/suite.hpp"

#include <algorithm>

#include "r0/errors.hpp"
#include "r0/render.hpp"

namespace r0 {

namespace {

std::vector<ElementId> ids(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

Algebra fixture_example34() {
  // 6-element chain 0 < a < b < c < d < 1 with the nilpotent-minimum tables.
  std::vector<std::string> names{"0", "a", "b", "c", "d", "1"};
  std::vector<ElementId> neg = ids({5, 4, 3, 2, 1, 0});
  std::vector<ElementId> arrow = {
      5, 5, 5, 5, 5, 5,   // 0 ->
      4, 5, 5, 5, 5, 5,   // a ->
      3, 3, 5, 5, 5, 5,   // b ->
      2, 2, 2, 5, 5, 5,   // c ->
      1, 1, 2, 3, 5, 5,   // d ->
      0, 1, 2, 3, 4, 5,   // 1 ->
  };
  return Algebra(std::move(names), std::move(neg), std::move(arrow));
}

Algebra fixture_bool2() {
  std::vector<std::string> names{"0", "1"};
  std::vector<ElementId> neg = ids({1, 0});
  std::vector<ElementId> arrow = {1, 1, 0, 1};
  return Algebra(std::move(names), std::move(neg), std::move(arrow));
}

Algebra fixture_cube8() {
  // Three-atom Boolean cube; ids carry the masks below, arrow is material
  // implication. Every Boolean algebra is an R0-algebra and every filter of
  // one is fated ((x->y)->x = x there), so fated filters form 4-chains here.
  std::vector<std::string> names{"0", "a", "b", "c", "ab", "ac", "bc", "1"};
  const int mask[8] = {0, 1, 2, 4, 3, 5, 6, 7};
  int of_mask[8];
  for (int i = 0; i < 8; ++i) of_mask[mask[i]] = i;
  std::vector<ElementId> neg(8);
  std::vector<ElementId> arrow(64);
  for (int i = 0; i < 8; ++i) {
    neg[i] = of_mask[~mask[i] & 7];
    for (int j = 0; j < 8; ++j) arrow[i * 8 + j] = of_mask[(~mask[i] | mask[j]) & 7];
  }
  return Algebra(std::move(names), std::move(neg), std::move(arrow));
}

namespace {

FuzzySubset by_name(const Algebra& alg, std::initializer_list<std::pair<const char*, Rat>> vals) {
  std::vector<Rat> g(alg.size(), Rat(-1));
  for (const auto& [name, r] : vals) g[*alg.find(name)] = r;
  return FuzzySubset(alg, std::move(g));
}

}  // namespace

FuzzySubset fixture_mu34(const Algebra& alg) {
  return by_name(alg, {{"1", Rat(7, 10)}, {"c", Rat(3, 5)}, {"d", Rat(2, 5)},
                       {"0", Rat(1, 5)}, {"a", Rat(1, 5)}, {"b", Rat(1, 5)}});
}

FuzzySubset fixture_nu34(const Algebra& alg) {
  return by_name(alg, {{"c", Rat(4, 5)}, {"d", Rat(4, 5)}, {"1", Rat(7, 10)},
                       {"0", Rat(3, 10)}, {"a", Rat(3, 10)}, {"b", Rat(3, 10)}});
}

FuzzySubset fixture_mu315(const Algebra& alg) {
  return by_name(alg, {{"d", Rat(9, 10)}, {"c", Rat(7, 10)}, {"1", Rat(3, 10)},
                       {"0", Rat(1, 10)}, {"a", Rat(1, 10)}, {"b", Rat(1, 10)}});
}

FuzzySubset fixture_mu_cube8(const Algebra& alg) {
  return by_name(alg, {{"1", Rat(1, 2)}, {"ab", Rat(3, 8)}, {"a", Rat(1, 4)},
                       {"ac", Rat(1, 4)}, {"0", Rat(1, 8)}, {"b", Rat(1, 8)},
                       {"c", Rat(1, 8)}, {"bc", Rat(1, 8)}});
}

std::vector<std::vector<Subset>> maximal_chains(const FatedFamily& ff, const Algebra& alg) {
  const Subset full = Subset::full(alg.size());
  std::vector<std::vector<Subset>> out;
  std::vector<Subset> cur;

  auto minimal_above = [&](const Subset& m) {
    std::vector<Subset> next;
    for (const auto& cand : ff.members) {
      if (!(m.subset_of(cand)) || cand == m) continue;
      bool minimal = true;
      for (const auto& mid : ff.members)
        if (m.subset_of(mid) && mid.subset_of(cand) && mid != m && mid != cand) {
          minimal = false;
          break;
        }
      if (minimal) next.push_back(cand);
    }
    return next;
  };

  auto dfs = [&](auto&& self, const Subset& m) -> void {
    cur.push_back(m);
    if (m == full) {
      out.push_back(cur);
    } else {
      for (const auto& nxt : minimal_above(m)) self(self, nxt);
    }
    cur.pop_back();
  };

  for (const auto& m : ff.members) {
    bool minimal = true;
    for (const auto& below : ff.members)
      if (below.subset_of(m) && below != m) {
        minimal = false;
        break;
      }
    if (minimal) dfs(dfs, m);
  }
  return out;
}

bool witness_reevaluates(const FuzzySubset& mu, const KParam& k, const Verdict& v) {
  if (v.pass) return false;
  const Algebra& A = *mu.alg;
  const ElementId one = A.top();
  const Rat half = k.half();

  auto elem = [&](const char* role) -> ElementId {
    for (const auto& [r, id] : v.elems)
      if (r == std::string(role)) return id;
    throw std::logic_error(std::string("witness lacks element role ") + role);
  };
  auto grade_of = [&](const char* role) -> Rat {
    for (const auto& [r, g] : v.grades)
      if (r == std::string(role)) return g;
    throw std::logic_error(std::string("witness lacks grade role ") + role);
  };
  auto hypothesis_target = [&]() {
    // w = a -> ((x->y) -> x), recomputed rather than trusted
    return A.arrow(elem("a"), A.arrow(A.arrow(elem("x"), elem("y")), elem("x")));
  };

  const std::string& c = v.condition;
  if (c == "c1") {
    const ElementId x = elem("x"), y = elem("y");
    return mu(A.odot(x, y)) < rat_min(mu(x), mu(y));
  }
  if (c == "c2") {
    const ElementId x = elem("x"), y = elem("y");
    return A.leq(x, y) && mu(x) > mu(y);
  }
  if (c == "c3" || c == "in-in.1" || c == "strong.c3") return mu(one) < mu(elem("x"));
  if (c == "c4") {
    const ElementId x = elem("x"), y = elem("y");
    return mu(y) < rat_min(mu(A.arrow(x, y)), mu(x));
  }
  if (c == "in-in.2") {
    const ElementId w = hypothesis_target();
    return mu(elem("x")) < rat_min(mu(w), mu(elem("a")));
  }
  if (c == "qk.1") return mu(one) < rat_min(mu(elem("x")), half);
  if (c == "qk.2") {
    const ElementId w = hypothesis_target();
    return mu(elem("x")) < rat_min(rat_min(mu(w), mu(elem("a"))), half);
  }
  if (c == "qk.pt1" || c == "in-in.pt1") {
    const Rat t = grade_of("t");
    const FuzzyPoint xt(elem("x"), t), onet(one, t);
    if (!belongs(xt, mu)) return false;  // not a genuine antecedent
    return c == "qk.pt1" ? !in_vee_qk(onet, mu, k) : !belongs(onet, mu);
  }
  if (c == "qk.pt2" || c == "strong.2" || c == "in-in.pt2") {
    const Rat t = grade_of("t"), s = grade_of("s");
    const ElementId w = hypothesis_target();
    if (!belongs(FuzzyPoint(w, t), mu) || !belongs(FuzzyPoint(elem("a"), s), mu)) return false;
    const FuzzyPoint xm(elem("x"), rat_min(t, s));
    return c == "in-in.pt2" ? !belongs(xm, mu) : !in_vee_qk(xm, mu, k);
  }
  if (c == "thm312") {
    const Subset s = upper_level(mu, grade_of("t"));
    return !s.is_empty() && !is_fated_filter(A, s).pass();
  }
  if (c == "thm321") {
    const Subset s = quasi_level(mu, grade_of("t"), k);
    return !s.is_empty() && !is_fated_filter(A, s).pass();
  }
  if (c == "thm324") {
    const Subset s = bracket_level(mu, grade_of("t"), k);
    return !s.is_empty() && !is_fated_filter(A, s).pass();
  }
  if (c == "prop316.1") {
    const ElementId x = elem("x"), y = elem("y"), z = elem("z");
    return mu(A.arrow(x, z)) <
           rat_min(rat_min(mu(A.arrow(x, A.arrow(y, z))), mu(A.arrow(x, y))), half);
  }
  if (c == "prop316.2") {
    const ElementId x = elem("x"), y = elem("y");
    return mu(x) < rat_min(mu(A.arrow(A.arrow(x, y), x)), half);
  }
  return false;
}

namespace {

std::string subject_text(const FuzzySubset& mu) {
  std::string out = "(";
  for (int x = 0; x < mu.size(); ++x) {
    if (x) out += " ";
    out += mu.alg->name(x) + "=" + mu(x).str();
  }
  return out + ")";
}

// Indexes into the claim vector (which keeps growing, so references into it
// would dangle).
struct ClaimScope {
  SuiteResult* res;
  size_t idx;

  Claim& c() const { return res->claims[idx]; }
  void require(bool ok, const std::string& detail) const {
    ++c().cases;
    if (!ok && c().pass) {
      c().pass = false;
      c().detail = detail;
    }
  }
};

struct Suite {
  const Algebra& A;
  const SuiteConfig& cfg;
  SuiteResult result;

  ClaimScope claim(const std::string& label) {
    Claim c;
    c.label = label;
    result.claims.push_back(std::move(c));
    return ClaimScope{&result, result.claims.size() - 1};
  }

  void fixtures();
  void crisp_claims();
  void sweep();
  void constructions();
  void decompose_fixture();
};

void Suite::fixtures() {
  const FuzzySubset mu34 = fixture_mu34(A);
  const FuzzySubset nu34 = fixture_nu34(A);
  const FuzzySubset mu315 = fixture_mu315(A);
  const KParam k15(Rat(1, 5)), k25(Rat(2, 5)), k310(Rat(3, 10));

  const ClaimScope ax = claim("example algebra satisfies the axiom block");
  ax.require(A.verify_axioms().pass(), "axiom block failed");
  const ClaimScope dv = claim("example algebra satisfies the derived laws");
  dv.require(A.verify_derived().pass(), "derived laws failed");

  const ClaimScope s1 = claim("mu34 is a strong qk fuzzy fated filter at k=2/5");
  s1.require(is_strong_qk_fated(mu34, k25).pass, verdict_line(A, "strong-qk", is_strong_qk_fated(mu34, k25)));
  const ClaimScope s2 = claim("mu34 passes qk at k=2/5 through both routes");
  s2.require(is_qk_fated(mu34, k25).pass && is_qk_fated_pointwise(mu34, k25).pass,
             "qk routes disagree or fail");
  const ClaimScope s3 = claim("nu34 passes qk at k=1/5");
  s3.require(is_qk_fated(nu34, k15).pass, verdict_line(A, "qk", is_qk_fated(nu34, k15)));
  const ClaimScope s4 = claim("nu34 is not strong at k=1/5");
  s4.require(!is_strong_qk_fated(nu34, k15).pass, "strong unexpectedly passed");
  const ClaimScope s5 = claim("nu34 is not an (in,in) fuzzy fated filter");
  s5.require(!is_in_in_fated(nu34).pass && !is_in_in_fated_pointwise(nu34).pass,
             "(in,in) unexpectedly passed");
  const ClaimScope s6 = claim("mu315 passes qk at k=2/5");
  s6.require(is_qk_fated(mu315, k25).pass, verdict_line(A, "qk", is_qk_fated(mu315, k25)));
  const ClaimScope s7 = claim("mu315 fails qk at k=3/10");
  s7.require(!is_qk_fated(mu315, k310).pass, "qk unexpectedly passed");
  const ClaimScope s8 = claim("least passing k for mu315 is 2/5");
  {
    auto least = min_valid_k(mu315);
    s8.require(least && *least == Rat(2, 5), least ? "got " + least->str() : "got none");
  }

  const ClaimScope tab = claim("mu315 upper-level table on (0,7/20] matches the printed rows");
  {
    const auto rows = level_table(mu315, k310, LevelKind::Upper, Rat(0), Rat(7, 20));
    std::vector<IntervalRow> expect{
        {Rat(3, 10), Rat(7, 20), Subset::of(ids({3, 4}), 6)},
        {Rat(1, 10), Rat(3, 10), Subset::of(ids({3, 4, 5}), 6)},
        {Rat(0), Rat(1, 10), Subset::full(6)},
    };
    bool ok = rows.size() == expect.size();
    for (size_t i = 0; ok && i < rows.size(); ++i)
      ok = rows[i].lo == expect[i].lo && rows[i].hi == expect[i].hi && rows[i].set == expect[i].set;
    std::string got;
    for (const auto& r : rows) got += row_text(A, r) + "; ";
    tab.require(ok, "table was: " + got);
  }

  const ClaimScope qt = claim("nu34 quasi-level table at k=1/5 matches and its rows are fated filters");
  {
    const auto rows = level_table(nu34, k15, LevelKind::Quasi, k15.half(), Rat(1));
    bool ok = rows.size() == 2 && rows[0].lo == Rat(1, 2) && rows[0].hi == Rat(1) &&
              rows[0].set == Subset::full(6) && rows[1].lo == Rat(2, 5) &&
              rows[1].hi == Rat(1, 2) && rows[1].set == Subset::of(ids({3, 4, 5}), 6);
    for (const auto& r : rows) ok = ok && is_fated_filter(A, r.set).pass();
    std::string got;
    for (const auto& r : rows) got += row_text(A, r) + "; ";
    qt.require(ok, "table was: " + got);
  }

  const ClaimScope nc = claim("nu34 passes the quasi-level necessary condition yet is not strong");
  {
    const FatedFamily ff = enumerate_fated_filters(A, cfg.enum_bound);
    nc.require(qk_quasi_levels_fated(nu34, k15, ff).pass && !is_strong_qk_fated(nu34, k15).pass,
               "non-converse witness lost");
  }
}

void Suite::crisp_claims() {
  const ClaimScope cl = claim("crisp families match the reference scan and close under intersection");
  const auto filters = enumerate_filters(A, cfg.enum_bound);
  const auto filters_naive = enumerate_filters_naive(A, cfg.enum_bound);
  cl.require(filters == filters_naive, "pruned filter scan deviates from the naive scan");
  const FatedFamily fated = enumerate_fated_filters(A, cfg.enum_bound);
  const FatedFamily fated_naive = enumerate_fated_filters_naive(A, cfg.enum_bound);
  cl.require(fated.members == fated_naive.members,
             "pruned fated scan deviates from the naive scan");
  cl.require(fated.contains(Subset::full(A.size())), "full carrier missing from fated family");
  cl.require(fated.closed_under_intersection(), "fated family not closed under intersection");
  for (const auto& f : fated.members) {
    cl.require(is_filter(A, f).pass(),
               "fated member " + f.str(A) + " is not a filter");
    cl.require(is_fated_via_deduction(A, f).pass() && is_fated_via_peirce(A, f).pass(),
               "fated member " + f.str(A) + " rejected by a lemma route");
  }
  for (const auto& f : filters) {
    const bool direct = is_fated_filter(A, f).pass();
    cl.require(direct == is_fated_via_deduction(A, f).pass() &&
                   direct == is_fated_via_peirce(A, f).pass(),
               "lemma routes disagree on filter " + f.str(A));
  }
}

void Suite::sweep() {
  if (cfg.sweep <= 0) return;
  const FatedFamily ff = enumerate_fated_filters(A, cfg.enum_bound);
  SubjectGen gen(cfg.seed, cfg.den_bound);

  const ClaimScope eq = claim("pointwise, inequality, upper-level and bracket-level routes agree");
  const ClaimScope ii = claim("(in,in) pointwise and inequality routes agree");
  const ClaimScope ffp = claim("fuzzy-filter closure and modus-ponens forms agree");
  const ClaimScope lvl = claim("fuzzy filter iff every nonempty upper level is a filter");
  const ClaimScope imp1 = claim("(in,in) implies qk at every grid k");
  const ClaimScope imp2 = claim("strong implies qk");
  const ClaimScope imp3 = claim("qk implies the quasi-level necessary condition");
  const ClaimScope imp4 = claim("qk implies the deduction grade bounds");
  const ClaimScope mono = claim("qk passing is monotone along the k grid");
  const ClaimScope cor = claim("top-below-half reduction holds");
  const ClaimScope wit = claim("failing witnesses re-evaluate to violations");
  const ClaimScope nest = claim("upper levels shrink and quasi levels grow with t; bracket is their union");
  const ClaimScope kmono = claim("quasi levels grow with k");
  const ClaimScope snd = claim("level sets are constant between consecutive breakpoints");

  // Designed subjects keep the implication antecedents inhabited (random
  // grades almost never satisfy the (in,in) or strong conditions); the rest
  // of the sweep is random.
  std::vector<FuzzySubset> designed;
  for (const Rat& c : {Rat(0), Rat(1, 2), Rat(1)})
    designed.push_back(FuzzySubset(A, std::vector<Rat>(A.size(), c)));
  for (const auto& f : ff.members) {
    std::vector<Rat> g(A.size(), Rat(0));
    for (int x = 0; x < A.size(); ++x)
      if (f.contains(x)) g[x] = Rat(1);
    designed.push_back(FuzzySubset(A, std::move(g)));
    designed.push_back(two_level(A, f, Rat(3, 4), Rat(1, 4), KParam::zero()));
  }
  if (A.same_tables(fixture_example34())) {
    designed.push_back(fixture_mu34(A));
    designed.push_back(fixture_nu34(A));
    designed.push_back(fixture_mu315(A));
  }

  for (long long i = 0; i < cfg.sweep + static_cast<long long>(designed.size()); ++i) {
    const FuzzySubset mu =
        i < static_cast<long long>(designed.size()) ? designed[static_cast<size_t>(i)] : gen.next(A);
    const std::string tag = "subject #" + std::to_string(i) + " " + subject_text(mu);

    const Verdict in_iq = is_in_in_fated(mu);
    const Verdict in_pw = is_in_in_fated_pointwise(mu);
    ii.require(in_iq.pass == in_pw.pass,
               tag + ": " + verdict_line(A, "ineq", in_iq) + " / " + verdict_line(A, "pointwise", in_pw));

    const Verdict fd = is_fuzzy_filter(mu);
    const Verdict fm = is_fuzzy_filter_mp(mu);
    ffp.require(fd.pass == fm.pass,
                tag + ": " + verdict_line(A, "c1c2", fd) + " / " + verdict_line(A, "c3c4", fm));
    {
      bool levels_ok = true;
      for (const Rat& t : critical_thresholds(mu, KParam::zero())) {
        const Subset u = upper_level(mu, t);
        if (!u.is_empty() && !is_filter(A, u).pass()) { levels_ok = false; break; }
      }
      lvl.require(fd.pass == levels_ok, tag + ": level characterization disagrees");
    }
    if (!fd.pass) wit.require(witness_reevaluates(mu, KParam::zero(), fd),
                              tag + ": c1/c2 witness does not re-evaluate");
    if (!in_iq.pass) wit.require(witness_reevaluates(mu, KParam::zero(), in_iq),
                                 tag + ": in-in witness does not re-evaluate");

    std::vector<bool> pass_at;
    for (const Rat& kr : cfg.k_grid) {
      const KParam k(kr);
      const Verdict iq = is_qk_fated(mu, k);
      const Verdict pw = is_qk_fated_pointwise(mu, k);
      const Verdict lv = qk_upper_levels_fated(mu, k, ff);
      const Verdict bk = qk_bracket_levels_fated(mu, k, ff);
      const std::string ktag = tag + " k=" + kr.str();
      eq.require(iq.pass == pw.pass && iq.pass == lv.pass && iq.pass == bk.pass,
                 ktag + ": " + verdict_line(A, "ineq", iq) + " / " + verdict_line(A, "pointwise", pw) +
                     " / " + verdict_line(A, "levels", lv) + " / " + verdict_line(A, "bracket", bk));
      if (in_iq.pass) imp1.require(iq.pass, ktag + ": (in,in) holds but qk fails");
      const Verdict st = is_strong_qk_fated(mu, k);
      if (st.pass) imp2.require(iq.pass, ktag + ": strong holds but qk fails");
      if (iq.pass) {
        imp3.require(qk_quasi_levels_fated(mu, k, ff).pass, ktag + ": quasi-level condition fails");
        imp4.require(deduction_grade_bounds(mu, k).pass, ktag + ": grade bounds fail");
      }
      const Verdict cv = top_below_half_reduction(mu, k);
      cor.require(cv.pass, ktag + ": " + verdict_line(A, "reduction", cv));
      for (const Verdict* v : {&iq, &pw, &st})
        if (!v->pass)
          wit.require(witness_reevaluates(mu, k, *v),
                      ktag + ": witness for " + v->condition + " does not re-evaluate");
      pass_at.push_back(iq.pass);
    }
    for (size_t a = 0; a + 1 < pass_at.size(); ++a)
      mono.require(!pass_at[a] || pass_at[a + 1],
                   tag + ": passes at k=" + cfg.k_grid[a].str() + " but fails at k=" +
                       cfg.k_grid[a + 1].str());

    // Level machinery invariants, one grid k per subject.
    const KParam k(cfg.k_grid[static_cast<size_t>(i) % cfg.k_grid.size()]);
    const auto crit = critical_thresholds(mu, k);
    for (size_t a = 0; a + 1 < crit.size(); ++a) {
      const Rat &t1 = crit[a], &t2 = crit[a + 1];
      nest.require(upper_level(mu, t2).subset_of(upper_level(mu, t1)),
                   tag + ": upper levels fail to nest");
      nest.require(quasi_level(mu, t1, k).subset_of(quasi_level(mu, t2, k)),
                   tag + ": quasi levels fail to nest");
    }
    for (const Rat& t : crit)
      nest.require(bracket_level(mu, t, k) == (upper_level(mu, t) | quasi_level(mu, t, k)),
                   tag + ": bracket level is not the union");
    if (cfg.k_grid.size() > 1) {
      const KParam k2(cfg.k_grid[(static_cast<size_t>(i) + 1) % cfg.k_grid.size()]);
      const KParam &lo = k.k <= k2.k ? k : k2, &hi = k.k <= k2.k ? k2 : k;
      for (const Rat& t : crit)
        kmono.require(quasi_level(mu, t, lo).subset_of(quasi_level(mu, t, hi)),
                      tag + ": quasi level shrank as k grew");
    }
    {
      const auto brk = threshold_breakpoints(mu, k);
      std::vector<Rat> edges{Rat(0)};
      edges.insert(edges.end(), brk.begin(), brk.end());
      const size_t gap = gen.raw() % (edges.size() - 1);
      const Rat lo = edges[gap], hi = edges[gap + 1];
      const long long j = 1 + static_cast<long long>(gen.raw() % 63);
      const Rat t = lo + (hi - lo) * Rat(j, 64);
      const Rat mid = (lo + hi) / Rat(2);
      snd.require(upper_level(mu, t) == upper_level(mu, mid) &&
                      quasi_level(mu, t, k) == quasi_level(mu, mid, k),
                  tag + ": level set changed inside a breakpoint gap at t=" + t.str());
    }
  }
}

void Suite::constructions() {
  const FatedFamily ff = enumerate_fated_filters(A, cfg.enum_bound);

  const ClaimScope tl = claim("two-level outputs pass both qk routes with the expected levels");
  for (const Rat& kr : cfg.k_grid) {
    const KParam k(kr);
    const Rat half = k.half();
    for (const auto& f : ff.members)
      for (const Rat& t1 : {half, (half + Rat(1)) / Rat(2), Rat(1)})
        for (const Rat& t2 : {half / Rat(2), half * Rat(3, 4)}) {
          const FuzzySubset mu = two_level(A, f, t1, t2, k);
          tl.require(is_qk_fated(mu, k).pass && is_qk_fated_pointwise(mu, k).pass,
                     "two-level output fails a qk route for base " + f.str(A));
          const auto rows = level_table(mu, k, LevelKind::Upper, Rat(0), half);
          const bool full_base = f == Subset::full(A.size());
          bool ok;
          if (full_base)
            ok = rows.size() == 1 && rows[0].set == f && rows[0].lo == Rat(0) && rows[0].hi == half;
          else
            ok = rows.size() == 2 && rows[0].set == f && rows[0].lo == t2 && rows[0].hi == half &&
                 rows[1].set == Subset::full(A.size()) && rows[1].lo == Rat(0) && rows[1].hi == t2;
          tl.require(ok, "two-level upper levels are wrong for base " + f.str(A));
        }
  }

  const ClaimScope tr = claim("two-level rejects out-of-range grades and non-fated bases");
  {
    const KParam k(Rat(1, 5));
    const Rat half = k.half();
    bool threw = false;
    try {
      two_level(A, Subset::full(A.size()), Rat(1), half, k);  // t2 not below half
    } catch (const std::domain_error&) { threw = true; }
    tr.require(threw, "t2 >= (1-k)/2 was accepted");
    Subset bad = Subset::empty(A.size());
    bad.add(A.top());
    if (!ff.contains(bad)) {
      threw = false;
      try {
        two_level(A, bad, Rat(1), half / Rat(2), k);
      } catch (const PreconditionError&) { threw = true; }
      tr.require(threw, "non-fated base was accepted");
    }
  }

  const ClaimScope ch = claim("chain outputs reproduce the chain as their upper-level family");
  const ClaimScope sp = claim("sup outputs over nested families pass both qk routes");
  for (const Rat& kr : cfg.k_grid) {
    const KParam k(kr);
    const Rat half = k.half();
    auto chains = maximal_chains(ff, A);
    chains.push_back({Subset::full(A.size())});  // degenerate single-block chain
    for (const auto& members : chains) {
      const FilterChain chain = FilterChain::of(A, members);
      const FuzzySubset mu = chain_construction(chain, k);
      ch.require(is_qk_fated(mu, k).pass && is_qk_fated_pointwise(mu, k).pass,
                 "chain output fails a qk route");
      ch.require(upper_level(mu, half) == members.front(),
                 "upper level at (1-k)/2 is not the chain base");
      auto fam = level_family(mu, k, LevelKind::Upper, Rat(0), half);
      std::vector<Subset> expect = members;
      std::sort(fam.begin(), fam.end(), [](const Subset& x, const Subset& y) { return x.bits < y.bits; });
      std::sort(expect.begin(), expect.end(), [](const Subset& x, const Subset& y) { return x.bits < y.bits; });
      ch.require(fam == expect, "upper-level family differs from the chain");

      // Reverse the chain into an indexed family: smaller index, bigger member.
      std::vector<std::pair<Rat, Subset>> entries;
      for (size_t i = 0; i < members.size(); ++i)
        entries.emplace_back(half * Rat(static_cast<long long>(i) + 1,
                                        static_cast<long long>(members.size())),
                             members[members.size() - 1 - i]);
      const FuzzySubset sup = sup_construction(IndexedFamily::of(A, entries, k), k);
      sp.require(is_qk_fated(sup, k).pass && is_qk_fated_pointwise(sup, k).pass,
                 "sup output fails a qk route");
    }
  }
}

void Suite::decompose_fixture() {
  // The decomposition needs three distinct grades below (1-k)/2, hence a
  // 4-chain of fated filters; run it on the built-in cube whatever the
  // algebra under test is.
  const ClaimScope dc = claim("decomposition round-trip on the cube fixture");
  const Algebra cube = fixture_cube8();
  const FuzzySubset mu = fixture_mu_cube8(cube);
  const KParam k = KParam::zero();
  dc.require(is_qk_fated(mu, k).pass, "cube fixture subject is not qk fated");
  const auto [nu, ga] = decompose(mu, k);
  dc.require(is_qk_fated(nu, k).pass && is_qk_fated_pointwise(nu, k).pass,
             "first component fails a qk route");
  dc.require(is_qk_fated(ga, k).pass && is_qk_fated_pointwise(ga, k).pass,
             "second component fails a qk route");
  dc.require(image(nu).size() >= 2 && image(ga).size() >= 2, "components are not proper");
  dc.require(!same_level_family(nu, ga), "components are equivalent");
  dc.require(fuzzy_union(nu, ga) == mu, "union does not reproduce the subject");
}

}  // namespace

SuiteResult run_paper_suite(const Algebra& alg, const SuiteConfig& cfg) {
  Suite suite{alg, cfg, {}};
  if (alg.same_tables(fixture_example34())) suite.fixtures();
  suite.crisp_claims();
  suite.sweep();
  suite.constructions();
  suite.decompose_fixture();
  return std::move(suite.result);
}

}  // namespace r0
