#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "r0/errors.hpp"
#include "r0/io.hpp"
#include "r0/render.hpp"
#include "r0/suite.hpp"

using nlohmann::json;

namespace {

// Exit codes: 0 pass, 1 semantic fail, 2 input error, 3 capacity.
enum Exit { kPass = 0, kFail = 1, kInput = 2, kCapacity = 3 };

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

r0::Rat parse_rat_arg(const std::string& text, const char* what) {
  auto r = r0::Rat::parse(text);
  if (!r) throw std::domain_error(std::string("cannot parse ") + what + " '" + text + "'");
  return *r;
}

r0::KParam parse_k(const std::string& text) { return r0::KParam(parse_rat_arg(text, "k")); }

r0::Algebra load_valid_algebra(const std::string& path) {
  r0::Algebra alg = r0::load_algebra_file(path);
  const r0::AxiomReport rep = alg.verify_axioms();
  if (!rep.pass()) {
    const r0::CheckItem* first = rep.first_fail();
    throw std::domain_error("algebra in '" + path + "' is invalid (" + first->label + ")");
  }
  return alg;
}

int cmd_verify_algebra(const std::string& path, const Options& opt) {
  const r0::Algebra alg = r0::load_algebra_file(path);
  const r0::AxiomReport axioms = alg.verify_axioms();
  r0::CheckReport derived;
  if (axioms.pass()) derived = alg.verify_derived();
  const bool ok = axioms.pass() && derived.pass();

  if (opt.json()) {
    json j{{"command", "verify-algebra"}, {"path", path}, {"n", alg.size()}, {"pass", ok}};
    json elems = json::array();
    for (int i = 0; i < alg.size(); ++i) elems.push_back(alg.name(i));
    j["elements"] = elems;
    if (alg.has_order() && alg.has_lattice()) {
      j["bottom"] = alg.name(alg.bottom());
      j["top"] = alg.name(alg.top());
    }
    j["axioms"] = r0::report_json(alg, axioms);
    if (axioms.pass()) j["derived"] = r0::report_json(alg, derived);
    std::cout << j.dump(2) << "\n";
    return ok ? kPass : kFail;
  }

  std::cout << "== verify-algebra " << path << " ==\n";
  std::cout << "n=" << alg.size() << " elements:";
  for (int i = 0; i < alg.size(); ++i) std::cout << " " << alg.name(i);
  std::cout << "\n";
  if (alg.has_order() && alg.has_lattice())
    std::cout << "bottom=" << alg.name(alg.bottom()) << " top=" << alg.name(alg.top()) << "\n";
  for (const auto& item : axioms.items) std::cout << r0::check_line(alg, item) << "\n";
  if (axioms.pass())
    for (const auto& item : derived.items) std::cout << r0::check_line(alg, item) << "\n";
  std::cout << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kPass : kFail;
}

int cmd_enum(const std::string& path, bool fated, bool oracle, int bound, const Options& opt) {
  const r0::Algebra alg = load_valid_algebra(path);
  std::vector<r0::Subset> members;
  std::vector<r0::Subset> reference;
  if (fated) {
    members = r0::enumerate_fated_filters(alg, bound).members;
    if (oracle) reference = r0::enumerate_fated_filters_naive(alg, bound).members;
  } else {
    members = r0::enumerate_filters(alg, bound);
    if (oracle) reference = r0::enumerate_filters_naive(alg, bound);
  }
  const r0::FatedFamily as_family{members};
  const bool closed = as_family.closed_under_intersection();
  const bool oracle_ok = !oracle || members == reference;
  const bool ok = closed && oracle_ok;

  if (opt.json()) {
    json j{{"command", "enum"},
           {"path", path},
           {"kind", fated ? "fated-filters" : "filters"},
           {"count", members.size()},
           {"closed_under_intersection", closed},
           {"pass", ok}};
    json arr = json::array();
    for (const auto& m : members) arr.push_back(m.str(alg));
    j["members"] = arr;
    if (oracle) j["oracle_match"] = oracle_ok;
    std::cout << j.dump(2) << "\n";
    return ok ? kPass : kFail;
  }

  std::cout << "== enum " << path << " (" << (fated ? "fated filters" : "filters") << ") ==\n";
  for (const auto& m : members) std::cout << m.str(alg) << "\n";
  std::cout << "count: " << members.size() << "\n";
  std::cout << "closed-under-intersection: " << (closed ? "PASS" : "FAIL") << "\n";
  if (oracle) std::cout << "oracle-match: " << (oracle_ok ? "PASS" : "FAIL") << "\n";
  return ok ? kPass : kFail;
}

const std::vector<std::string> kNotions{"fuzzy-filter", "in-in", "qk", "strong-qk",
                                        "thm312",       "thm321", "thm324", "prop316"};

r0::Verdict run_notion(const std::string& notion, const r0::FuzzySubset& mu, const r0::KParam& k,
                       const r0::Algebra& alg, int bound,
                       std::optional<r0::FatedFamily>& cache) {
  auto family = [&]() -> const r0::FatedFamily& {
    if (!cache) cache = r0::enumerate_fated_filters(alg, bound);
    return *cache;
  };
  if (notion == "fuzzy-filter") return r0::is_fuzzy_filter(mu);
  if (notion == "in-in") return r0::is_in_in_fated(mu);
  if (notion == "qk") return r0::is_qk_fated(mu, k);
  if (notion == "strong-qk") return r0::is_strong_qk_fated(mu, k);
  if (notion == "thm312") return r0::qk_upper_levels_fated(mu, k, family());
  if (notion == "thm321") return r0::qk_quasi_levels_fated(mu, k, family());
  if (notion == "thm324") return r0::qk_bracket_levels_fated(mu, k, family());
  if (notion == "prop316") return r0::deduction_grade_bounds(mu, k);
  throw std::domain_error("unknown notion '" + notion + "'");
}

int cmd_check(const std::string& alg_path, const std::string& fz_path, const std::string& k_text,
              const std::string& notion, bool all, int bound, const Options& opt) {
  const r0::Algebra alg = load_valid_algebra(alg_path);
  const r0::FuzzySubset mu = r0::load_fuzzy_file(fz_path, alg);
  const r0::KParam k = parse_k(k_text);
  std::optional<r0::FatedFamily> ff;

  if (!all) {
    const r0::Verdict v = run_notion(notion, mu, k, alg, bound, ff);
    if (opt.json()) {
      json j{{"command", "check"}, {"algebra", alg_path}, {"subset", fz_path},
             {"k", k.k.str()}, {"result", v.pass ? "pass" : "fail"}};
      j["verdict"] = r0::verdict_json(alg, notion, v);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "== check notion=" << notion << " k=" << k.k.str() << " algebra=" << alg_path
                << " subset=" << fz_path << " ==\n";
      std::cout << r0::verdict_line(alg, notion, v) << "\n";
      std::cout << "result: " << (v.pass ? "PASS" : "FAIL") << "\n";
    }
    return v.pass ? kPass : kFail;
  }

  std::vector<std::pair<std::string, r0::Verdict>> verdicts;
  for (const auto& n : kNotions) verdicts.emplace_back(n, run_notion(n, mu, k, alg, bound, ff));
  auto passed = [&](const std::string& n) {
    for (const auto& [name, v] : verdicts)
      if (name == n) return v.pass;
    return false;
  };
  // Implications the theory promises between the notions, evaluated on this
  // subject: a violated row is a semantic failure.
  struct Row { const char* text; bool ok; };
  std::vector<Row> matrix{
      {"in-in => qk", !passed("in-in") || passed("qk")},
      {"strong-qk => qk", !passed("strong-qk") || passed("qk")},
      {"qk => thm321", !passed("qk") || passed("thm321")},
      {"qk => prop316", !passed("qk") || passed("prop316")},
      {"qk == thm312", passed("qk") == passed("thm312")},
      {"qk == thm324", passed("qk") == passed("thm324")},
  };
  bool respected = true;
  for (const auto& row : matrix) respected = respected && row.ok;

  if (opt.json()) {
    json j{{"command", "check"}, {"algebra", alg_path}, {"subset", fz_path},
           {"k", k.k.str()}, {"result", respected ? "pass" : "fail"}};
    json arr = json::array();
    for (const auto& [name, v] : verdicts) arr.push_back(r0::verdict_json(alg, name, v));
    j["verdicts"] = arr;
    json imp = json::array();
    for (const auto& row : matrix) imp.push_back(json{{"rule", row.text}, {"pass", row.ok}});
    j["implications"] = imp;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "== check --all k=" << k.k.str() << " algebra=" << alg_path << " subset="
              << fz_path << " ==\n";
    for (const auto& [name, v] : verdicts) std::cout << r0::verdict_line(alg, name, v) << "\n";
    std::cout << "implications:\n";
    for (const auto& row : matrix)
      std::cout << (row.ok ? "[PASS] " : "[FAIL] ") << row.text << "\n";
    std::cout << "result: " << (respected ? "PASS" : "FAIL") << "\n";
  }
  return respected ? kPass : kFail;
}

int cmd_levels(const std::string& alg_path, const std::string& fz_path, const std::string& k_text,
               const Options& opt) {
  const r0::Algebra alg = load_valid_algebra(alg_path);
  const r0::FuzzySubset mu = r0::load_fuzzy_file(fz_path, alg);
  const r0::KParam k = parse_k(k_text);
  const r0::Rat half = k.half();

  struct Table {
    std::string title;
    std::vector<r0::IntervalRow> rows;
  };
  const std::vector<Table> tables{
      {"U(mu;t) on (0, 1]", r0::level_table(mu, k, r0::LevelKind::Upper, r0::Rat(0), r0::Rat(1))},
      {"U(mu;t) on (0, " + half.str() + "]",
       r0::level_table(mu, k, r0::LevelKind::Upper, r0::Rat(0), half)},
      {"Q_k(mu;t) on (" + half.str() + ", 1]",
       r0::level_table(mu, k, r0::LevelKind::Quasi, half, r0::Rat(1))},
      {"[mu]_t^k on (0, 1]",
       r0::level_table(mu, k, r0::LevelKind::Bracket, r0::Rat(0), r0::Rat(1))},
  };

  if (opt.json()) {
    json j{{"command", "levels"}, {"algebra", alg_path}, {"subset", fz_path}, {"k", k.k.str()}};
    json arr = json::array();
    for (const auto& t : tables) {
      json rows = json::array();
      for (const auto& r : t.rows) rows.push_back(r0::row_json(alg, r));
      arr.push_back(json{{"title", t.title}, {"rows", rows}});
    }
    j["tables"] = arr;
    std::cout << j.dump(2) << "\n";
    return kPass;
  }

  std::cout << "== levels " << fz_path << " k=" << k.k.str() << " ==\n";
  for (const auto& t : tables) {
    std::cout << t.title << ":\n";
    for (const auto& r : t.rows) std::cout << "  " << r0::row_text(alg, r) << "\n";
  }
  return kPass;
}

struct ConstructArgs {
  std::string algebra;
  std::string mode;
  std::string k_text = "0";
  std::string out_dir = ".";
  std::string base;    // two-level
  std::string t1, t2;  // two-level
  std::string chain;   // chain
  std::string t0, t, levels;  // chain
  std::string family;  // sup
  std::string mu_path; // decompose
};

int cmd_construct(const ConstructArgs& args, const Options& opt) {
  const r0::Algebra alg = load_valid_algebra(args.algebra);
  const r0::KParam k = parse_k(args.k_text);
  std::filesystem::create_directories(args.out_dir);
  auto out_path = [&](const std::string& name) {
    return (std::filesystem::path(args.out_dir) / name).string();
  };

  json j{{"command", "construct"}, {"mode", args.mode}, {"k", k.k.str()}};
  std::vector<std::string> lines;
  std::vector<std::string> outputs;
  bool ok = true;

  if (args.mode == "two-level") {
    const r0::Subset base = r0::parse_subset(alg, args.base);
    const r0::FuzzySubset mu = r0::two_level(alg, base, parse_rat_arg(args.t1, "t1"),
                                             parse_rat_arg(args.t2, "t2"), k);
    const std::string path = out_path("two-level.fz");
    r0::save_fuzzy_file(path, mu);
    outputs.push_back(path);
    const r0::Verdict v = r0::is_qk_fated(mu, k);
    ok = v.pass;
    lines.push_back(r0::verdict_line(alg, "qk re-check", v));
    j["recheck"] = r0::verdict_json(alg, "qk", v);
  } else if (args.mode == "chain") {
    const r0::FilterChain chain = r0::parse_chain(alg, args.chain);
    r0::FuzzySubset mu = [&]() {
      if (args.t0.empty() && args.t.empty() && args.levels.empty())
        return r0::chain_construction(chain, k);
      std::vector<r0::Rat> levels;
      std::string item;
      std::istringstream in(args.levels);
      while (std::getline(in, item, ','))
        if (!item.empty()) levels.push_back(parse_rat_arg(item, "level"));
      const r0::Rat t0 = args.t0.empty() ? k.half() : parse_rat_arg(args.t0, "t0");
      const r0::Rat t = args.t.empty() ? t0 : parse_rat_arg(args.t, "t");
      return r0::chain_construction(chain, k, t0, t, levels);
    }();
    const std::string path = out_path("chain.fz");
    r0::save_fuzzy_file(path, mu);
    outputs.push_back(path);
    const r0::Verdict v = r0::is_qk_fated(mu, k);
    ok = v.pass;
    lines.push_back(r0::verdict_line(alg, "qk re-check", v));
    const r0::Subset at_half = r0::upper_level(mu, k.half());
    lines.push_back("U(mu;" + k.half().str() + ") = " + at_half.str(alg));
    if (!(at_half == chain.members.front())) {
      ok = false;
      lines.push_back("[FAIL] upper level at (1-k)/2 differs from the chain base");
    }
    j["recheck"] = r0::verdict_json(alg, "qk", v);
    j["upper_level_at_half"] = at_half.str(alg);
  } else if (args.mode == "sup") {
    const r0::IndexedFamily family = r0::parse_family(alg, args.family, k);
    const r0::FuzzySubset mu = r0::sup_construction(family, k);
    const std::string path = out_path("sup.fz");
    r0::save_fuzzy_file(path, mu);
    outputs.push_back(path);
    const r0::Verdict v = r0::is_qk_fated(mu, k);
    ok = v.pass;
    lines.push_back(r0::verdict_line(alg, "qk re-check", v));
    j["recheck"] = r0::verdict_json(alg, "qk", v);
  } else if (args.mode == "decompose") {
    const r0::FuzzySubset mu = r0::load_fuzzy_file(args.mu_path, alg);
    const auto [nu, ga] = r0::decompose(mu, k);
    const std::string nu_path = out_path("decompose.nu.fz");
    const std::string ga_path = out_path("decompose.gamma.fz");
    r0::save_fuzzy_file(nu_path, nu);
    r0::save_fuzzy_file(ga_path, ga);
    outputs = {nu_path, ga_path};
    const r0::Verdict vn = r0::is_qk_fated(nu, k);
    const r0::Verdict vg = r0::is_qk_fated(ga, k);
    const bool union_ok = r0::fuzzy_union(nu, ga) == mu;
    const bool proper = r0::image(nu).size() >= 2 && r0::image(ga).size() >= 2;
    const bool nonequiv = !r0::same_level_family(nu, ga);
    ok = vn.pass && vg.pass && union_ok && proper && nonequiv;
    lines.push_back(r0::verdict_line(alg, "qk re-check (first component)", vn));
    lines.push_back(r0::verdict_line(alg, "qk re-check (second component)", vg));
    lines.push_back(std::string(union_ok ? "[PASS]" : "[FAIL]") + " union reproduces the input");
    lines.push_back(std::string(proper ? "[PASS]" : "[FAIL]") + " both components proper");
    lines.push_back(std::string(nonequiv ? "[PASS]" : "[FAIL]") + " components non-equivalent");
    j["recheck"] = json{{"first", r0::verdict_json(alg, "qk", vn)},
                        {"second", r0::verdict_json(alg, "qk", vg)},
                        {"union", union_ok},
                        {"proper", proper},
                        {"non_equivalent", nonequiv}};
  } else {
    throw std::domain_error("unknown mode '" + args.mode + "'");
  }

  if (opt.json()) {
    j["outputs"] = outputs;
    j["result"] = ok ? "pass" : "fail";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "== construct mode=" << args.mode << " k=" << k.k.str() << " ==\n";
    for (const auto& o : outputs) std::cout << "output: " << o << "\n";
    for (const auto& l : lines) std::cout << l << "\n";
    std::cout << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kPass : kFail;
}

int cmd_verify_paper(std::string alg_path, const r0::SuiteConfig& cfg, const Options& opt) {
  if (alg_path.empty()) {
    alg_path = std::filesystem::exists("example34.alg") ? "example34.alg"
                                                        : "fixtures/example34.alg";
  }
  const r0::Algebra alg = load_valid_algebra(alg_path);
  const r0::SuiteResult res = r0::run_paper_suite(alg, cfg);

  auto grid_str = [&]() {
    std::string s;
    for (const auto& kr : cfg.k_grid) {
      if (!s.empty()) s += ", ";
      s += kr.str();
    }
    return s;
  };

  if (opt.json()) {
    json j{{"command", "verify-paper"}, {"algebra", alg_path}, {"n", alg.size()},
           {"seed", cfg.seed}, {"sweep", cfg.sweep}, {"denominator_bound", cfg.den_bound},
           {"enumeration_bound", cfg.enum_bound}, {"k_grid", grid_str()},
           {"pass", res.pass()}};
    json arr = json::array();
    for (const auto& c : res.claims) {
      json cj{{"label", c.label}, {"pass", c.pass}, {"cases", c.cases}};
      if (!c.pass) cj["violation"] = c.detail;
      arr.push_back(cj);
    }
    j["claims"] = arr;
    j["cases"] = res.total_cases();
    std::cout << j.dump(2) << "\n";
    return res.pass() ? kPass : kFail;
  }

  std::cout << "== verify-paper ==\n";
  std::cout << "algebra: " << alg_path << " (n=" << alg.size() << ")\n";
  std::cout << "seed: " << cfg.seed << "\n";
  std::cout << "sweep: " << cfg.sweep << "\n";
  std::cout << "denominator-bound: " << cfg.den_bound << "\n";
  std::cout << "enumeration-bound: " << cfg.enum_bound << "\n";
  std::cout << "k-grid: " << grid_str() << "\n";
  long long violations = 0;
  for (const auto& c : res.claims) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.label << " (" << c.cases
              << (c.cases == 1 ? " case" : " cases") << ")\n";
    if (!c.pass) {
      std::cout << "       violation: " << c.detail << "\n";
      ++violations;
    }
  }
  std::cout << "result: " << (res.pass() ? "PASS" : "FAIL") << " (" << res.claims.size()
            << " claims, " << res.total_cases() << " cases, " << violations << " violated)\n";
  return res.pass() ? kPass : kFail;
}

template <typename Fn>
int guarded(int structural_exit, int domain_exit, Fn&& fn) {
  try {
    return fn();
  } catch (const r0::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const r0::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const r0::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const r0::StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return structural_exit;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return domain_exit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite R0-algebra toolkit: filters, fuzzy fated filters, level tables,"
               " constructions, and the full verification suite"};
  app.require_subcommand(1);

  Options opt;

  auto* verify = app.add_subcommand("verify-algebra", "check the axiom block of an algebra file");
  std::string verify_path;
  verify->add_option("file", verify_path, "algebra file")->required();
  verify->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

  auto* en = app.add_subcommand("enum", "enumerate filters or fated filters");
  std::string enum_path;
  bool enum_fated = false, enum_oracle = false;
  int enum_bound = r0::kDefaultEnumBound;
  en->add_option("file", enum_path, "algebra file")->required();
  en->add_flag("--fated", enum_fated, "enumerate fated filters instead of filters");
  en->add_flag("--oracle", enum_oracle, "compare against the unpruned reference scan");
  en->add_option("--bound", enum_bound, "enumeration capacity bound");
  en->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check", "run a fuzzy-filter notion on a subset");
  std::string check_alg, check_fz, check_k = "0", check_notion = "qk";
  bool check_all = false;
  int check_bound = r0::kDefaultEnumBound;
  check->add_option("algebra", check_alg, "algebra file")->required();
  check->add_option("subset", check_fz, "fuzzy subset file")->required();
  check->add_option("--k", check_k, "relation parameter k in [0,1)");
  check->add_option("--notion", check_notion, "which notion to check")
      ->check(CLI::IsMember(kNotions));
  check->add_flag("--all", check_all, "run every notion and print the implication matrix");
  check->add_option("--bound", check_bound, "enumeration capacity bound");
  check->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

  auto* levels = app.add_subcommand("levels", "print level-set tables by threshold interval");
  std::string lv_alg, lv_fz, lv_k = "0";
  levels->add_option("algebra", lv_alg, "algebra file")->required();
  levels->add_option("subset", lv_fz, "fuzzy subset file")->required();
  levels->add_option("--k", lv_k, "relation parameter k in [0,1)");
  levels->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

  auto* con = app.add_subcommand("construct", "build fuzzy fated filters from crisp data");
  ConstructArgs cargs;
  con->add_option("algebra", cargs.algebra, "algebra file")->required();
  con->add_option("--mode", cargs.mode, "two-level | chain | sup | decompose")
      ->required()
      ->check(CLI::IsMember({"two-level", "chain", "sup", "decompose"}));
  con->add_option("--k", cargs.k_text, "relation parameter k in [0,1)");
  con->add_option("--out", cargs.out_dir, "output directory");
  con->add_option("--base", cargs.base, "two-level: fated filter as a brace set");
  con->add_option("--t1", cargs.t1, "two-level: inside grade, in [(1-k)/2, 1]");
  con->add_option("--t2", cargs.t2, "two-level: outside grade, in (0, (1-k)/2)");
  con->add_option("--chain", cargs.chain, "chain: brace sets joined by '<'");
  con->add_option("--t0", cargs.t0, "chain: grade of 1 (default (1-k)/2)");
  con->add_option("--t", cargs.t, "chain: grade of the base block (default t0)");
  con->add_option("--levels", cargs.levels, "chain: comma list of strictly decreasing grades");
  con->add_option("--family", cargs.family, "sup: entries '<grade>: {set};' ...");
  con->add_option("--mu", cargs.mu_path, "decompose: fuzzy subset file");
  con->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

  auto* paper = app.add_subcommand("verify-paper", "run the full verification suite");
  std::string paper_alg;
  r0::SuiteConfig cfg;
  paper->add_option("--algebra", paper_alg, "algebra file (default example34.alg)");
  paper->add_option("--sweep", cfg.sweep, "number of random subjects (0 = fixtures only)");
  paper->add_option("--seed", cfg.seed, "random seed, recorded in the report");
  paper->add_option("--den-bound", cfg.den_bound, "denominator bound for random grades");
  paper->add_option("--bound", cfg.enum_bound, "enumeration capacity bound");
  paper->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInput;
  }

  if (verify->parsed())
    return guarded(kFail, kInput, [&] { return cmd_verify_algebra(verify_path, opt); });
  if (en->parsed())
    return guarded(kInput, kInput,
                   [&] { return cmd_enum(enum_path, enum_fated, enum_oracle, enum_bound, opt); });
  if (check->parsed())
    return guarded(kInput, kInput, [&] {
      return cmd_check(check_alg, check_fz, check_k, check_notion, check_all, check_bound, opt);
    });
  if (levels->parsed())
    return guarded(kInput, kInput, [&] { return cmd_levels(lv_alg, lv_fz, lv_k, opt); });
  if (con->parsed()) return guarded(kFail, kFail, [&] { return cmd_construct(cargs, opt); });
  if (paper->parsed())
    return guarded(kInput, kInput, [&] { return cmd_verify_paper(paper_alg, cfg, opt); });
  return kInput;
}
