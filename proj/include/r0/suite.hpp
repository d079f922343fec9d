#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "r0/constructions.hpp"
#include "r0/fuzzy_filters.hpp"

namespace r0 {

// Built-in fixtures. The 6-element chain algebra and the three fuzzy subsets
// mirror the shipped fixture files (example34.alg, mu34.fz, nu34.fz,
// mu315.fz); the 8-element Boolean cube hosts the decomposition fixture,
// which needs a 4-chain of fated filters (no chain algebra has one).
Algebra fixture_example34();
Algebra fixture_bool2();
Algebra fixture_cube8();
FuzzySubset fixture_mu34(const Algebra& alg);
FuzzySubset fixture_nu34(const Algebra& alg);
FuzzySubset fixture_mu315(const Algebra& alg);
FuzzySubset fixture_mu_cube8(const Algebra& alg);

// Deterministic generator of random fuzzy subsets with bounded denominators.
class SubjectGen {
 public:
  SubjectGen(std::uint64_t seed, int den_bound) : rng_(seed), den_bound_(den_bound) {}

  Rat next_grade() {
    const long long den = 1 + static_cast<long long>(rng_() % den_bound_);
    const long long num = static_cast<long long>(rng_() % (den + 1));
    return Rat(num, den);
  }
  FuzzySubset next(const Algebra& alg) {
    std::vector<Rat> g(alg.size());
    for (auto& r : g) r = next_grade();
    return FuzzySubset(alg, std::move(g));
  }
  std::uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
  int den_bound_;
};

struct SuiteConfig {
  std::uint64_t seed{1};
  long long sweep{10000};
  int den_bound{10};
  int enum_bound{kDefaultEnumBound};
  std::vector<Rat> k_grid{Rat(0), Rat(1, 5), Rat(3, 10), Rat(2, 5), Rat(1, 2)};
};

struct Claim {
  std::string label;
  bool pass{true};
  long long cases{0};
  std::string detail;  // first violation, rendered
};

struct SuiteResult {
  std::vector<Claim> claims;

  bool pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
  long long total_cases() const {
    long long n = 0;
    for (const auto& c : claims) n += c.cases;
    return n;
  }
};

// Full verification suite: fixture reproductions (when the algebra is the
// shipped example), quantified equivalence/implication/monotonicity sweeps,
// level-machinery invariants, and construction round-trips.
SuiteResult run_paper_suite(const Algebra& alg, const SuiteConfig& cfg);

// All maximal chains of the family under inclusion (each ends at the full
// carrier).
std::vector<std::vector<Subset>> maximal_chains(const FatedFamily& ff, const Algebra& alg);

// Feeds a failing verdict's bindings back through the defining inequalities /
// point relations and reports whether they reproduce a genuine violation.
bool witness_reevaluates(const FuzzySubset& mu, const KParam& k, const Verdict& v);

}  // namespace r0
