#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "r0/algebra.hpp"

namespace r0 {

// Subset of a carrier with bitset semantics. Carrier sizes are desk scale
// (n <= 64), so one word is enough.
struct Subset {
  std::uint64_t bits{0};
  int n{0};

  static Subset empty(int n) { return Subset{0, n}; }
  static Subset full(int n) {
    return Subset{n >= 64 ? ~0ull : ((1ull << n) - 1), n};
  }
  static Subset of(const std::vector<ElementId>& ids, int n) {
    Subset s = empty(n);
    for (ElementId x : ids) s.add(x);
    return s;
  }

  bool contains(ElementId x) const { return (bits >> x) & 1; }
  void add(ElementId x) { bits |= 1ull << x; }
  void remove(ElementId x) { bits &= ~(1ull << x); }
  int count() const;
  bool is_empty() const { return bits == 0; }
  bool subset_of(const Subset& o) const { return (bits & ~o.bits) == 0; }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.bits == b.bits && a.n == b.n;
  }
  friend Subset operator&(const Subset& a, const Subset& b) {
    return Subset{a.bits & b.bits, a.n};
  }
  friend Subset operator|(const Subset& a, const Subset& b) {
    return Subset{a.bits | b.bits, a.n};
  }

  // Canonical report form: element names in carrier order, e.g. "{c, d, 1}".
  std::string str(const Algebra& alg) const;
};

// Filter via the membership conditions: 1 in S, and x in S with x->y in S
// forces y in S.
CheckReport is_filter(const Algebra& alg, const Subset& s);

// Filter via the closure conditions: nonempty, closed under odot, upward
// closed. Equivalent to is_filter on valid algebras; the equivalence is a
// tested property, not an assumption.
CheckReport is_filter_alt(const Algebra& alg, const Subset& s);

// Fated filter: 1 in S, and a->((x->y)->x) in S with a in S forces x in S.
CheckReport is_fated_filter(const Algebra& alg, const Subset& s);

// Fatedness of a *filter* through closure under hypothetical deduction:
// x->(y->z) in S and x->y in S force x->z in S. Throws PreconditionError
// when s is not a filter.
CheckReport is_fated_via_deduction(const Algebra& alg, const Subset& s);

// Fatedness of a *filter* through the Peirce-style condition:
// (x->y)->x in S forces x in S. Throws PreconditionError when s is not a
// filter.
CheckReport is_fated_via_peirce(const Algebra& alg, const Subset& s);

inline constexpr int kDefaultEnumBound = 24;

// All filters, canonically ordered (population count, then bit pattern).
// Throws CapacityError above the bound.
std::vector<Subset> enumerate_filters(const Algebra& alg, int bound = kDefaultEnumBound);

struct FatedFamily {
  std::vector<Subset> members;  // canonical order

  bool contains(const Subset& s) const;
  bool closed_under_intersection() const;
};

FatedFamily enumerate_fated_filters(const Algebra& alg, int bound = kDefaultEnumBound);

// Unpruned reference scans; production enumeration must agree with these.
std::vector<Subset> enumerate_filters_naive(const Algebra& alg, int bound = kDefaultEnumBound);
FatedFamily enumerate_fated_filters_naive(const Algebra& alg, int bound = kDefaultEnumBound);

// Least enumerated fated filter containing s (intersection of all members
// above s union {top}).
Subset fated_closure(const Algebra& alg, const Subset& s, int bound = kDefaultEnumBound);
Subset fated_closure(const FatedFamily& family, const Algebra& alg, const Subset& s);

}  // namespace r0
