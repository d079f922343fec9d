#include "r0/crisp.hpp"

#include <algorithm>
#include <bit>

#include "r0/errors.hpp"

namespace r0 {

int Subset::count() const { return std::popcount(bits); }

std::string Subset::str(const Algebra& alg) const {
  std::string out = "{";
  bool first = true;
  for (int x = 0; x < n; ++x) {
    if (!contains(x)) continue;
    if (!first) out += ", ";
    out += alg.name(x);
    first = false;
  }
  out += "}";
  return out;
}

CheckReport is_filter(const Algebra& alg, const Subset& s) {
  CheckReport rep;
  const int n = alg.size();

  auto& b1 = rep.add("b1");
  if (s.is_empty()) {
    b1.pass = false;
    b1.note = "nonempty required";
  } else if (!s.contains(alg.top())) {
    b1.pass = false;
    b1.note = "top missing";
  }

  auto& b2 = rep.add("b2");
  for (int x = 0; x < n && b2.pass; ++x) {
    if (!s.contains(x)) continue;
    for (int y = 0; y < n; ++y)
      if (s.contains(alg.arrow(x, y)) && !s.contains(y)) {
        b2.pass = false;
        b2.witness = {{"x", x}, {"y", y}};
        break;
      }
  }
  return rep;
}

CheckReport is_filter_alt(const Algebra& alg, const Subset& s) {
  CheckReport rep;
  const int n = alg.size();

  auto& nonempty = rep.add("nonempty");
  if (s.is_empty()) {
    nonempty.pass = false;
    nonempty.note = "nonempty required";
  }

  auto& b3 = rep.add("b3");
  for (int x = 0; x < n && b3.pass; ++x) {
    if (!s.contains(x)) continue;
    for (int y = 0; y < n; ++y)
      if (s.contains(y) && !s.contains(alg.odot(x, y))) {
        b3.pass = false;
        b3.witness = {{"x", x}, {"y", y}};
        break;
      }
  }

  auto& b4 = rep.add("b4");
  for (int x = 0; x < n && b4.pass; ++x) {
    if (!s.contains(x)) continue;
    for (int y = 0; y < n; ++y)
      if (alg.leq(x, y) && !s.contains(y)) {
        b4.pass = false;
        b4.witness = {{"x", x}, {"y", y}};
        break;
      }
  }
  return rep;
}

CheckReport is_fated_filter(const Algebra& alg, const Subset& s) {
  CheckReport rep;
  const int n = alg.size();

  auto& b1 = rep.add("b1");
  if (s.is_empty()) {
    b1.pass = false;
    b1.note = "nonempty required";
  } else if (!s.contains(alg.top())) {
    b1.pass = false;
    b1.note = "top missing";
  }

  auto& fated = rep.add("fated");
  for (int a = 0; a < n && fated.pass; ++a) {
    if (!s.contains(a)) continue;
    for (int x = 0; x < n && fated.pass; ++x) {
      if (s.contains(x)) continue;
      for (int y = 0; y < n; ++y) {
        const ElementId w = alg.arrow(a, alg.arrow(alg.arrow(x, y), x));
        if (s.contains(w)) {
          fated.pass = false;
          fated.witness = {{"a", a}, {"x", x}, {"y", y}, {"w", w}};
          break;
        }
      }
    }
  }
  return rep;
}

namespace {

void require_filter(const Algebra& alg, const Subset& s) {
  if (!is_filter(alg, s).pass())
    throw PreconditionError("subset " + s.str(alg) + " is not a filter");
}

}  // namespace

CheckReport is_fated_via_deduction(const Algebra& alg, const Subset& s) {
  require_filter(alg, s);
  CheckReport rep;
  const int n = alg.size();
  auto& ded = rep.add("deduction");
  for (int x = 0; x < n && ded.pass; ++x)
    for (int y = 0; y < n && ded.pass; ++y)
      for (int z = 0; z < n; ++z)
        if (s.contains(alg.arrow(x, alg.arrow(y, z))) && s.contains(alg.arrow(x, y)) &&
            !s.contains(alg.arrow(x, z))) {
          ded.pass = false;
          ded.witness = {{"x", x}, {"y", y}, {"z", z}};
          break;
        }
  return rep;
}

CheckReport is_fated_via_peirce(const Algebra& alg, const Subset& s) {
  require_filter(alg, s);
  CheckReport rep;
  const int n = alg.size();
  auto& pe = rep.add("peirce");
  for (int x = 0; x < n && pe.pass; ++x)
    for (int y = 0; y < n; ++y)
      if (s.contains(alg.arrow(alg.arrow(x, y), x)) && !s.contains(x)) {
        pe.pass = false;
        pe.witness = {{"x", x}, {"y", y}};
        break;
      }
  return rep;
}

namespace {

void canonical_sort(std::vector<Subset>& v) {
  std::sort(v.begin(), v.end(), [](const Subset& a, const Subset& b) {
    const int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.bits < b.bits;
  });
}

// Scans every subset containing top. `prune` may reject cheaply before the
// full predicate runs; it must be implied by the predicate.
template <typename Prune, typename Pred>
std::vector<Subset> scan(const Algebra& alg, int bound, Prune prune, Pred pred) {
  const int n = alg.size();
  if (n > bound)
    throw CapacityError("carrier size " + std::to_string(n) + " exceeds enumeration bound " +
                        std::to_string(bound));
  const ElementId one = alg.top();
  std::vector<Subset> out;
  const std::uint64_t rest = Subset::full(n).bits & ~(1ull << one);
  // Iterate over all submasks of `rest`, top always included.
  std::uint64_t sub = 0;
  while (true) {
    Subset s{sub | (1ull << one), n};
    if (prune(s) && pred(s)) out.push_back(s);
    if (sub == rest) break;
    sub = (sub - rest) & rest;
  }
  canonical_sort(out);
  return out;
}

bool upward_closed(const Algebra& alg, const Subset& s) {
  for (int x = 0; x < s.n; ++x) {
    if (!s.contains(x)) continue;
    for (int y = 0; y < s.n; ++y)
      if (alg.leq(x, y) && !s.contains(y)) return false;
  }
  return true;
}

}  // namespace

std::vector<Subset> enumerate_filters(const Algebra& alg, int bound) {
  // Every filter is upward closed, so the cheap prune is sound.
  return scan(
      alg, bound, [&](const Subset& s) { return upward_closed(alg, s); },
      [&](const Subset& s) { return is_filter(alg, s).pass(); });
}

std::vector<Subset> enumerate_filters_naive(const Algebra& alg, int bound) {
  return scan(alg, bound, [](const Subset&) { return true; },
              [&](const Subset& s) { return is_filter(alg, s).pass(); });
}

FatedFamily enumerate_fated_filters(const Algebra& alg, int bound) {
  // Fated filters satisfy the filter conditions (instantiating the fated
  // implication at the pair (y,y) with a = x yields modus ponens), hence are
  // upward closed and the cheap prune is sound.
  FatedFamily fam;
  fam.members = scan(
      alg, bound, [&](const Subset& s) { return upward_closed(alg, s); },
      [&](const Subset& s) { return is_fated_filter(alg, s).pass(); });
  return fam;
}

FatedFamily enumerate_fated_filters_naive(const Algebra& alg, int bound) {
  FatedFamily fam;
  fam.members = scan(alg, bound, [](const Subset&) { return true; },
                     [&](const Subset& s) { return is_fated_filter(alg, s).pass(); });
  return fam;
}

bool FatedFamily::contains(const Subset& s) const {
  for (const auto& m : members)
    if (m == s) return true;
  return false;
}

bool FatedFamily::closed_under_intersection() const {
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j)
      if (!contains(members[i] & members[j])) return false;
  return true;
}

Subset fated_closure(const FatedFamily& family, const Algebra& alg, const Subset& s) {
  Subset seed = s;
  seed.add(alg.top());
  Subset acc = Subset::full(alg.size());
  bool found = false;
  for (const auto& m : family.members)
    if (seed.subset_of(m)) {
      acc = acc & m;
      found = true;
    }
  if (!found)
    throw StructuralError("no fated filter contains " + s.str(alg));
  return acc;
}

Subset fated_closure(const Algebra& alg, const Subset& s, int bound) {
  return fated_closure(enumerate_fated_filters(alg, bound), alg, s);
}

}  // namespace r0
