#include "r0/algebra.hpp"

#include <stdexcept>

#include "r0/errors.hpp"

namespace r0 {

Algebra::Algebra(std::vector<std::string> names, std::vector<ElementId> neg,
                 std::vector<ElementId> arrow)
    : n_(static_cast<int>(names.size())),
      names_(std::move(names)),
      neg_(std::move(neg)),
      arrow_(std::move(arrow)) {
  if (n_ < 2) throw std::invalid_argument("carrier needs at least two elements");
  if (static_cast<int>(neg_.size()) != n_ || static_cast<int>(arrow_.size()) != n_ * n_)
    throw std::invalid_argument("table sizes do not match carrier size");
  for (ElementId x : neg_)
    if (x < 0 || x >= n_) throw std::invalid_argument("negation table entry out of range");
  for (ElementId x : arrow_)
    if (x < 0 || x >= n_) throw std::invalid_argument("arrow table entry out of range");
  derive();
}

ElementId Algebra::check(ElementId x) const {
  if (x < 0 || x >= n_) throw std::domain_error("element id out of range");
  return x;
}

std::optional<ElementId> Algebra::find(std::string_view name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

void Algebra::derive() {
  // Top is forced by reflexivity: x <= x needs arrow(x,x) = top for every x,
  // so the diagonal must be one constant element.
  const ElementId diag = arrow_[0];
  bool constant = true;
  for (int x = 1; x < n_; ++x)
    if (arrow_[x * n_ + x] != diag) { constant = false; break; }
  if (!constant) return;
  top_ = diag;

  leq_.assign(static_cast<size_t>(n_) * n_, 0);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      leq_[x * n_ + y] = arrow_[x * n_ + y] == top_ ? 1 : 0;

  // Bottom: the unique element below everything (unique when the order is
  // antisymmetric; verify_axioms re-checks that).
  for (int b = 0; b < n_; ++b) {
    bool least = true;
    for (int x = 0; x < n_ && least; ++x) least = leq_[b * n_ + x];
    if (least) { bottom_ = b; break; }
  }

  meet_.assign(static_cast<size_t>(n_) * n_, -1);
  join_.assign(static_cast<size_t>(n_) * n_, -1);
  lattice_ok_ = bottom_ >= 0;
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      ElementId glb = -1, lub = -1;
      for (int z = 0; z < n_; ++z) {
        if (leq_[z * n_ + x] && leq_[z * n_ + y]) {
          // greatest lower bound: above every other common lower bound
          bool greatest = true;
          for (int w = 0; w < n_ && greatest; ++w)
            if (leq_[w * n_ + x] && leq_[w * n_ + y] && !leq_[w * n_ + z]) greatest = false;
          if (greatest) { glb = glb < 0 ? z : -2; }
        }
        if (leq_[x * n_ + z] && leq_[y * n_ + z]) {
          bool least = true;
          for (int w = 0; w < n_ && least; ++w)
            if (leq_[x * n_ + w] && leq_[y * n_ + w] && !leq_[z * n_ + w]) least = false;
          if (least) { lub = lub < 0 ? z : -2; }
        }
      }
      meet_[x * n_ + y] = glb >= 0 ? glb : -1;
      join_[x * n_ + y] = lub >= 0 ? lub : -1;
      if (glb < 0 || lub < 0) lattice_ok_ = false;
    }
  }
}

ElementId Algebra::top() const {
  if (top_ < 0) throw StructuralError("no consistent top element (diagonal of arrow table is not constant)");
  return top_;
}

ElementId Algebra::bottom() const {
  if (bottom_ < 0) throw StructuralError("derived order has no least element");
  return bottom_;
}

bool Algebra::leq(ElementId x, ElementId y) const {
  check(x); check(y);
  if (top_ < 0) throw StructuralError("order underivable: no consistent top element");
  return leq_[x * n_ + y] != 0;
}

ElementId Algebra::meet(ElementId x, ElementId y) const {
  check(x); check(y);
  if (top_ < 0) throw StructuralError("order underivable: no consistent top element");
  const ElementId m = meet_[x * n_ + y];
  if (m < 0)
    throw StructuralError("no unique greatest lower bound for (" + names_[x] + ", " + names_[y] + ")");
  return m;
}

ElementId Algebra::join(ElementId x, ElementId y) const {
  check(x); check(y);
  if (top_ < 0) throw StructuralError("order underivable: no consistent top element");
  const ElementId j = join_[x * n_ + y];
  if (j < 0)
    throw StructuralError("no unique least upper bound for (" + names_[x] + ", " + names_[y] + ")");
  return j;
}

namespace {

void fail(CheckItem& item, std::initializer_list<std::pair<const char*, ElementId>> witness,
          const std::string& note = "") {
  if (!item.pass) return;  // keep the first witness
  item.pass = false;
  for (const auto& [role, id] : witness) item.witness.emplace_back(role, id);
  item.note = note;
}

}  // namespace

AxiomReport Algebra::verify_axioms() const {
  AxiomReport rep;

  auto& top_item = rep.add("structure.top");
  if (top_ < 0) {
    const ElementId d0 = arrow_[0];
    for (int x = 1; x < n_; ++x)
      if (arrow_[x * n_ + x] != d0) {
        fail(top_item, {{"x", x}}, "arrow(x,x) differs from arrow(" + names_[0] + "," + names_[0] + ")");
        break;
      }
    // Order-dependent checks are unreportable without a top.
    rep.add("structure.order").pass = false;
    rep.items.back().note = "skipped: order underivable";
    return rep;
  }

  auto& antisym = rep.add("structure.antisymmetry");
  for (int x = 0; x < n_ && antisym.pass; ++x)
    for (int y = 0; y < n_; ++y)
      if (x != y && leq_[x * n_ + y] && leq_[y * n_ + x]) {
        fail(antisym, {{"x", x}, {"y", y}});
        break;
      }

  auto& trans = rep.add("structure.transitivity");
  for (int x = 0; x < n_ && trans.pass; ++x)
    for (int y = 0; y < n_ && trans.pass; ++y) {
      if (!leq_[x * n_ + y]) continue;
      for (int z = 0; z < n_; ++z)
        if (leq_[y * n_ + z] && !leq_[x * n_ + z]) {
          fail(trans, {{"x", x}, {"y", y}, {"z", z}});
          break;
        }
    }

  auto& bounded = rep.add("structure.bounded");
  if (bottom_ < 0)
    fail(bounded, {}, "no least element");
  else if (bottom_ == top_)
    fail(bounded, {{"bottom", bottom_}}, "bottom equals top");

  auto& lattice = rep.add("structure.lattice");
  for (int x = 0; x < n_ && lattice.pass; ++x)
    for (int y = 0; y < n_; ++y)
      if (meet_[x * n_ + y] < 0 || join_[x * n_ + y] < 0) {
        fail(lattice, {{"x", x}, {"y", y}}, "no unique glb/lub");
        break;
      }

  auto& distrib = rep.add("structure.distributivity");
  if (lattice.pass) {
    for (int x = 0; x < n_ && distrib.pass; ++x)
      for (int y = 0; y < n_ && distrib.pass; ++y)
        for (int z = 0; z < n_; ++z) {
          const ElementId lhs = meet_[x * n_ + join_[y * n_ + z]];
          const ElementId rhs = join_[meet_[x * n_ + y] * n_ + meet_[x * n_ + z]];
          if (lhs != rhs) {
            fail(distrib, {{"x", x}, {"y", y}, {"z", z}});
            break;
          }
        }
  } else {
    fail(distrib, {}, "skipped: not a lattice");
  }

  auto& invol = rep.add("structure.involution");
  for (int x = 0; x < n_; ++x)
    if (neg_[neg_[x]] != x) {
      fail(invol, {{"x", x}});
      break;
    }

  auto& orev = rep.add("structure.order-reversing");
  for (int x = 0; x < n_ && orev.pass; ++x)
    for (int y = 0; y < n_; ++y)
      if (leq_[x * n_ + y] && !leq_[neg_[y] * n_ + neg_[x]]) {
        fail(orev, {{"x", x}, {"y", y}});
        break;
      }

  auto& r1 = rep.add("R1");
  for (int x = 0; x < n_ && r1.pass; ++x)
    for (int y = 0; y < n_; ++y)
      if (arrow_[x * n_ + y] != arrow_[neg_[y] * n_ + neg_[x]]) {
        fail(r1, {{"x", x}, {"y", y}});
        break;
      }

  auto& r2 = rep.add("R2");
  for (int x = 0; x < n_; ++x)
    if (arrow_[top_ * n_ + x] != x) {
      fail(r2, {{"x", x}});
      break;
    }

  const bool ops_ok = lattice.pass;
  auto mt = [&](ElementId a, ElementId b) { return meet_[a * n_ + b]; };
  auto jn = [&](ElementId a, ElementId b) { return join_[a * n_ + b]; };
  auto ar = [&](ElementId a, ElementId b) { return arrow_[a * n_ + b]; };

  auto& r3 = rep.add("R3");
  auto& r4 = rep.add("R4");
  auto& r5 = rep.add("R5");
  if (ops_ok) {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        for (int z = 0; z < n_; ++z) {
          if (r3.pass && mt(ar(y, z), ar(ar(x, y), ar(x, z))) != ar(y, z))
            fail(r3, {{"x", x}, {"y", y}, {"z", z}});
          if (r4.pass && ar(x, ar(y, z)) != ar(y, ar(x, z)))
            fail(r4, {{"x", x}, {"y", y}, {"z", z}});
          if (r5.pass && ar(x, jn(y, z)) != jn(ar(x, y), ar(x, z)))
            fail(r5, {{"x", x}, {"y", y}, {"z", z}});
        }
  } else {
    fail(r3, {}, "skipped: not a lattice");
    fail(r4, {}, "skipped: not a lattice");
    fail(r5, {}, "skipped: not a lattice");
  }

  auto& r6 = rep.add("R6");
  if (ops_ok) {
    for (int x = 0; x < n_ && r6.pass; ++x)
      for (int y = 0; y < n_; ++y) {
        const ElementId imp = ar(x, y);
        if (jn(imp, ar(imp, jn(neg_[x], y))) != top_) {
          fail(r6, {{"x", x}, {"y", y}});
          break;
        }
      }
  } else {
    fail(r6, {}, "skipped: not a lattice");
  }

  return rep;
}

CheckReport Algebra::verify_derived() const {
  CheckReport rep;
  const ElementId one = top();
  const ElementId zero = bottom();
  auto ar = [&](ElementId a, ElementId b) { return arrow_[a * n_ + b]; };
  auto le = [&](ElementId a, ElementId b) { return leq_[a * n_ + b] != 0; };
  auto mt = [&](ElementId a, ElementId b) { return meet_[a * n_ + b]; };
  auto jn = [&](ElementId a, ElementId b) { return join_[a * n_ + b]; };
  auto od = [&](ElementId a, ElementId b) { return neg_[ar(a, neg_[b])]; };
  auto op = [&](ElementId a, ElementId b) { return ar(neg_[a], b); };

  auto pairwise = [&](const char* label, auto pred) {
    auto& item = rep.add(label);
    for (int x = 0; x < n_ && item.pass; ++x)
      for (int y = 0; y < n_; ++y)
        if (!pred(x, y)) {
          fail(item, {{"x", x}, {"y", y}});
          break;
        }
  };
  auto triple = [&](const char* label, auto pred) {
    auto& item = rep.add(label);
    for (int x = 0; x < n_ && item.pass; ++x)
      for (int y = 0; y < n_ && item.pass; ++y)
        for (int z = 0; z < n_; ++z)
          if (!pred(x, y, z)) {
            fail(item, {{"x", x}, {"y", y}, {"z", z}});
            break;
          }
  };

  pairwise("a1", [&](int x, int y) { return le(x, y) == (ar(x, y) == one); });
  pairwise("a2", [&](int x, int y) { return le(x, ar(y, x)); });
  {
    auto& a3 = rep.add("a3");
    for (int x = 0; x < n_; ++x)
      if (neg_[x] != ar(x, zero)) {
        fail(a3, {{"x", x}});
        break;
      }
  }
  pairwise("a4", [&](int x, int y) { return jn(ar(x, y), ar(y, x)) == one; });
  triple("a5", [&](int x, int y, int z) { return !le(x, y) || le(ar(y, z), ar(x, z)); });
  triple("a6", [&](int x, int y, int z) { return !le(x, y) || le(ar(z, x), ar(z, y)); });
  pairwise("a7", [&](int x, int y) { return ar(ar(ar(x, y), y), y) == ar(x, y); });
  pairwise("a8", [&](int x, int y) {
    return jn(x, y) == mt(ar(ar(x, y), y), ar(ar(y, x), x));
  });
  {
    auto& a9 = rep.add("a9");
    for (int x = 0; x < n_; ++x)
      if (od(x, neg_[x]) != zero || op(x, neg_[x]) != one) {
        fail(a9, {{"x", x}});
        break;
      }
  }
  pairwise("a10", [&](int x, int y) {
    return le(od(x, y), mt(x, y)) && le(od(x, ar(x, y)), mt(x, y));
  });
  triple("a11", [&](int x, int y, int z) { return ar(od(x, y), z) == ar(x, ar(y, z)); });
  pairwise("a12", [&](int x, int y) { return le(x, ar(y, od(x, y))); });
  triple("a13", [&](int x, int y, int z) { return le(od(x, y), z) == le(x, ar(y, z)); });
  triple("a14", [&](int x, int y, int z) { return !le(x, y) || le(od(x, z), od(y, z)); });
  triple("a15", [&](int x, int y, int z) { return le(ar(x, y), ar(ar(y, z), ar(x, z))); });
  triple("a16", [&](int x, int y, int z) { return le(od(ar(x, y), ar(y, z)), ar(x, z)); });

  pairwise("odot.comm", [&](int x, int y) { return od(x, y) == od(y, x); });
  triple("odot.assoc", [&](int x, int y, int z) { return od(od(x, y), z) == od(x, od(y, z)); });
  pairwise("oplus.comm", [&](int x, int y) { return op(x, y) == op(y, x); });
  triple("oplus.assoc", [&](int x, int y, int z) { return op(op(x, y), z) == op(x, op(y, z)); });
  pairwise("oplus.demorgan", [&](int x, int y) { return op(x, y) == neg_[od(neg_[x], neg_[y])]; });

  return rep;
}

}  // namespace r0
