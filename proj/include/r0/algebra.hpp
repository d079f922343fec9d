#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "r0/report.hpp"

namespace r0 {

// A finite algebra (L, neg, ->) given by tables. The order is not an input:
// it is derived from the arrow table through x <= y  iff  x->y = 1, the top
// element being pinned by the diagonal (x->x must be one constant element).
// Meet/join/bottom are computed from that order.
//
// Construction never rejects a table on axiomatic grounds; invalid algebras
// are representable and verify_axioms() reports what breaks. Everything
// downstream requires a passing AxiomReport first.
class Algebra {
 public:
  Algebra(std::vector<std::string> names, std::vector<ElementId> neg,
          std::vector<ElementId> arrow);

  int size() const { return n_; }
  const std::string& name(ElementId x) const { return names_[check(x)]; }
  std::optional<ElementId> find(std::string_view name) const;

  ElementId neg(ElementId x) const { return neg_[check(x)]; }
  ElementId arrow(ElementId x, ElementId y) const { return arrow_[check(x) * n_ + check(y)]; }

  // Structure derived from the tables; these throw StructuralError when the
  // derivation failed (no consistent top, order not a lattice, ...).
  bool has_order() const { return top_ >= 0; }
  bool has_lattice() const { return lattice_ok_; }
  ElementId top() const;
  ElementId bottom() const;
  bool leq(ElementId x, ElementId y) const;
  ElementId meet(ElementId x, ElementId y) const;
  ElementId join(ElementId x, ElementId y) const;

  ElementId odot(ElementId x, ElementId y) const {   // x (.) y = neg(x -> neg y)
    return neg(arrow(x, neg(y)));
  }
  ElementId oplus(ElementId x, ElementId y) const {  // x (+) y = neg x -> y
    return arrow(neg(x), y);
  }

  // Exhaustive verification of the defining axioms R1..R6 together with the
  // structural facts the definition presupposes (partial order, bounded
  // distributive lattice, order-reversing involution).
  AxiomReport verify_axioms() const;

  // Exhaustive verification of the derived laws a1..a16 plus commutativity
  // and associativity of odot/oplus and the De Morgan link between them.
  // Requires a passing verify_axioms().
  CheckReport verify_derived() const;

  bool same_tables(const Algebra& other) const {
    return names_ == other.names_ && neg_ == other.neg_ && arrow_ == other.arrow_;
  }

 private:
  int n_{0};
  std::vector<std::string> names_;
  std::vector<ElementId> neg_;
  std::vector<ElementId> arrow_;   // row-major n*n
  ElementId top_{-1};
  ElementId bottom_{-1};
  std::vector<unsigned char> leq_;
  std::vector<ElementId> meet_;
  std::vector<ElementId> join_;
  bool lattice_ok_{false};

  ElementId check(ElementId x) const;
  void derive();
};

}  // namespace r0
