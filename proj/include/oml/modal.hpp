#pragma once

#include <string>
#include <vector>

#include "oml/bitset.hpp"
#include "oml/contexts.hpp"
#include "oml/ortho.hpp"

namespace oml {

// ---------------------------------------------------------------------------
// Distributive triples
// ---------------------------------------------------------------------------

/// (a,b,c)D: (a ∨ b) ∧ c = (a ∧ c) ∨ (b ∧ c).
bool dist_D(const OrthoLattice& ol, ElementId a, ElementId b, ElementId c);

/// (a,b,c)D*: (a ∧ b) ∨ c = (a ∨ c) ∧ (b ∨ c).
bool dist_Dstar(const OrthoLattice& ol, ElementId a, ElementId b, ElementId c);

/// (a,b,c)T: D and D* under all six argument orders.
bool dist_T(const OrthoLattice& ol, ElementId a, ElementId b, ElementId c);

// ---------------------------------------------------------------------------
// Center
// ---------------------------------------------------------------------------

/// Fast path: z is complemented and commutes with every element.
bool is_central(const OrthoLattice& ol, ElementId z);

/// Literal definition: z is complemented and (a,b,z)T for all pairs a, b.
/// Quadratic per element; kept as the cross-check the fast path is tested
/// against.
bool is_central_by_distributivity(const OrthoLattice& ol, ElementId z);

struct CenterInfo {
  Bitset members;
  BooleanSubalgebra algebra;

  bool contains(ElementId z) const { return members.test(z); }
};

/// All central elements, verified to form a Boolean subalgebra.
/// CenterNotBoolean signals an internal inconsistency and cannot fire on a
/// valid orthomodular lattice.
CenterInfo center(const OrthoLattice& ol);

// ---------------------------------------------------------------------------
// Modal operators
// ---------------------------------------------------------------------------

struct ModalTables {
  std::vector<ElementId> diamond;  // least central element above
  std::vector<ElementId> box;      // greatest central element below

  ElementId dia(ElementId a) const { return diamond[a]; }
  ElementId box_of(ElementId a) const { return box[a]; }
};

/// diamond(a) = meet of the central upper bounds of a, asserted to be a
/// central upper bound itself (it always is on a finite orthomodular
/// lattice; NotSaturated guards the assertion). box(a) = ¬diamond(¬a),
/// cross-checked against the greatest central lower bound.
ModalTables modal_tables(const OrthoLattice& ol, const CenterInfo& c);

// ---------------------------------------------------------------------------
// Saturation axioms
// ---------------------------------------------------------------------------

struct AxiomVerdict {
  std::string axiom;
  bool holds = true;
  std::vector<ElementId> witness;  // first violating tuple, in index order
};

struct SaturationReport {
  std::vector<AxiomVerdict> axioms;

  bool all_hold() const {
    for (const auto& v : axioms)
      if (!v.holds) return false;
    return true;
  }
};

/// Exhaustively evaluates, over all elements x (and y where applicable):
///   S1  x ≤ ◇x
///   S2  ◇0 = 0
///   S3  ◇◇x = ◇x
///   S4  ◇(x ∨ y) = ◇x ∨ ◇y
///   S5  y = (y ∧ ◇x) ∨ (y ∧ ¬◇x)
///   S6  ◇(x ∧ ◇y) = ◇x ∧ ◇y
///   S7  ¬◇x ∧ ◇y ≤ ◇(¬x ∧ (y ∨ x))
SaturationReport check_saturation_axioms(const OrthoLattice& ol, const ModalTables& t);

}  // namespace oml
