#pragma once

#include <optional>

#include "oml/bitset.hpp"
#include "oml/contexts.hpp"
#include "oml/modal.hpp"
#include "oml/ortho.hpp"

namespace oml {

enum class ConsequenceMethod { Definition, Order, Diamond };

/// The classical consequences of p: central elements z that are true under
/// every contextual valuation making p true. Computable three ways, which
/// provably coincide; keeping all three is the point of the cross-check.
struct ConsequenceSet {
  ElementId of;
  Bitset members;  // subset of the center
  ConsequenceMethod method;
};

/// Literal quantifier sweep: z qualifies iff for every Boolean subalgebra W
/// containing p and every valuation v of the expanded context W^◇,
/// v(p) = 1 implies v(z) = 1. The slow method; the oracle for the other
/// two. Propagates BudgetExceeded from context enumeration.
ConsequenceSet consequences_by_definition(const OrthoLattice& ol, const CenterInfo& c,
                                          ElementId p,
                                          std::size_t budget = kDefaultEnumerationBudget);

/// Same sweep restricted to one context (which must contain p); the result
/// is provably independent of the choice.
ConsequenceSet consequences_within_context(const OrthoLattice& ol, const CenterInfo& c,
                                           const BooleanSubalgebra& w, ElementId p);

/// {z central : p ≤ z}.
ConsequenceSet consequences_by_order(const OrthoLattice& ol, const CenterInfo& c, ElementId p);

/// {z central : ◇p ≤ z}.
ConsequenceSet consequences_by_diamond(const OrthoLattice& ol, const CenterInfo& c,
                                       const ModalTables& t, ElementId p);

/// The three methods side by side, with the first element on which any two
/// of them differ (there is none on a valid orthomodular lattice).
struct ConsequenceAgreement {
  ElementId of;
  bool holds = true;
  Bitset by_definition, by_order, by_diamond;
  std::optional<ElementId> disagreement;
};

ConsequenceAgreement check_consequence_agreement(const OrthoLattice& ol, const CenterInfo& c,
                                                 const ModalTables& t, ElementId p,
                                                 std::size_t budget = kDefaultEnumerationBudget);

/// ◇p ∧ ◇¬p = 0 forces p into the center; equivalently, every non-central
/// p has overlapping ◇p and ◇¬p. The verdict carries the overlap element
/// as witness.
struct ModalCollapseVerdict {
  ElementId of;
  bool holds = true;
  ElementId overlap;     // ◇p ∧ ◇¬p
  bool antecedent;       // overlap == 0
  bool central;          // p in Z(L)
};

ModalCollapseVerdict check_modal_collapse(const OrthoLattice& ol, const CenterInfo& c,
                                          const ModalTables& t, ElementId p);

}  // namespace oml
