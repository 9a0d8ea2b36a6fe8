#pragma once

#include <optional>
#include <vector>

#include "oml/contexts.hpp"
#include "oml/modal.hpp"
#include "oml/ortho.hpp"

namespace oml {

/// Which contexts a square report quantifies over.
enum class ContextPolicy { All, Blocks, Minimal };

/// Outcome of one opposition relation over all valuations of an expanded
/// context. The universal clause ("never both ...") reports the first
/// refuting valuation's atom; the existential clause ("can both ...")
/// reports the first supporting one. Relations without an existential
/// clause leave witness_atom empty.
struct RelationVerdict {
  bool holds = true;
  std::optional<ElementId> violation_atom;
  std::optional<ElementId> witness_atom;
};

/// The four corner elements for a proposition p. All of them are central,
/// so every expanded context can evaluate them.
struct SquareCorners {
  ElementId diamond_p;    // ◇p
  ElementId diamond_np;   // ◇¬p
  ElementId box_p;        // □p = ¬◇¬p
  ElementId box_np;       // □¬p = ¬◇p
};

struct SubalternVerdicts {
  RelationVerdict affirmative;  // v(□p) = 1 ⇒ v(◇p) = 1
  RelationVerdict negative;     // v(□¬p) = 1 ⇒ v(◇¬p) = 1
};

struct ContradictoryVerdicts {
  RelationVerdict diamond_pair;  // exactly one of ◇p, ¬◇p true
  RelationVerdict box_pair;      // exactly one of □p, ◇¬p true
};

// Each check quantifies over the valuations of W^◇ for a non-central p in
// the context W. Throws PIsCentral for central p and SemanticError when
// p is not a member of W.

/// □p and □¬p: never both true, but both false under some valuation.
RelationVerdict check_contraries(const OrthoLattice& ol, const CenterInfo& c,
                                 const ModalTables& t, const BooleanSubalgebra& w,
                                 ElementId p);

/// ◇p and ◇¬p: never both false, but both true under some valuation.
RelationVerdict check_subcontraries(const OrthoLattice& ol, const CenterInfo& c,
                                    const ModalTables& t, const BooleanSubalgebra& w,
                                    ElementId p);

/// Truth flows downward on both edges of the square.
SubalternVerdicts check_subalterns(const OrthoLattice& ol, const CenterInfo& c,
                                   const ModalTables& t, const BooleanSubalgebra& w,
                                   ElementId p);

/// Each diagonal pair takes exactly one truth value per valuation.
ContradictoryVerdicts check_contradictories(const OrthoLattice& ol, const CenterInfo& c,
                                            const ModalTables& t, const BooleanSubalgebra& w,
                                            ElementId p);

struct SquareReport {
  ElementId element;
  BooleanSubalgebra context;   // W
  BooleanSubalgebra expanded;  // W^◇
  SquareCorners corners;
  RelationVerdict contraries;
  RelationVerdict subcontraries;
  SubalternVerdicts subalterns;
  ContradictoryVerdicts contradictories;

  bool all_hold() const {
    return contraries.holds && subcontraries.holds && subalterns.affirmative.holds &&
           subalterns.negative.holds && contradictories.diamond_pair.holds &&
           contradictories.box_pair.holds;
  }
};

/// Runs all four checks for every context selected by the policy: every
/// subalgebra containing p, only the blocks containing p, or just the
/// minimal context {0, p, ¬p, 1}.
std::vector<SquareReport> square_reports(const OrthoLattice& ol, const CenterInfo& c,
                                         const ModalTables& t, ElementId p,
                                         ContextPolicy policy = ContextPolicy::All,
                                         std::size_t budget = kDefaultEnumerationBudget);

}  // namespace oml
