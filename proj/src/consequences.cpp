#include "oml/consequences.hpp"

#include "oml/errors.hpp"

namespace oml {

namespace {

// Remove from `keep` every central z refuted by some valuation of the
// expanded context that makes p true.
void refute_over_context(const OrthoLattice& ol, const CenterInfo& c,
                         const BooleanSubalgebra& w, ElementId p, Bitset& keep) {
  BooleanSubalgebra expanded = expanded_context(ol, w, c.members);
  for (const Valuation& v : all_valuations(ol, expanded)) {
    if (!v.value(p)) continue;
    for (ElementId z : keep.members())
      if (!v.value(z)) keep.reset(z);
  }
}

}  // namespace

ConsequenceSet consequences_by_definition(const OrthoLattice& ol, const CenterInfo& c,
                                          ElementId p, std::size_t budget) {
  Bitset keep = c.members;
  for (const BooleanSubalgebra& w : enumerate_boolean_subalgebras(ol, p, budget))
    refute_over_context(ol, c, w, p, keep);
  return {p, keep, ConsequenceMethod::Definition};
}

ConsequenceSet consequences_within_context(const OrthoLattice& ol, const CenterInfo& c,
                                           const BooleanSubalgebra& w, ElementId p) {
  if (!w.members.test(p))
    throw SemanticError("element '" + ol.name(p) + "' is not in the given context");
  Bitset keep = c.members;
  refute_over_context(ol, c, w, p, keep);
  return {p, keep, ConsequenceMethod::Definition};
}

ConsequenceSet consequences_by_order(const OrthoLattice& ol, const CenterInfo& c,
                                     ElementId p) {
  return {p, ol.up_set(p) & c.members, ConsequenceMethod::Order};
}

ConsequenceSet consequences_by_diamond(const OrthoLattice& ol, const CenterInfo& c,
                                       const ModalTables& t, ElementId p) {
  return {p, ol.up_set(t.diamond[p]) & c.members, ConsequenceMethod::Diamond};
}

ConsequenceAgreement check_consequence_agreement(const OrthoLattice& ol, const CenterInfo& c,
                                                 const ModalTables& t, ElementId p,
                                                 std::size_t budget) {
  ConsequenceAgreement a;
  a.of = p;
  a.by_definition = consequences_by_definition(ol, c, p, budget).members;
  a.by_order = consequences_by_order(ol, c, p).members;
  a.by_diamond = consequences_by_diamond(ol, c, t, p).members;
  for (ElementId z = 0; z < ol.size(); ++z) {
    bool d = a.by_definition.test(z), o = a.by_order.test(z), m = a.by_diamond.test(z);
    if (d != o || o != m) {
      a.holds = false;
      a.disagreement = z;
      break;
    }
  }
  return a;
}

ModalCollapseVerdict check_modal_collapse(const OrthoLattice& ol, const CenterInfo& c,
                                          const ModalTables& t, ElementId p) {
  ModalCollapseVerdict v;
  v.of = p;
  v.overlap = ol.meet(t.diamond[p], t.diamond[ol.neg(p)]);
  v.antecedent = v.overlap == ol.bottom();
  v.central = c.contains(p);
  v.holds = !v.antecedent || v.central;
  return v;
}

}  // namespace oml
