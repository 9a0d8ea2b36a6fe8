#include "oml/square.hpp"

#include "oml/errors.hpp"

namespace oml {

namespace {

struct Env {
  SquareCorners corners;
  std::vector<Valuation> vals;
  BooleanSubalgebra expanded;
};

Env prepare(const OrthoLattice& ol, const CenterInfo& c, const ModalTables& t,
            const BooleanSubalgebra& w, ElementId p) {
  if (c.contains(p)) throw PIsCentral(ol.name(p));
  if (!w.members.test(p))
    throw SemanticError("element '" + ol.name(p) + "' is not in the given context");
  Env e;
  ElementId dp = t.diamond[p], dnp = t.diamond[ol.neg(p)];
  e.corners = {dp, dnp, ol.neg(dnp), ol.neg(dp)};
  e.expanded = expanded_context(ol, w, c.members);
  e.vals = all_valuations(ol, e.expanded);
  return e;
}

// never(v1 && v2), plus optionally some(!v1 && !v2).
RelationVerdict never_both(const Env& e, ElementId x, ElementId y, bool want_both_false) {
  RelationVerdict r;
  for (const Valuation& v : e.vals) {
    if (v.value(x) && v.value(y)) {
      r.holds = false;
      r.violation_atom = v.atom;
      break;
    }
  }
  if (want_both_false) {
    bool found = false;
    for (const Valuation& v : e.vals)
      if (!v.value(x) && !v.value(y)) {
        r.witness_atom = v.atom;
        found = true;
        break;
      }
    if (!found) r.holds = false;
  }
  return r;
}

}  // namespace

RelationVerdict check_contraries(const OrthoLattice& ol, const CenterInfo& c,
                                 const ModalTables& t, const BooleanSubalgebra& w,
                                 ElementId p) {
  Env e = prepare(ol, c, t, w, p);
  return never_both(e, e.corners.box_p, e.corners.box_np, /*want_both_false=*/true);
}

RelationVerdict check_subcontraries(const OrthoLattice& ol, const CenterInfo& c,
                                    const ModalTables& t, const BooleanSubalgebra& w,
                                    ElementId p) {
  Env e = prepare(ol, c, t, w, p);
  RelationVerdict r;
  for (const Valuation& v : e.vals)
    if (!v.value(e.corners.diamond_p) && !v.value(e.corners.diamond_np)) {
      r.holds = false;
      r.violation_atom = v.atom;
      break;
    }
  bool found = false;
  for (const Valuation& v : e.vals)
    if (v.value(e.corners.diamond_p) && v.value(e.corners.diamond_np)) {
      r.witness_atom = v.atom;
      found = true;
      break;
    }
  if (!found) r.holds = false;
  return r;
}

SubalternVerdicts check_subalterns(const OrthoLattice& ol, const CenterInfo& c,
                                   const ModalTables& t, const BooleanSubalgebra& w,
                                   ElementId p) {
  Env e = prepare(ol, c, t, w, p);
  auto implication = [&](ElementId upper, ElementId lower) {
    RelationVerdict r;
    for (const Valuation& v : e.vals)
      if (v.value(upper) && !v.value(lower)) {
        r.holds = false;
        r.violation_atom = v.atom;
        break;
      }
    return r;
  };
  return {implication(e.corners.box_p, e.corners.diamond_p),
          implication(e.corners.box_np, e.corners.diamond_np)};
}

ContradictoryVerdicts check_contradictories(const OrthoLattice& ol, const CenterInfo& c,
                                            const ModalTables& t, const BooleanSubalgebra& w,
                                            ElementId p) {
  Env e = prepare(ol, c, t, w, p);
  auto exactly_one = [&](ElementId x, ElementId y) {
    RelationVerdict r;
    for (const Valuation& v : e.vals)
      if (v.value(x) == v.value(y)) {
        r.holds = false;
        r.violation_atom = v.atom;
        break;
      }
    return r;
  };
  return {exactly_one(e.corners.diamond_p, ol.neg(e.corners.diamond_p)),
          exactly_one(e.corners.box_p, e.corners.diamond_np)};
}

std::vector<SquareReport> square_reports(const OrthoLattice& ol, const CenterInfo& c,
                                         const ModalTables& t, ElementId p,
                                         ContextPolicy policy, std::size_t budget) {
  if (c.contains(p)) throw PIsCentral(ol.name(p));

  std::vector<BooleanSubalgebra> contexts;
  switch (policy) {
    case ContextPolicy::All:
      contexts = enumerate_boolean_subalgebras(ol, p, budget);
      break;
    case ContextPolicy::Blocks:
      for (auto& b : blocks(ol, budget))
        if (b.members.test(p)) contexts.push_back(std::move(b));
      break;
    case ContextPolicy::Minimal:
      contexts.push_back(
          as_subalgebra(ol, generated_subalgebra(ol, Bitset::single(ol.size(), p))));
      break;
  }

  std::vector<SquareReport> reports;
  reports.reserve(contexts.size());
  for (const BooleanSubalgebra& w : contexts) {
    SquareReport r;
    r.element = p;
    r.context = w;
    ElementId dp = t.diamond[p], dnp = t.diamond[ol.neg(p)];
    r.corners = {dp, dnp, ol.neg(dnp), ol.neg(dp)};
    r.expanded = expanded_context(ol, w, c.members);
    r.contraries = check_contraries(ol, c, t, w, p);
    r.subcontraries = check_subcontraries(ol, c, t, w, p);
    r.subalterns = check_subalterns(ol, c, t, w, p);
    r.contradictories = check_contradictories(ol, c, t, w, p);
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace oml
