#include "oml/modal.hpp"

#include "oml/errors.hpp"

namespace oml {

bool dist_D(const OrthoLattice& ol, ElementId a, ElementId b, ElementId c) {
  return ol.meet(ol.join(a, b), c) == ol.join(ol.meet(a, c), ol.meet(b, c));
}

bool dist_Dstar(const OrthoLattice& ol, ElementId a, ElementId b, ElementId c) {
  return ol.join(ol.meet(a, b), c) == ol.meet(ol.join(a, c), ol.join(b, c));
}

bool dist_T(const OrthoLattice& ol, ElementId a, ElementId b, ElementId c) {
  const ElementId perm[6][3] = {{a, b, c}, {a, c, b}, {b, a, c},
                                {b, c, a}, {c, a, b}, {c, b, a}};
  for (const auto& p : perm)
    if (!dist_D(ol, p[0], p[1], p[2]) || !dist_Dstar(ol, p[0], p[1], p[2])) return false;
  return true;
}

namespace {

bool complemented_by_neg(const OrthoLattice& ol, ElementId z) {
  return ol.meet(z, ol.neg(z)) == ol.bottom() && ol.join(z, ol.neg(z)) == ol.top();
}

}  // namespace

bool is_central(const OrthoLattice& ol, ElementId z) {
  if (!complemented_by_neg(ol, z)) return false;
  for (ElementId x = 0; x < ol.size(); ++x)
    if (!commutes(ol, z, x) || !commutes(ol, x, z)) return false;
  return true;
}

bool is_central_by_distributivity(const OrthoLattice& ol, ElementId z) {
  if (!complemented_by_neg(ol, z)) return false;
  for (ElementId a = 0; a < ol.size(); ++a)
    for (ElementId b = 0; b < ol.size(); ++b)
      if (!dist_T(ol, a, b, z)) return false;
  return true;
}

CenterInfo center(const OrthoLattice& ol) {
  CenterInfo c;
  c.members = Bitset(ol.size());
  for (ElementId z = 0; z < ol.size(); ++z)
    if (is_central(ol, z)) c.members.set(z);
  if (!is_boolean_subalgebra(ol, c.members)) throw CenterNotBoolean();
  c.algebra = as_subalgebra(ol, c.members);
  return c;
}

ModalTables modal_tables(const OrthoLattice& ol, const CenterInfo& c) {
  const std::size_t n = ol.size();
  ModalTables t;
  t.diamond.resize(n);
  t.box.resize(n);
  for (ElementId a = 0; a < n; ++a) {
    Bitset central_above = ol.up_set(a) & c.members;
    ElementId d = ol.base().meet_of(central_above);  // top is always central
    if (!c.members.test(d) || !ol.leq(a, d)) throw NotSaturated(ol.name(a));
    t.diamond[a] = d;
  }
  for (ElementId a = 0; a < n; ++a) {
    t.box[a] = ol.neg(t.diamond[ol.neg(a)]);
    // Same operator from the other side: greatest central element below a.
    Bitset central_below = ol.down_set(a) & c.members;
    ElementId b = ol.base().join_of(central_below);
    if (b != t.box[a]) throw NotSaturated(ol.name(a));
  }
  return t;
}

SaturationReport check_saturation_axioms(const OrthoLattice& ol, const ModalTables& t) {
  const std::size_t n = ol.size();
  auto dia = [&](ElementId x) { return t.diamond[x]; };

  SaturationReport r;
  auto check1 = [&](const char* name, auto law) {
    AxiomVerdict v{name, true, {}};
    for (ElementId x = 0; x < n && v.holds; ++x)
      if (!law(x)) v = {name, false, {x}};
    r.axioms.push_back(v);
  };
  auto check2 = [&](const char* name, auto law) {
    AxiomVerdict v{name, true, {}};
    for (ElementId x = 0; x < n && v.holds; ++x)
      for (ElementId y = 0; y < n; ++y)
        if (!law(x, y)) {
          v = {name, false, {x, y}};
          break;
        }
    r.axioms.push_back(v);
  };

  check1("S1", [&](ElementId x) { return ol.leq(x, dia(x)); });
  {
    AxiomVerdict v{"S2", true, {}};
    if (dia(ol.bottom()) != ol.bottom()) v = {"S2", false, {ol.bottom()}};
    r.axioms.push_back(v);
  }
  check1("S3", [&](ElementId x) { return dia(dia(x)) == dia(x); });
  check2("S4", [&](ElementId x, ElementId y) {
    return dia(ol.join(x, y)) == ol.join(dia(x), dia(y));
  });
  check2("S5", [&](ElementId x, ElementId y) {
    return y == ol.join(ol.meet(y, dia(x)), ol.meet(y, ol.neg(dia(x))));
  });
  check2("S6", [&](ElementId x, ElementId y) {
    return dia(ol.meet(x, dia(y))) == ol.meet(dia(x), dia(y));
  });
  check2("S7", [&](ElementId x, ElementId y) {
    return ol.leq(ol.meet(ol.neg(dia(x)), dia(y)),
                  dia(ol.meet(ol.neg(x), ol.join(y, x))));
  });
  return r;
}

}  // namespace oml
