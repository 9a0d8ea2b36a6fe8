#pragma once

// The fixture lattices every suite runs against, built programmatically so
// the tests do not depend on the file format. The product fixture doubles
// as an independent construction of the corpus entry built by pasting.

#include <string>
#include <utility>
#include <vector>

#include "oml/lattice.hpp"
#include "oml/ortho.hpp"

namespace oml::test {

inline OrthoLattice make_ortho(const std::vector<std::string>& names,
                               const std::vector<std::pair<std::string, std::string>>& covers,
                               const std::vector<std::pair<std::string, std::string>>& neg_pairs) {
  Lattice lat = Lattice::build(names, covers);
  std::vector<ElementId> neg(lat.size(), lat.size());
  for (const auto& [x, y] : neg_pairs) {
    neg[lat.id(x)] = lat.id(y);
    neg[lat.id(y)] = lat.id(x);
  }
  return OrthoLattice::attach(std::move(lat), std::move(neg));
}

// The two-element chain.
inline OrthoLattice make_chain2() {
  return make_ortho({"0", "1"}, {{"0", "1"}}, {{"0", "1"}});
}

// 2^2, the diamond.
inline OrthoLattice make_square() {
  return make_ortho({"0", "a", "b", "1"},
                    {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}},
                    {{"0", "1"}, {"a", "b"}});
}

// 2^3 with atoms a, b, c and coatoms a' = b∨c etc.
inline OrthoLattice make_cube() {
  return make_ortho(
      {"0", "a", "b", "c", "a'", "b'", "c'", "1"},
      {{"0", "a"}, {"0", "b"}, {"0", "c"},
       {"a", "b'"}, {"a", "c'"}, {"b", "a'"}, {"b", "c'"}, {"c", "a'"}, {"c", "b'"},
       {"a'", "1"}, {"b'", "1"}, {"c'", "1"}},
      {{"0", "1"}, {"a", "a'"}, {"b", "b'"}, {"c", "c'"}});
}

// Two incomparable complementary pairs plus bounds: the smallest
// non-Boolean orthomodular lattice.
inline OrthoLattice make_mo2() {
  return make_ortho({"0", "a", "a'", "b", "b'", "1"},
                    {{"0", "a"}, {"0", "a'"}, {"0", "b"}, {"0", "b'"},
                     {"a", "1"}, {"a'", "1"}, {"b", "1"}, {"b'", "1"}},
                    {{"0", "1"}, {"a", "a'"}, {"b", "b'"}});
}

// Three incomparable complementary pairs plus bounds.
inline OrthoLattice make_mo3() {
  return make_ortho({"0", "a", "a'", "b", "b'", "c", "c'", "1"},
                    {{"0", "a"}, {"0", "a'"}, {"0", "b"}, {"0", "b'"}, {"0", "c"}, {"0", "c'"},
                     {"a", "1"}, {"a'", "1"}, {"b", "1"}, {"b'", "1"}, {"c", "1"}, {"c'", "1"}},
                    {{"0", "1"}, {"a", "a'"}, {"b", "b'"}, {"c", "c'"}});
}

// The benzene ring: a valid ortholattice that is not orthomodular.
inline OrthoLattice make_o6() {
  return make_ortho({"0", "a", "b", "b'", "a'", "1"},
                    {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "b'"}, {"b'", "a'"}, {"a'", "1"}},
                    {{"0", "1"}, {"a", "a'"}, {"b", "b'"}});
}

// Direct product with componentwise order and negation. Element (x, y) is
// named "<name x>_<name y>"; the left factor varies slowest.
inline OrthoLattice make_product(const OrthoLattice& A, const OrthoLattice& B) {
  const std::size_t na = A.size(), nb = B.size();
  std::vector<std::string> names;
  names.reserve(na * nb);
  for (ElementId a = 0; a < na; ++a)
    for (ElementId b = 0; b < nb; ++b) names.push_back(A.name(a) + "_" + B.name(b));

  std::vector<std::pair<ElementId, ElementId>> edges;
  for (ElementId a1 = 0; a1 < na; ++a1)
    for (ElementId b1 = 0; b1 < nb; ++b1)
      for (ElementId a2 = 0; a2 < na; ++a2)
        for (ElementId b2 = 0; b2 < nb; ++b2) {
          ElementId i = a1 * nb + b1, j = a2 * nb + b2;
          if (i != j && A.leq(a1, a2) && B.leq(b1, b2)) edges.emplace_back(i, j);
        }
  Lattice lat = Lattice::build_from_ids(std::move(names), edges);

  std::vector<ElementId> neg(na * nb);
  for (ElementId a = 0; a < na; ++a)
    for (ElementId b = 0; b < nb; ++b) neg[a * nb + b] = A.neg(a) * nb + B.neg(b);
  return OrthoLattice::attach(std::move(lat), std::move(neg));
}

inline OrthoLattice make_2xmo2() { return make_product(make_chain2(), make_mo2()); }

// Two 2^3 blocks pasted at the shared atom c (so c' = a∨b = d∨e).
inline OrthoLattice make_g12() {
  return make_ortho(
      {"0", "a", "b", "c", "d", "e", "a'", "b'", "c'", "d'", "e'", "1"},
      {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"0", "d"}, {"0", "e"},
       {"a", "b'"}, {"a", "c'"}, {"b", "a'"}, {"b", "c'"},
       {"c", "a'"}, {"c", "b'"}, {"c", "d'"}, {"c", "e'"},
       {"d", "c'"}, {"d", "e'"}, {"e", "c'"}, {"e", "d'"},
       {"a'", "1"}, {"b'", "1"}, {"c'", "1"}, {"d'", "1"}, {"e'", "1"}},
      {{"0", "1"}, {"a", "a'"}, {"b", "b'"}, {"c", "c'"}, {"d", "d'"}, {"e", "e'"}});
}

/// All the valid orthomodular fixtures, i.e. everything except O6.
inline std::vector<std::pair<std::string, OrthoLattice>> oml_fixtures() {
  std::vector<std::pair<std::string, OrthoLattice>> v;
  v.emplace_back("2", make_chain2());
  v.emplace_back("2x2", make_square());
  v.emplace_back("2x2x2", make_cube());
  v.emplace_back("mo2", make_mo2());
  v.emplace_back("mo3", make_mo3());
  v.emplace_back("2xmo2", make_2xmo2());
  v.emplace_back("g12", make_g12());
  return v;
}

}  // namespace oml::test
