#include "doctest.h"

#include "oml/errors.hpp"
#include "oml/format.hpp"

#include "fixtures.hpp"

using namespace oml;
using namespace oml::test;

namespace {

const char* kMo2Text = R"(# two incomparable atom/coatom pairs plus bounds
lattice mo2
elements: 0 a a' b b' 1
bottom: 0
top: 1
covers: 0<a, 0<a', 0<b, 0<b', a<1, a'<1, b<1, b'<1
ortho: 0:1, a:a', a':a, b:b', b':b, 1:0
)";

// Same names and structure, possibly different index order.
bool iso_by_names(const OrthoLattice& x, const OrthoLattice& y) {
  if (x.size() != y.size()) return false;
  std::vector<ElementId> map(x.size());
  for (ElementId i = 0; i < x.size(); ++i) {
    auto j = y.find(x.name(i));
    if (!j) return false;
    map[i] = *j;
  }
  for (ElementId a = 0; a < x.size(); ++a) {
    if (map[x.neg(a)] != y.neg(map[a])) return false;
    for (ElementId b = 0; b < x.size(); ++b)
      if (x.leq(a, b) != y.leq(map[a], map[b])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parse and realize a document") {
  LatticeDocument doc = parse_oml(kMo2Text);
  CHECK(doc.name == "mo2");
  CHECK(doc.elements.size() == 6);
  CHECK(doc.covers.size() == 8);
  CHECK(doc.ortho.size() == 6);
  OrthoLattice ol = realize(doc);
  CHECK(iso_by_names(ol, make_mo2()));
}

TEST_CASE("round trips") {
  LatticeDocument doc = parse_oml(kMo2Text);
  CHECK(parse_oml(emit_oml(doc)) == doc);
  std::string canonical = emit_oml(doc);
  CHECK(emit_oml(parse_oml(canonical)) == canonical);

  SUBCASE("document_from produces the identical structure for each fixture") {
    for (const auto& [name, ol] : oml_fixtures()) {
      INFO("fixture ", name);
      LatticeDocument d = document_from(name, ol);
      CHECK(parse_oml(emit_oml(d)) == d);
      CHECK(iso_by_names(realize(d), ol));
    }
  }
}

TEST_CASE("input flexibility: comments, blank lines, repeated sections") {
  const char* text = R"(
# header comment
lattice square   # trailing comment

elements: 0 a
elements: b 1
bottom: 0
top: 1
covers: 0<a, 0<b
covers: a<1
covers: b<1
ortho: 0:1, a:b
ortho: b:a, 1:0
)";
  LatticeDocument doc = parse_oml(text);
  CHECK(doc.name == "square");
  CHECK(doc.elements == std::vector<std::string>{"0", "a", "b", "1"});
  OrthoLattice ol = realize(doc);
  CHECK(iso_by_names(ol, make_square()));
}

TEST_CASE("syntax errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_oml(text);
    } catch (const SyntaxError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("covers: a<b\n") == 1);                       // no header
  CHECK(line_of("lattice x\nwhat: ever\n") == 2);             // unknown section
  CHECK(line_of("lattice x\ncovers: a<b<c\n") == 2);          // malformed pair
  CHECK(line_of("lattice x\nbottom: 0\nbottom: 0\n") == 3);   // duplicate
  CHECK(line_of("lattice x\nlattice y\n") == 2);              // second header
  // Missing sections are reported at end of input.
  CHECK(line_of("lattice x\n") == 1);
  CHECK_THROWS_AS(parse_oml("lattice x\nbottom: 0\ntop: 0\n"), SyntaxError);
}

TEST_CASE("semantic errors") {
  // Asymmetric ortho: a:b without b:a.
  CHECK_THROWS_AS(parse_oml("lattice x\nelements: 0 a b 1\nbottom: 0\ntop: 1\n"
                            "covers: 0<a, 0<b, a<1, b<1\n"
                            "ortho: 0:1, 1:0, a:b, b:b\n"),
                  SemanticError);
  // Missing ortho entry for b.
  CHECK_THROWS_AS(parse_oml("lattice x\nelements: 0 a b 1\nbottom: 0\ntop: 1\n"
                            "covers: 0<a, 0<b, a<1, b<1\n"
                            "ortho: 0:1, 1:0, a:b\n"),
                  SemanticError);
  // Conflicting entries for a.
  CHECK_THROWS_AS(parse_oml("lattice x\nelements: 0 a b 1\nbottom: 0\ntop: 1\n"
                            "covers: 0<a, 0<b, a<1, b<1\n"
                            "ortho: 0:1, 1:0, a:b, a:1, b:a\n"),
                  SemanticError);
  // Unknown element in covers.
  CHECK_THROWS_AS(parse_oml("lattice x\nelements: 0 1\nbottom: 0\ntop: 1\n"
                            "covers: 0<z\northo: 0:1, 1:0\n"),
                  SemanticError);
  // Duplicate element.
  CHECK_THROWS_AS(parse_oml("lattice x\nelements: 0 a a 1\nbottom: 0\ntop: 1\n"
                            "covers: 0<a, a<1\northo: 0:1, 1:0, a:a\n"),
                  SemanticError);
}

TEST_CASE("realize cross-checks declared bounds and ortho laws") {
  // Declared bottom is not the computed one.
  CHECK_THROWS_AS(realize(parse_oml("lattice x\nelements: 0 1\nbottom: 1\ntop: 0\n"
                                    "covers: 0<1\northo: 0:1, 1:0\n")),
                  SemanticError);
  // Symmetric but lawless negation: 0:0, 1:1 breaks the complement law.
  CHECK_THROWS_AS(realize(parse_oml("lattice x\nelements: 0 1\nbottom: 0\ntop: 1\n"
                                    "covers: 0<1\northo: 0:0, 1:1\n")),
                  ComplementViolation);
  // Size cap.
  CHECK_THROWS_AS(realize(parse_oml(kMo2Text), 4), LatticeTooLarge);
}
