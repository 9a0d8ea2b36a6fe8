#include "doctest.h"

#include "oml/errors.hpp"
#include "oml/modal.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace oml;
using namespace oml::test;

TEST_CASE("distributive triples on pinned cases") {
  OrthoLattice mo2 = make_mo2();
  ElementId a = mo2.id("a"), a1 = mo2.id("a'"), b = mo2.id("b"), zero = mo2.id("0");
  CHECK(!dist_D(mo2, a, a1, b));  // (a∨a')∧b = b but (a∧b)∨(a'∧b) = 0
  for (ElementId x = 0; x < mo2.size(); ++x)
    for (ElementId y = 0; y < mo2.size(); ++y) CHECK(dist_T(mo2, x, y, zero));

  OrthoLattice cube = make_cube();
  for (ElementId x = 0; x < cube.size(); ++x)
    for (ElementId y = 0; y < cube.size(); ++y)
      for (ElementId z = 0; z < cube.size(); ++z) CHECK(dist_D(cube, x, y, z));
}

TEST_CASE("centrality: fast path, literal definition, and oracle all agree") {
  for (const auto& [name, ol] : oml_fixtures()) {
    INFO("fixture ", name);
    for (ElementId z = 0; z < ol.size(); ++z) {
      bool fast = is_central(ol, z);
      CHECK(fast == is_central_by_distributivity(ol, z));
      CHECK(fast == oracle_is_central(ol, z));
    }
  }
}

TEST_CASE("centers of the fixtures") {
  auto center_names = [](const OrthoLattice& ol) {
    std::vector<std::string> names;
    for (ElementId z : center(ol).members.members()) names.push_back(ol.name(z));
    return names;
  };
  CHECK(center_names(make_mo2()) == std::vector<std::string>{"0", "1"});
  CHECK(center_names(make_mo3()) == std::vector<std::string>{"0", "1"});
  CHECK(center(make_cube()).members.count() == 8);
  CHECK(center_names(make_2xmo2()) ==
        std::vector<std::string>{"0_0", "0_1", "1_0", "1_1"});
  CHECK(center_names(make_g12()) == std::vector<std::string>{"0", "c", "c'", "1"});

  SUBCASE("center algebra carries its atoms") {
    CenterInfo c = center(make_2xmo2());
    REQUIRE(c.algebra.atoms.size() == 2);
    OrthoLattice ol = make_2xmo2();
    CHECK(ol.name(c.algebra.atoms[0]) == "0_1");
    CHECK(ol.name(c.algebra.atoms[1]) == "1_0");
  }
}

TEST_CASE("modal tables match the definitional oracles everywhere") {
  for (const auto& [name, ol] : oml_fixtures()) {
    INFO("fixture ", name);
    CenterInfo c = center(ol);
    ModalTables t = modal_tables(ol, c);
    for (ElementId a = 0; a < ol.size(); ++a) {
      CHECK(t.diamond[a] == oracle_diamond(ol, c.members, a));
      CHECK(t.box[a] == oracle_box(ol, c.members, a));
      CHECK(t.box[a] == ol.neg(t.diamond[ol.neg(a)]));
    }
  }
}

TEST_CASE("pinned modal values") {
  OrthoLattice mo2 = make_mo2();
  ModalTables t = modal_tables(mo2, center(mo2));
  CHECK(t.diamond[mo2.id("a")] == mo2.id("1"));
  CHECK(t.box[mo2.id("a")] == mo2.id("0"));

  OrthoLattice p = make_2xmo2();
  ModalTables tp = modal_tables(p, center(p));
  CHECK(tp.diamond[p.id("1_a")] == p.id("1_1"));
  CHECK(tp.box[p.id("1_a")] == p.id("1_0"));
  CHECK(tp.diamond[p.id("0_a")] == p.id("0_1"));
  CHECK(tp.box[p.id("0_a")] == p.id("0_0"));

  OrthoLattice g = make_g12();
  ModalTables tg = modal_tables(g, center(g));
  CHECK(tg.diamond[g.id("a")] == g.id("c'"));  // a ≤ a∨b = c'
  CHECK(tg.box[g.id("a")] == g.id("0"));
  CHECK(tg.diamond[g.id("d")] == g.id("c'"));
  CHECK(tg.diamond[g.id("c")] == g.id("c"));  // central elements are fixed
}

TEST_CASE("saturation axioms hold on every fixture") {
  for (const auto& [name, ol] : oml_fixtures()) {
    INFO("fixture ", name);
    ModalTables t = modal_tables(ol, center(ol));
    SaturationReport r = check_saturation_axioms(ol, t);
    REQUIRE(r.axioms.size() == 7);
    for (const auto& v : r.axioms) {
      INFO("axiom ", v.axiom);
      CHECK(v.holds);
    }
    CHECK(r.all_hold());
  }
}

TEST_CASE("derived modal properties") {
  for (const auto& [name, ol] : oml_fixtures()) {
    INFO("fixture ", name);
    CenterInfo c = center(ol);
    ModalTables t = modal_tables(ol, c);
    bool identity = true;
    for (ElementId a = 0; a < ol.size(); ++a) {
      CHECK(c.contains(t.diamond[a]));
      CHECK(t.diamond[t.diamond[a]] == t.diamond[a]);
      CHECK(t.box[t.box[a]] == t.box[a]);
      CHECK(ol.leq(t.box[a], a));
      CHECK(ol.leq(a, t.diamond[a]));
      bool fixed = t.diamond[a] == a && t.box[a] == a;
      CHECK(fixed == c.contains(a));
      if (t.diamond[a] != a) identity = false;
      for (ElementId b = 0; b < ol.size(); ++b)
        if (ol.leq(a, b)) CHECK(ol.leq(t.diamond[a], t.diamond[b]));
    }
    // ◇ is the identity exactly on the Boolean fixtures.
    bool boolean_fixture = (name == "2" || name == "2x2" || name == "2x2x2");
    CHECK(identity == boolean_fixture);
  }
}

TEST_CASE("corrupted tables produce a first-counterexample witness") {
  OrthoLattice mo2 = make_mo2();
  ModalTables fake;
  fake.diamond.resize(mo2.size());
  fake.box.resize(mo2.size());
  for (ElementId x = 0; x < mo2.size(); ++x) fake.diamond[x] = fake.box[x] = x;
  SaturationReport r = check_saturation_axioms(mo2, fake);
  // With ◇ = identity on a non-Boolean lattice, exactly S5 breaks; the
  // first offending pair in index order is x = a, y = b.
  for (const auto& v : r.axioms) {
    if (v.axiom == "S5") {
      REQUIRE(!v.holds);
      REQUIRE(v.witness.size() == 2);
      CHECK(mo2.name(v.witness[0]) == "a");
      CHECK(mo2.name(v.witness[1]) == "b");
    } else {
      CHECK(v.holds);
    }
  }
  CHECK(!r.all_hold());
}
