#include "doctest.h"

#include <algorithm>

#include "oml/contexts.hpp"
#include "oml/errors.hpp"
#include "oml/modal.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace oml;
using namespace oml::test;

namespace {

Bitset named_set(const OrthoLattice& ol, const std::vector<std::string>& names) {
  Bitset s(ol.size());
  for (const auto& n : names) s.set(ol.id(n));
  return s;
}

}  // namespace

TEST_CASE("subalgebra enumeration matches the full subset-scan oracle") {
  for (const auto& [name, ol] : oml_fixtures()) {
    INFO("fixture ", name);
    std::vector<BooleanSubalgebra> found = enumerate_boolean_subalgebras(ol);
    std::vector<Bitset> expected = oracle_all_subalgebras(ol);
    REQUIRE(found.size() == expected.size());
    for (const auto& b : found)
      CHECK(std::count(expected.begin(), expected.end(), b.members) == 1);
    // Sorted by size, then by member sequence.
    for (std::size_t i = 1; i < found.size(); ++i)
      CHECK(found[i - 1].members.count() <= found[i].members.count());
  }
}

TEST_CASE("pinned enumerations") {
  OrthoLattice mo2 = make_mo2();
  auto subs = enumerate_boolean_subalgebras(mo2);
  REQUIRE(subs.size() == 3);
  CHECK(subs[0].members == named_set(mo2, {"0", "1"}));
  CHECK(subs[1].members == named_set(mo2, {"0", "a", "a'", "1"}));
  CHECK(subs[2].members == named_set(mo2, {"0", "b", "b'", "1"}));

  auto with_a = enumerate_boolean_subalgebras(mo2, mo2.id("a"));
  REQUIRE(with_a.size() == 1);
  CHECK(with_a[0].members == named_set(mo2, {"0", "a", "a'", "1"}));

  CHECK(enumerate_boolean_subalgebras(make_square()).size() == 2);
  CHECK_THROWS_AS(enumerate_boolean_subalgebras(mo2, std::nullopt, 2), BudgetExceeded);
}

TEST_CASE("blocks") {
  CHECK(blocks(make_mo2()).size() == 2);
  CHECK(blocks(make_mo3()).size() == 3);
  auto cube_blocks = blocks(make_cube());
  REQUIRE(cube_blocks.size() == 1);
  CHECK(cube_blocks[0].members.count() == 8);

  OrthoLattice g = make_g12();
  auto g_blocks = blocks(g);
  REQUIRE(g_blocks.size() == 2);
  CHECK(g_blocks[0].members.count() == 8);
  CHECK(g_blocks[1].members.count() == 8);
  Bitset shared = g_blocks[0].members & g_blocks[1].members;
  CHECK(shared == named_set(g, {"0", "c", "c'", "1"}));

  CHECK(blocks(make_2xmo2()).size() == 2);

  SUBCASE("every subalgebra lies inside some block") {
    for (const auto& [name, ol] : oml_fixtures()) {
      INFO("fixture ", name);
      auto all = enumerate_boolean_subalgebras(ol);
      auto maximal = blocks(ol);
      for (const auto& s : all) {
        bool inside = false;
        for (const auto& b : maximal)
          if (s.members.is_subset_of(b.members)) inside = true;
        CHECK(inside);
      }
    }
  }
}

TEST_CASE("expanded contexts") {
  OrthoLattice mo2 = make_mo2();
  Bitset z_mo2 = center(mo2).members;
  BooleanSubalgebra w = as_subalgebra(mo2, named_set(mo2, {"0", "a", "a'", "1"}));
  CHECK(expanded_context(mo2, w, z_mo2).members == w.members);

  BooleanSubalgebra bounds = as_subalgebra(mo2, named_set(mo2, {"0", "1"}));
  CHECK(expanded_context(mo2, bounds, z_mo2).members == z_mo2);

  OrthoLattice p = make_2xmo2();
  Bitset z_p = center(p).members;
  BooleanSubalgebra wp =
      as_subalgebra(p, generated_subalgebra(p, Bitset::single(p.size(), p.id("1_a"))));
  CHECK(wp.members.count() == 4);
  BooleanSubalgebra expanded = expanded_context(p, wp, z_p);
  CHECK(expanded.members ==
        named_set(p, {"0_0", "0_a", "0_a'", "0_1", "1_0", "1_a", "1_a'", "1_1"}));
  REQUIRE(expanded.atoms.size() == 3);
  CHECK(p.name(expanded.atoms[0]) == "0_a");
  CHECK(p.name(expanded.atoms[1]) == "0_a'");
  CHECK(p.name(expanded.atoms[2]) == "1_0");

  SUBCASE("least Boolean subalgebra containing the context and the center") {
    for (const auto& [name, ol] : oml_fixtures()) {
      INFO("fixture ", name);
      Bitset z = center(ol).members;
      auto all = enumerate_boolean_subalgebras(ol);
      for (const auto& s : all) {
        BooleanSubalgebra e = expanded_context(ol, s, z);
        CHECK(s.members.is_subset_of(e.members));
        CHECK(z.is_subset_of(e.members));
        for (const auto& other : all)
          if (s.members.is_subset_of(other.members) && z.is_subset_of(other.members))
            CHECK(e.members.is_subset_of(other.members));
      }
    }
  }

  SUBCASE("a context united with the center forms a Greechie set") {
    for (const auto& [name, ol] : oml_fixtures()) {
      INFO("fixture ", name);
      Bitset z = center(ol).members;
      for (const auto& s : enumerate_boolean_subalgebras(ol))
        CHECK(is_greechie_set(ol, s.members | z));
    }
  }
}

TEST_CASE("maximal filters") {
  OrthoLattice mo2 = make_mo2();
  BooleanSubalgebra bounds = as_subalgebra(mo2, named_set(mo2, {"0", "1"}));
  auto f0 = maximal_filters(mo2, bounds);
  REQUIRE(f0.size() == 1);
  CHECK(f0[0] == named_set(mo2, {"1"}));

  BooleanSubalgebra ab = as_subalgebra(mo2, named_set(mo2, {"0", "a", "a'", "1"}));
  auto f1 = maximal_filters(mo2, ab);
  REQUIRE(f1.size() == 2);
  CHECK(f1[0] == named_set(mo2, {"a", "1"}));
  CHECK(f1[1] == named_set(mo2, {"a'", "1"}));

  OrthoLattice cube = make_cube();
  BooleanSubalgebra all8 = as_subalgebra(cube, Bitset::full(cube.size()));
  auto f2 = maximal_filters(cube, all8);
  REQUIRE(f2.size() == 3);
  for (const auto& f : f2) CHECK(f.count() == 4);
}

TEST_CASE("valuations") {
  OrthoLattice mo2 = make_mo2();
  BooleanSubalgebra ab = as_subalgebra(mo2, named_set(mo2, {"0", "a", "a'", "1"}));

  SUBCASE("from filter, with pinned values") {
    Valuation v = valuation_from_filter(mo2, ab, named_set(mo2, {"a", "1"}));
    CHECK(v.atom == mo2.id("a"));
    CHECK(v.value(mo2.id("a")));
    CHECK(!v.value(mo2.id("a'")));
    CHECK(v.value(mo2.id("1")));
    CHECK(!v.value(mo2.id("0")));
  }
  SUBCASE("rejects non-filters and non-maximal filters") {
    CHECK_THROWS_AS(valuation_from_filter(mo2, ab, named_set(mo2, {"a"})), NotAFilter);
    CHECK_THROWS_AS(valuation_from_filter(mo2, ab, named_set(mo2, {"0", "a", "1"})),
                    NotAFilter);
    CHECK_THROWS_AS(valuation_from_filter(mo2, ab, Bitset(mo2.size())), NotAFilter);
    CHECK_THROWS_AS(valuation_from_filter(mo2, ab, named_set(mo2, {"1"})), NotMaximal);
  }
  SUBCASE("counts, separation, and homomorphism laws across all fixtures") {
    for (const auto& [name, ol] : oml_fixtures()) {
      INFO("fixture ", name);
      for (const auto& b : enumerate_boolean_subalgebras(ol)) {
        auto vals = all_valuations(ol, b);
        CHECK(vals.size() == b.atoms.size());
        auto m = b.members.members();
        for (ElementId x : m)
          for (ElementId y : m) {
            if (x != y) {
              bool separated = false;
              for (const auto& v : vals)
                if (v.value(x) != v.value(y)) separated = true;
              CHECK(separated);
            }
            for (const auto& v : vals) {
              CHECK(v.value(ol.meet(x, y)) == (v.value(x) && v.value(y)));
              CHECK(v.value(ol.join(x, y)) == (v.value(x) || v.value(y)));
            }
          }
        for (const auto& v : vals)
          for (ElementId x : m) CHECK(v.value(ol.neg(x)) == !v.value(x));
      }
    }
  }
}
