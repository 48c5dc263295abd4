#include "doctest.h"
#include "support.hpp"
#include "vty/error.hpp"
#include "vty/variety/formula_map.hpp"

using vty::testing::F;
using vty::testing::set_of;
using vty::variety::FormulaMap;

TEST_CASE("identity and renaming maps") {
  CHECK(FormulaMap::identity().apply(F("(-> p q)")) == F("(-> p q)"));
  auto ren = FormulaMap::renaming({{"a", "p"}});
  CHECK(ren.apply(F("(and a (not b))")) == F("(and p (not b))"));
}

TEST_CASE("table maps are partial") {
  auto m = FormulaMap::table({{F("x"), F("p")}, {F("(not x)"), F("(not p)")}});
  CHECK(m.apply(F("x")) == F("p"));
  CHECK_FALSE(m.try_apply(F("y")).has_value());
  try {
    m.apply(F("y"));
    FAIL("expected MAP_UNDEFINED");
  } catch (const vty::Error& e) {
    CHECK(e.code() == vty::ErrorCode::MapUndefined);
  }
  CHECK_THROWS_AS(FormulaMap::table({{F("x"), F("p")}, {F("x"), F("q")}}), vty::Error);
}

TEST_CASE("domain restriction applies to renamings") {
  auto m = FormulaMap::renaming({{"a", "p"}}, set_of({"a"}));
  CHECK(m.apply(F("a")) == F("p"));
  CHECK_FALSE(m.defined_on(F("(not a)")));
  CHECK(m.image_of_defined(set_of({"a", "(not a)"})) == set_of({"p"}));
}

TEST_CASE("collisions are found") {
  auto m = FormulaMap::renaming({{"a", "p"}});
  auto hit = m.collision(set_of({"a", "p", "q"}));
  REQUIRE(hit.has_value());
  CHECK(m.apply(hit->first) == m.apply(hit->second));
  CHECK_FALSE(FormulaMap::identity().collision(set_of({"a", "p"})).has_value());
}
