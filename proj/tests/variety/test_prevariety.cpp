#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "vty/error.hpp"

using namespace vty::variety;
using namespace vty::testing;
using vty::logic::parse_schema;

namespace {

bool has_code(const CheckReport& r, DiagnosticCode code) {
  return std::any_of(r.diagnostics.begin(), r.diagnostics.end(),
                     [&](const Diagnostic& d) { return d.code == code; });
}

}  // namespace

TEST_CASE("assembled triad is the union of transported parts") {
  auto pv = assemble_prevariety(shared_core_components());
  CHECK(pv.axioms == set_of({"p", "(-> p q)", "(-> q r)"}));
  CHECK(pv.theorems == set_of({"p", "(-> p q)", "q"}));
  REQUIRE(pv.rules.size() == 1);
  CHECK(pv.rules[0].name() == "mp");
  auto report = check_prevariety(pv);
  CHECK(report.pass);
  CHECK(report.diagnostics.empty());
  CHECK(report.equations.at("A") == "holds");
}

TEST_CASE("duplicate components collapse") {
  auto cs = shared_core_components();
  auto once = assemble_prevariety(cs);
  cs.push_back(cs[0]);
  auto twice = assemble_prevariety(cs);
  CHECK(once.axioms == twice.axioms);
  CHECK(once.theorems == twice.theorems);
  CHECK(check_prevariety(twice).pass);
}

TEST_CASE("assemble rejects undefined maps and conflicting rules") {
  auto c = component("K1", {"x"}, {"x"});
  c.axiom_map = FormulaMap::table({{F("y"), F("p")}});
  try {
    assemble_prevariety({c});
    FAIL("expected MAP_UNDEFINED");
  } catch (const vty::Error& e) {
    CHECK(e.code() == vty::ErrorCode::MapUndefined);
    CHECK(std::string(e.what()).find("K1") != std::string::npos);
  }

  auto a = component("K1", {"p"}, {"p"});
  auto b = component("K2", {"q"}, {"q"});
  b.calculus.rules = {InferenceRule::schema("mp", {parse_schema("A")}, parse_schema("(not A)"))};
  CHECK_THROWS_AS(assemble_prevariety({a, b}), vty::Error);
}

TEST_CASE("mismatches are localized") {
  auto pv = assemble_prevariety(shared_core_components());
  pv.axioms.insert(F("s"));
  auto report = check_prevariety(pv);
  CHECK_FALSE(report.pass);
  REQUIRE(report.diagnostics.size() == 1);
  CHECK(report.diagnostics[0].code == DiagnosticCode::AxiomUnionMismatch);
  CHECK(report.diagnostics[0].subject == "s");
  CHECK(report.equations.at("A") == "fails");
  CHECK(report.equations.at("M") == "holds");
}

TEST_CASE("designated theorems must be derivable unless quasi") {
  auto c = component("K1", {"p"}, {"p", "q"});
  auto pv = assemble_prevariety({c});
  auto report = check_prevariety(pv);
  CHECK_FALSE(report.pass);
  REQUIRE(report.diagnostics.size() == 1);
  CHECK(report.diagnostics[0].code == DiagnosticCode::NotATheorem);
  CHECK(report.diagnostics[0].component == "K1");
  CHECK(report.diagnostics[0].subject == "q");
  pv.quasi = true;
  CHECK(check_prevariety(pv).pass);
}

TEST_CASE("conflicting component ids are reported") {
  auto pv = assemble_prevariety({component("K1", {"p"}, {"p"})});
  pv.components.push_back(component("K1", {"q"}, {"q"}));
  CHECK(has_code(check_prevariety(pv), DiagnosticCode::ComponentIdConflict));
}

TEST_CASE("property: assembled prevarieties check") {
  Gen gen(0x5eed01);
  for (int trial = 0; trial < 120; ++trial) {
    auto cs = random_components(gen);
    auto report = check_prevariety(assemble_prevariety(cs));
    CHECK_MESSAGE(report.pass, "trial " << trial);
  }
}

TEST_CASE("property: deleting a triad element is detected and named") {
  Gen gen(0x5eed02);
  for (int trial = 0; trial < 60; ++trial) {
    auto pv = assemble_prevariety(random_components(gen));
    for (const Formula& f : pv.axioms) {
      Prevariety cut = pv;
      cut.axioms.erase(f);
      auto report = check_prevariety(cut);
      REQUIRE_FALSE(report.pass);
      for (const auto& d : report.diagnostics) {
        CHECK(d.code == DiagnosticCode::AxiomUnionMismatch);
        CHECK(d.subject == f.text());
      }
    }
    for (const Formula& f : pv.theorems) {
      Prevariety cut = pv;
      cut.theorems.erase(f);
      auto report = check_prevariety(cut);
      REQUIRE_FALSE(report.pass);
      for (const auto& d : report.diagnostics) CHECK(d.subject == f.text());
    }
    for (std::size_t i = 0; i < pv.rules.size(); ++i) {
      Prevariety cut = pv;
      cut.rules.erase(cut.rules.begin() + static_cast<long>(i));
      auto report = check_prevariety(cut);
      REQUIRE_FALSE(report.pass);
      for (const auto& d : report.diagnostics) CHECK(d.subject == pv.rules[i].name());
    }
  }
}

TEST_CASE("property: component order does not change the report") {
  Gen gen(0x5eed03);
  for (int trial = 0; trial < 40; ++trial) {
    auto cs = random_components(gen);
    auto pv = assemble_prevariety(cs);
    if (!pv.theorems.empty()) pv.theorems.erase(pv.theorems.begin());
    auto before = check_prevariety(pv);
    std::reverse(pv.components.begin(), pv.components.end());
    auto after = check_prevariety(pv);
    REQUIRE(before.diagnostics.size() == after.diagnostics.size());
    for (std::size_t i = 0; i < before.diagnostics.size(); ++i) {
      CHECK(before.diagnostics[i].subject == after.diagnostics[i].subject);
      CHECK(before.diagnostics[i].component == after.diagnostics[i].component);
    }
  }
}
