#include <algorithm>
#include <set>

#include "doctest.h"
#include "projection/generators.hpp"
#include "support.hpp"
#include "vty/error.hpp"
#include "vty/projection/projection.hpp"

using namespace vty::projection;
using vty::testing::Gen;
using vty::testing::random_registry;
using vty::testing::random_theorem;

namespace {

std::vector<std::string> ids(const std::vector<Placement>& list) {
  std::vector<std::string> out;
  for (const auto& p : list) out.push_back(p.class_id);
  return out;
}

bool has(const std::vector<Placement>& list, const std::string& id) {
  return std::any_of(list.begin(), list.end(), [&](const Placement& p) { return p.class_id == id; });
}

}  // namespace

TEST_CASE("seed registry is well formed") {
  Registry r = seed_registry();
  CHECK_NOTHROW(validate_registry(r));
  CHECK(r.classes.size() == 10);
  CHECK(r.theorems.size() == 2);
  CHECK(r.find_class("T")->status_of("UNIVERSALITY") == Status::Satisfied);
  CHECK(r.find_class("TT")->status_of("UNIVERSALITY") == Status::Violated);
}

TEST_CASE("fixed output undecidability projects onto universal classes") {
  Registry r = seed_registry();
  Projection p = project(r, *r.find_theorem("fixed_output_undecidable"));
  CHECK(has(p.corollaries, "T"));
  CHECK(has(p.not_applicable, "TT"));
  CHECK(has(p.not_applicable, "FA"));
  CHECK(p.corollaries.size() == 8);
  auto t = std::find_if(p.corollaries.begin(), p.corollaries.end(), [](const Placement& e) { return e.class_id == "T"; });
  CHECK(t->text == "The Fixed Output Problem is undecidable for Turing machines.");

  Projection q = project(r, *r.find_theorem("fixed_output_recognizable"));
  CHECK(ids(q.corollaries) == std::vector<std::string>{"T", "RAM", "KA", "RM", "PRF", "ITM1", "PETM", "LPRF"});
}

TEST_CASE("unconditional theorems reach every class") {
  Registry r = seed_registry();
  TheoremRecord t{"u", "for {class}", {}, true, ""};
  CHECK(project(r, t).corollaries.size() == r.classes.size());
}

TEST_CASE("two dependencies match the manual cross product") {
  Registry r = seed_registry();
  TheoremRecord t{"ut", "for {class}", {"UNIVERSALITY", "TOTALITY"}, false, ""};
  std::vector<std::string> expected;
  for (const auto& c : r.classes) {
    if (c.status_of("UNIVERSALITY") == Status::Satisfied && c.status_of("TOTALITY") == Status::Satisfied) {
      expected.push_back(c.id);
    }
  }
  CHECK(ids(project(r, t).corollaries) == expected);
  CHECK(expected.empty());
}

TEST_CASE("undeclared axioms are rejected") {
  Registry r = seed_registry();
  TheoremRecord t{"x", "s", {"CHOICE"}, false, ""};
  try {
    project(r, t);
    FAIL("expected UNDECLARED_AXIOM");
  } catch (const vty::Error& e) {
    CHECK(e.code() == vty::ErrorCode::UndeclaredAxiom);
  }
  r.theorems.push_back(t);
  CHECK_THROWS_AS(validate_registry(r), vty::Error);

  Registry bare = seed_registry();
  bare.classes[0].statuses["TOTALITY"].evidence = {};
  CHECK_THROWS_AS(validate_registry(bare), vty::Error);
  Registry empty_deps = seed_registry();
  empty_deps.theorems[0].dependencies.clear();
  CHECK_THROWS_AS(validate_registry(empty_deps), vty::Error);
}

TEST_CASE("property: projection partitions the registry") {
  Gen gen(0x9e0001);
  for (int trial = 0; trial < 200; ++trial) {
    Registry r = random_registry(gen);
    TheoremRecord t = random_theorem(gen);
    Projection p = project(r, t);
    std::multiset<std::string> all;
    for (const auto* list : {&p.corollaries, &p.not_applicable, &p.unknown}) {
      for (const auto& e : *list) all.insert(e.class_id);
    }
    std::multiset<std::string> expected;
    for (const auto& c : r.classes) expected.insert(c.id);
    CHECK(all == expected);
  }
}

TEST_CASE("property: projection is monotone") {
  Gen gen(0x9e0002);
  for (int trial = 0; trial < 200; ++trial) {
    Registry r = random_registry(gen);
    TheoremRecord t = random_theorem(gen);
    auto base = ids(project(r, t).corollaries);

    Registry up = r;
    auto& c = up.classes[gen.below(up.classes.size())];
    const auto& a = kSeedAxioms[gen.below(kSeedAxioms.size())];
    if (c.status_of(a) != Status::Satisfied) c.statuses[a] = {Status::Satisfied, Evidence::citation("y")};
    auto upgraded = ids(project(up, t).corollaries);
    CHECK(std::includes(upgraded.begin(), upgraded.end(), base.begin(), base.end()));

    TheoremRecord more = t;
    more.dependencies.insert(kSeedAxioms[gen.below(kSeedAxioms.size())]);
    more.unconditional = false;
    auto fewer = ids(project(r, more).corollaries);
    CHECK(std::includes(base.begin(), base.end(), fewer.begin(), fewer.end()));
  }
}

TEST_CASE("matrix agrees with projection") {
  Registry r = seed_registry();
  Matrix m = registry_report(r, r.theorems);
  REQUIRE(m.theorems.size() == 2);
  REQUIRE(m.classes.size() == 10);
  for (std::size_t col = 0; col < 2; ++col) {
    Projection p = project(r, r.theorems[col]);
    for (std::size_t row = 0; row < m.classes.size(); ++row) {
      Cell expected = has(p.corollaries, m.classes[row])      ? Cell::Corollary
                      : has(p.not_applicable, m.classes[row]) ? Cell::NotApplicable
                                                             : Cell::Unknown;
      CHECK(m.cells[row][col] == expected);
    }
  }
  std::string text = render_matrix(m);
  CHECK(text.rfind("class  fixed_output_undecidable  fixed_output_recognizable\n", 0) == 0);
  CHECK(text.find("\nTT     na") != std::string::npos);

  Matrix header = registry_report(r, {});
  CHECK(header.theorems.empty());
  CHECK(render_matrix(header).rfind("class\nT\n", 0) == 0);

  Registry blank = r;
  blank.classes.push_back({"X", "unknown class", {}});
  Matrix bm = registry_report(blank, blank.theorems);
  CHECK(bm.cells.back() == std::vector<Cell>{Cell::Unknown, Cell::Unknown});
}

TEST_CASE("executable evidence is run") {
  Registry r = seed_registry();
  auto checks = check_evidence(r, [](const std::string& id) -> std::optional<WitnessOutcome> {
    if (id == "rm_universal_differential") return WitnessOutcome{true, 200, ""};
    if (id == "fa_totality_exhaustive") return WitnessOutcome{false, 34, "broken"};
    return std::nullopt;
  });
  REQUIRE(checks.size() == 3);
  for (const auto& c : checks) {
    if (c.witness == "rm_universal_differential") CHECK(c.passed);
    if (c.witness == "fa_totality_exhaustive") CHECK_FALSE(c.passed);
    if (c.witness == "rm_self_loop_diverges") CHECK_FALSE(c.exists);
  }
}
