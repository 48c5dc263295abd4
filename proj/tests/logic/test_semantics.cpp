#include "doctest.h"
#include "support.hpp"
#include "vty/error.hpp"
#include "vty/logic/calculus.hpp"
#include "vty/logic/proof.hpp"
#include "vty/logic/semantics.hpp"

using namespace vty::logic;
using vty::testing::F;

TEST_CASE("direct contradiction is inconsistent with a derivation of bot") {
  auto r = consistent(std::vector<Formula>{F("p"), F("(not p)")});
  CHECK_FALSE(r.consistent);
  REQUIRE(r.refutation.has_value());
  CHECK(r.refutation->conclusion() == Formula::bottom());
  Calculus refuter = presets::refutation();
  refuter.axioms = {F("p"), F("(not p)")};
  CHECK(check_proof(refuter, *r.refutation));
}

TEST_CASE("a satisfiable set is consistent and carries a model") {
  auto r = consistent(std::vector<Formula>{F("(-> p q)")});
  CHECK(r.consistent);
  REQUIRE(r.model.has_value());
  CHECK(evaluate(F("(-> p q)"), *r.model));
}

TEST_CASE("disjunction with both disjuncts denied") {
  // Truth table over p, q: (or p q) needs p or q true; both are denied.
  std::vector<Formula> set{F("(or p q)"), F("(not p)"), F("(not q)")};
  int satisfying = 0;
  for (int row = 0; row < 4; ++row) {
    Assignment a{{"p", (row & 1) != 0}, {"q", (row & 2) != 0}};
    bool all = true;
    for (const auto& f : set) all = all && evaluate(f, a);
    satisfying += all;
  }
  REQUIRE(satisfying == 0);
  auto r = consistent(set);
  CHECK_FALSE(r.consistent);
  CHECK(r.refutation.has_value());
}

TEST_CASE("empty set is consistent") { CHECK(consistent(std::vector<Formula>{}).consistent); }

TEST_CASE("bottom alone is inconsistent") { CHECK_FALSE(consistent(std::vector<Formula>{Formula::bottom()}).consistent); }

TEST_CASE("atom cap") {
  std::vector<Formula> many;
  for (int i = 0; i < 21; ++i) many.push_back(Formula::atom("a" + std::to_string(i)));
  try {
    consistent(many);
    FAIL("expected ATOM_CAP_EXCEEDED");
  } catch (const vty::Error& e) {
    CHECK(e.code() == vty::ErrorCode::AtomCapExceeded);
  }
  many.pop_back();
  CHECK(consistent(many).consistent);
  ConsistencyOptions tight;
  tight.atom_cap = 3;
  CHECK_THROWS_AS(consistent(std::vector<Formula>{F("(and p (and q (and r s)))")}, tight), vty::Error);
}

TEST_CASE("entailment") {
  CHECK(entails({F("p"), F("(-> p q)")}, F("q")));
  CHECK_FALSE(entails({F("(-> p q)")}, F("q")));
  CHECK(entails({}, F("(-> p p)")));
}

TEST_CASE("evaluate agrees with the verdict on random sets") {
  vty::testing::Gen gen(17);
  std::vector<std::string> atoms{"p", "q", "r"};
  for (int i = 0; i < 200; ++i) {
    std::vector<Formula> set;
    for (std::size_t k = 0, n = 1 + gen.below(4); k < n; ++k) set.push_back(gen.formula(atoms, 3));
    auto r = consistent(set);
    if (r.consistent) {
      for (const auto& f : set) CHECK(evaluate(f, *r.model));
    } else if (r.refutation) {
      CHECK(r.refutation->conclusion() == Formula::bottom());
    }
  }
}
