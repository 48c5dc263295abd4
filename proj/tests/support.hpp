#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vty/logic/calculus.hpp"
#include "vty/logic/formula.hpp"
#include "vty/logic/parse.hpp"

namespace vty::testing {

inline logic::Formula F(const std::string& text) { return logic::parse_formula(text); }

inline logic::FormulaSet set_of(std::initializer_list<const char*> texts) {
  logic::FormulaSet out;
  for (const char* t : texts) out.insert(F(t));
  return out;
}

// Seeded generator with platform-independent draws (mt19937_64 is fully
// specified; distributions are not, so we reduce by modulo).
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }
  bool chance(unsigned percent) { return below(100) < percent; }

  logic::Formula formula(const std::vector<std::string>& atoms, unsigned max_depth) {
    using logic::Formula;
    if (max_depth == 0 || chance(35)) {
      if (chance(5)) return Formula::bottom();
      return Formula::atom(atoms[below(atoms.size())]);
    }
    switch (below(4)) {
      case 0: return Formula::negation(formula(atoms, max_depth - 1));
      case 1: return Formula::conjunction(formula(atoms, max_depth - 1), formula(atoms, max_depth - 1));
      case 2: return Formula::disjunction(formula(atoms, max_depth - 1), formula(atoms, max_depth - 1));
      default: return Formula::implication(formula(atoms, max_depth - 1), formula(atoms, max_depth - 1));
    }
  }

  std::vector<std::string> atoms(std::size_t max_count) {
    static const char* pool[] = {"p", "q", "r", "s", "t", "u"};
    std::size_t n = 1 + below(max_count);
    return {pool, pool + n};
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Rules whose conclusions are assembled from subformulas of their premises,
// so closures stay finite without a domain restriction.
inline std::vector<logic::InferenceRule> bounded_rule_pool() {
  using logic::InferenceRule;
  using logic::parse_schema;
  auto rule = [](std::string name, std::vector<const char*> ps, const char* c) {
    std::vector<logic::Formula> premises;
    for (auto p : ps) premises.push_back(parse_schema(p));
    return InferenceRule::schema(std::move(name), std::move(premises), parse_schema(c));
  };
  return {
      logic::presets::modus_ponens(),
      rule("and_elim_l", {"(and A B)"}, "A"),
      rule("and_elim_r", {"(and A B)"}, "B"),
      rule("disj_syll", {"(or A B)", "(not A)"}, "B"),
      rule("modus_tollens", {"(-> A B)", "(not B)"}, "(not A)"),
      rule("hyp_syll", {"(-> A B)", "(-> B C)"}, "(-> A C)"),
      rule("dne", {"(not (not A))"}, "A"),
      rule("contradiction", {"A", "(not A)"}, "bot"),
  };
}

// Calculus with <= 5 axioms, <= 2 rules, <= 6 atoms. With probability
// `schema_percent` one axiom slot is an axiom schema.
inline logic::Calculus random_calculus(Gen& gen, unsigned schema_percent = 25) {
  logic::Calculus c;
  c.id = "random";
  auto atoms = gen.atoms(6);
  std::size_t n_axioms = 1 + gen.below(5);
  bool with_schema = gen.chance(schema_percent);
  if (with_schema) {
    --n_axioms;
    static const char* schemas[] = {"(-> A A)", "(-> (and A B) A)", "(-> A (not (not A)))"};
    c.schemas.push_back({"S1", logic::parse_schema(schemas[gen.below(3)])});
  }
  for (std::size_t i = 0; i < n_axioms; ++i) c.axioms.insert(gen.formula(atoms, 3));
  auto pool = bounded_rule_pool();
  std::size_t n_rules = 1 + gen.below(2);
  while (c.rules.size() < n_rules) {
    const auto& r = pool[gen.below(pool.size())];
    if (!c.find_rule(r.name())) c.rules.push_back(r);
  }
  return c;
}

}  // namespace vty::testing
