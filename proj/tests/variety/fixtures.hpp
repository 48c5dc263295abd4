#pragma once

#include "support.hpp"
#include "vty/logic/closure.hpp"
#include "vty/variety/prevariety.hpp"

namespace vty::testing {

using variety::Component;
using variety::FormulaMap;
using variety::Prevariety;
using variety::VarietyWitness;

inline Component component(std::string id, std::initializer_list<const char*> axioms,
                           std::initializer_list<const char*> designated, unsigned depth = 2) {
  Component c;
  c.id = id;
  c.calculus = logic::presets::modus_ponens_only();
  c.calculus.id = std::move(id);
  c.calculus.axioms = set_of(axioms);
  c.calculus.closure_depth = depth;
  c.designated = set_of(designated);
  return c;
}

// K1 over {p, q}; K2 the same core written over {a, b} and renamed back.
inline std::vector<Component> shared_core_components() {
  Component k1 = component("K1", {"p", "(-> p q)"}, {"p", "(-> p q)", "q"}, 1);
  Component k2 = component("K2", {"a", "(-> a b)", "(-> b c)"}, {"a", "(-> a b)", "b"}, 1);
  std::map<std::string, std::string> back{{"a", "p"}, {"b", "q"}, {"c", "r"}};
  k2.axiom_map = FormulaMap::renaming(back);
  k2.theorem_map = FormulaMap::renaming(back);
  return {k1, k2};
}

inline VarietyWitness shared_core_witness() {
  VarietyWitness w;
  w.id = "core";
  w.index_tuple = {"K1", "K2"};
  w.covering = logic::presets::modus_ponens_only();
  w.covering.id = "core";
  w.covering.axioms = set_of({"p", "(-> p q)"});
  w.covering.closure_depth = 1;
  w.theorem_subset = set_of({"p", "(-> p q)", "q"});
  return w;
}

// Component with a random calculus, a random atom renaming or the identity,
// and designated theorems drawn from its bounded closure.
inline Component random_component(Gen& gen, std::string id) {
  Component c;
  c.id = id;
  c.calculus = random_calculus(gen, 0);
  c.calculus.id = id;
  c.calculus.closure_depth = static_cast<unsigned>(gen.below(3));
  if (gen.chance(50)) {
    static const char* pool[] = {"p", "q", "r", "s", "t", "u"};
    std::map<std::string, std::string> ren;
    for (const char* a : pool) {
      if (gen.chance(40)) ren.emplace(a, pool[gen.below(6)]);
    }
    c.axiom_map = FormulaMap::renaming(ren);
    c.theorem_map = FormulaMap::renaming(ren);
  }
  auto closed = logic::closure(c.calculus, c.calculus.closure_depth).formulas();
  for (const auto& f : closed) {
    if (gen.chance(30)) c.designated.insert(f);
  }
  if (c.designated.empty()) c.designated.insert(*closed.begin());
  return c;
}

inline std::vector<Component> random_components(Gen& gen) {
  std::vector<Component> out;
  std::size_t n = 1 + gen.below(4);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_component(gen, "K" + std::to_string(i + 1)));
  return out;
}

}  // namespace vty::testing
