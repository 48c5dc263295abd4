#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vty/logic/formula.hpp"
#include "vty/logic/proof.hpp"

namespace vty::logic {

inline constexpr std::size_t kDefaultAtomCap = 20;

using Assignment = std::map<std::string, bool>;

bool evaluate(const Formula& f, const Assignment& assignment);

// Truth-table satisfiability of a finite conjunction. Throws
// ATOM_CAP_EXCEEDED when the set mentions more than `atom_cap` atoms.
std::optional<Assignment> satisfying_assignment(const std::vector<Formula>& formulas,
                                                std::size_t atom_cap = kDefaultAtomCap);

// Every assignment satisfying `premises` satisfies `conclusion`.
bool entails(const std::vector<Formula>& premises, const Formula& conclusion,
             std::size_t atom_cap = kDefaultAtomCap);

struct ConsistencyOptions {
  std::size_t atom_cap = kDefaultAtomCap;
  // Depth of the search for a derivation of bot in the refutation preset.
  unsigned refutation_depth = 3;
};

struct Consistency {
  bool consistent = true;
  std::vector<std::string> atoms;
  // A model when consistent.
  std::optional<Assignment> model;
  // When inconsistent: a derivation of bot from the set, if one was found
  // within the refutation bound. Its absence is not evidence of consistency;
  // the truth table alone decides the verdict.
  std::optional<Proof> refutation;

  explicit operator bool() const noexcept { return consistent; }
};

Consistency consistent(const std::vector<Formula>& formulas, const ConsistencyOptions& options = {});
Consistency consistent(const FormulaSet& formulas, const ConsistencyOptions& options = {});

}  // namespace vty::logic
