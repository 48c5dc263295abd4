#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "vty/logic/calculus.hpp"
#include "vty/logic/closure.hpp"
#include "vty/logic/proof.hpp"
#include "vty/logic/semantics.hpp"

namespace vty::projection {

using logic::Formula;
using logic::FormulaSet;

inline constexpr std::size_t kSubsetCap = 12;

enum class Answer { Yes, No, Unknown };
std::string_view answer_name(Answer answer);

struct RelationOptions {
  unsigned depth = 2;
  std::size_t atom_cap = logic::kDefaultAtomCap;
  std::size_t theorem_cap = logic::kDefaultTheoremCap;
  bool irreducibility = true;
};

struct Relation {
  Answer consistent_with = Answer::No;
  // Yes or Unknown, never No.
  Answer sufficient = Answer::Unknown;
  Answer irreducible = Answer::Unknown;
  // Advisory: the axioms entail the theorem by truth table.
  bool entailed = false;
  unsigned depth = 0;
  // Proof in base + axioms when sufficient.
  std::optional<logic::Proof> proof;
  // A proper subset that already suffices, when irreducible is No.
  std::optional<FormulaSet> smaller;
  // Some search stopped on the theorem cap.
  bool truncated = false;
};

// `base` contributes its schemas and rules; `axioms` are added to its instance
// axioms. Throws ATOM_CAP_EXCEEDED, and SUBSET_CAP_EXCEEDED when
// irreducibility is requested for more than kSubsetCap axioms.
Relation classify_relation(const FormulaSet& axioms, const Formula& theorem, const logic::Calculus& base,
                           const RelationOptions& options = {});

struct MinimalSubsets {
  // By increasing size, then by the order of the members in `axioms`.
  std::vector<FormulaSet> subsets;
  unsigned depth = 0;
  bool truncated = false;
};

// Throws SUBSET_CAP_EXCEEDED.
MinimalSubsets minimal_axiom_subsets(const FormulaSet& axioms, const Formula& theorem, const logic::Calculus& base,
                                     const RelationOptions& options = {});

// Base calculus extended with `axioms`.
logic::Calculus with_axioms(const logic::Calculus& base, const FormulaSet& axioms, unsigned depth);

}  // namespace vty::projection
