#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vty/logic/calculus.hpp"
#include "vty/logic/formula.hpp"
#include "vty/logic/proof.hpp"

namespace vty::logic {

inline constexpr std::size_t kDefaultTheoremCap = 10'000;

struct ClosureOptions {
  unsigned depth = 0;
  // Goals contribute their subformulas to the instantiation domain.
  std::vector<Formula> goals;
  // DEPTH_EXPLOSION once more than this many theorems are derived.
  std::size_t theorem_cap = kDefaultTheoremCap;
};

struct Theorem {
  Formula formula;
  // Smallest derivation height: 0 for axioms and schema instances.
  unsigned level = 0;
  Proof proof;
};

struct ClosureResult {
  // Ordered by formula text.
  std::vector<Theorem> theorems;
  unsigned depth = 0;
  // The last round added nothing; deeper closures are identical.
  bool fixpoint = false;
  // Schema metavariables and substitution images range over this set.
  FormulaSet domain;

  bool contains(const Formula& f) const;
  const Theorem* find(const Formula& f) const;
  FormulaSet formulas() const;
};

// Instantiation domain: subformula closure of the axioms, the ground parts of
// schemas and rules, the goals and the calculus's declared atoms.
FormulaSet instantiation_domain(const Calculus& calculus, const std::vector<Formula>& goals);

// Everything derivable with at most `depth` nested rule applications, each
// with a proof that revalidates under check_proof. Throws DEPTH_EXPLOSION.
ClosureResult closure(const Calculus& calculus, const ClosureOptions& options);
ClosureResult closure(const Calculus& calculus, unsigned depth);

struct ProofSearch {
  // Set iff the goal is in the closure at the requested depth.
  std::optional<Proof> proof;
  unsigned depth = 0;

  bool proved() const noexcept { return proof.has_value(); }
};

// Stops as soon as the goal appears. UNKNOWN is not a refutation.
ProofSearch proves(const Calculus& calculus, const Formula& goal, unsigned depth,
                   std::size_t theorem_cap = kDefaultTheoremCap);

}  // namespace vty::logic
