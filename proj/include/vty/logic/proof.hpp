#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vty/logic/calculus.hpp"
#include "vty/logic/formula.hpp"

namespace vty::logic {

struct Justification {
  enum class Kind { Axiom, SchemaInstance, Rule };

  Kind kind = Kind::Axiom;
  // Schema id or rule name; empty for Axiom.
  std::string name;
  // Indices of earlier steps, in rule-premise order.
  std::vector<std::size_t> premises;
  Substitution substitution;

  friend bool operator==(const Justification&, const Justification&) = default;
};

struct ProofStep {
  Formula formula;
  Justification justification;

  friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

// Linear Hilbert-style proof; the last step is the proved formula.
struct Proof {
  std::vector<ProofStep> steps;

  const Formula& conclusion() const { return steps.back().formula; }
  bool empty() const noexcept { return steps.empty(); }
  // Longest chain of nested rule applications (0 for an axiom alone).
  unsigned height() const;

  friend bool operator==(const Proof&, const Proof&) = default;
};

enum class ProofFault {
  EmptyProof,
  NotAnAxiom,
  UnknownSchema,
  UnknownRule,
  BadPremise,
  BadSubstitution,
  BadConclusion,
};

std::string_view proof_fault_name(ProofFault fault);

struct ProofCheck {
  bool valid = true;
  std::size_t step = 0;
  ProofFault fault = ProofFault::EmptyProof;
  std::string detail;

  explicit operator bool() const noexcept { return valid; }
};

// Revalidates every step against the calculus. INVALID names the first
// failing step.
ProofCheck check_proof(const Calculus& calculus, const Proof& proof);

}  // namespace vty::logic
