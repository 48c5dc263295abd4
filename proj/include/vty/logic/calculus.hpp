#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vty/logic/formula.hpp"

namespace vty::logic {

// A named rule of inference. Schema rules are patterns over metavariables:
// from instances of every premise, infer the same instance of the conclusion.
// The built-in substitution rule infers phi[sigma] from phi for any
// atom-to-formula substitution sigma.
class InferenceRule {
 public:
  enum class Kind { Schema, Substitution };

  // Throws INVALID_ARGUMENT if the conclusion mentions a metavariable that no
  // premise binds, or if a pattern is empty.
  static InferenceRule schema(std::string name, std::vector<Formula> premises, Formula conclusion);
  static InferenceRule substitution(std::string name);

  const std::string& name() const noexcept { return name_; }
  Kind kind() const noexcept { return kind_; }
  const std::vector<Formula>& premises() const noexcept { return premises_; }
  const Formula& conclusion() const { return conclusion_.value(); }
  std::size_t arity() const noexcept { return kind_ == Kind::Substitution ? 1 : premises_.size(); }

  // `name premise... => conclusion` or `name substitution`.
  std::string describe() const;

  friend bool operator==(const InferenceRule& a, const InferenceRule& b) {
    return a.name_ == b.name_ && a.kind_ == b.kind_ && a.premises_ == b.premises_ &&
           a.conclusion_ == b.conclusion_;
  }

 private:
  InferenceRule(std::string name, Kind kind) : name_(std::move(name)), kind_(kind) {}

  std::string name_;
  Kind kind_;
  std::vector<Formula> premises_;
  std::optional<Formula> conclusion_;
};

struct AxiomSchema {
  std::string id;
  Formula pattern;

  friend bool operator==(const AxiomSchema&, const AxiomSchema&) = default;
};

// A Hilbert-style calculus (axioms, rules, bounded theorems). The theorem set
// is intensional: it is the bounded closure at `closure_depth`.
//
// `atoms` extends the schema instantiation domain beyond the subformulas of
// the axioms (and of the goals of a query).
struct Calculus {
  std::string id;
  FormulaSet axioms;
  std::vector<AxiomSchema> schemas;
  std::vector<InferenceRule> rules;
  unsigned closure_depth = 0;
  std::set<std::string> atoms;

  const InferenceRule* find_rule(const std::string& name) const;
  const AxiomSchema* find_schema(const std::string& id) const;

  friend bool operator==(const Calculus&, const Calculus&) = default;
};

// Validates rule-name and schema-id uniqueness and groundness of axioms.
// Throws INVALID_ARGUMENT.
void validate_calculus(const Calculus& calculus);

namespace presets {

InferenceRule modus_ponens();

// (-> A (-> B A)), (-> (-> A (-> B C)) (-> (-> A B) (-> A C))),
// (-> (-> (not A) (not B)) (-> B A)) with modus ponens.
Calculus hilbert();
// Modus ponens alone, no schemas.
Calculus modus_ponens_only();
// Elimination rules plus (A, (not A)) => bot; used to look for derivations of
// bot when a set is unsatisfiable.
Calculus refutation();

// "hilbert", "mp", "refutation"; nullopt for anything else.
std::optional<Calculus> by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace presets

}  // namespace vty::logic
