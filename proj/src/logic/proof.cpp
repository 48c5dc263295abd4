#include "vty/logic/proof.hpp"

#include "vty/logic/parse.hpp"

#include <algorithm>

namespace vty::logic {

std::string_view proof_fault_name(ProofFault fault) {
  switch (fault) {
    case ProofFault::EmptyProof: return "EMPTY_PROOF";
    case ProofFault::NotAnAxiom: return "NOT_AN_AXIOM";
    case ProofFault::UnknownSchema: return "UNKNOWN_SCHEMA";
    case ProofFault::UnknownRule: return "UNKNOWN_RULE";
    case ProofFault::BadPremise: return "BAD_PREMISE";
    case ProofFault::BadSubstitution: return "BAD_SUBSTITUTION";
    case ProofFault::BadConclusion: return "BAD_CONCLUSION";
  }
  return "UNKNOWN";
}

unsigned Proof::height() const {
  std::vector<unsigned> h(steps.size(), 0);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& j = steps[i].justification;
    if (j.kind != Justification::Kind::Rule) continue;
    unsigned deepest = 0;
    for (std::size_t p : j.premises) {
      if (p < i) deepest = std::max(deepest, h[p]);
    }
    h[i] = deepest + 1;
  }
  return h.empty() ? 0 : h.back();
}

namespace {

ProofCheck invalid(std::size_t step, ProofFault fault, std::string detail) {
  return ProofCheck{false, step, fault, std::move(detail)};
}

bool covers(const Substitution& subst, const std::set<std::string>& names) {
  return std::all_of(names.begin(), names.end(), [&](const std::string& n) { return subst.contains(n); });
}

bool all_ground(const Substitution& subst) {
  return std::all_of(subst.begin(), subst.end(), [](const auto& kv) { return kv.second.is_ground(); });
}

}  // namespace

ProofCheck check_proof(const Calculus& calculus, const Proof& proof) {
  if (proof.steps.empty()) return invalid(0, ProofFault::EmptyProof, "proof has no steps");

  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& step = proof.steps[i];
    const Justification& j = step.justification;
    switch (j.kind) {
      case Justification::Kind::Axiom:
        if (!calculus.axioms.contains(step.formula)) {
          return invalid(i, ProofFault::NotAnAxiom, step.formula.text() + " is not an axiom of " + calculus.id);
        }
        break;

      case Justification::Kind::SchemaInstance: {
        const AxiomSchema* schema = calculus.find_schema(j.name);
        if (!schema) return invalid(i, ProofFault::UnknownSchema, "no schema '" + j.name + "'");
        if (!covers(j.substitution, metas_of(schema->pattern)) || !all_ground(j.substitution)) {
          return invalid(i, ProofFault::BadSubstitution, "substitution does not ground schema " + j.name);
        }
        if (instantiate(schema->pattern, j.substitution) != step.formula) {
          return invalid(i, ProofFault::BadConclusion, "step is not the stated instance of " + j.name);
        }
        break;
      }

      case Justification::Kind::Rule: {
        const InferenceRule* rule = calculus.find_rule(j.name);
        if (!rule) return invalid(i, ProofFault::UnknownRule, "no rule '" + j.name + "'");
        if (j.premises.size() != rule->arity()) {
          return invalid(i, ProofFault::BadPremise, "rule " + j.name + " expects " +
                                                        std::to_string(rule->arity()) + " premises");
        }
        for (std::size_t p : j.premises) {
          if (p >= i) return invalid(i, ProofFault::BadPremise, "premise index " + std::to_string(p) + " is not an earlier step");
        }
        if (!all_ground(j.substitution)) {
          return invalid(i, ProofFault::BadSubstitution, "substitution is not ground");
        }
        if (rule->kind() == InferenceRule::Kind::Substitution) {
          const Formula& premise = proof.steps[j.premises[0]].formula;
          for (const auto& [name, _] : j.substitution) {
            if (!is_atom_name(name)) return invalid(i, ProofFault::BadSubstitution, "'" + name + "' is not an atom");
          }
          if (substitute_atoms(premise, j.substitution) != step.formula) {
            return invalid(i, ProofFault::BadConclusion, "step is not the stated substitution instance");
          }
          break;
        }
        std::set<std::string> metas;
        for (const Formula& p : rule->premises()) {
          for (auto& m : metas_of(p)) metas.insert(m);
        }
        if (!covers(j.substitution, metas)) {
          return invalid(i, ProofFault::BadSubstitution, "substitution leaves metavariables of " + j.name + " unbound");
        }
        for (std::size_t k = 0; k < rule->premises().size(); ++k) {
          const Formula& cited = proof.steps[j.premises[k]].formula;
          if (instantiate(rule->premises()[k], j.substitution) != cited) {
            return invalid(i, ProofFault::BadPremise, "premise " + std::to_string(k) + " of " + j.name +
                                                          " does not match step " + std::to_string(j.premises[k]));
          }
        }
        if (instantiate(rule->conclusion(), j.substitution) != step.formula) {
          return invalid(i, ProofFault::BadConclusion, "conclusion does not match rule " + j.name);
        }
        break;
      }
    }
  }
  return ProofCheck{};
}

}  // namespace vty::logic
