#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vty/logic/calculus.hpp"
#include "vty/logic/closure.hpp"
#include "vty/logic/semantics.hpp"
#include "vty/variety/formula_map.hpp"

namespace vty::variety {

using logic::Calculus;
using logic::InferenceRule;

// One calculus transported into the common language: axioms through
// `axiom_map`, designated theorems through `theorem_map`.
struct Component {
  std::string id;
  Calculus calculus;
  FormulaMap axiom_map;
  FormulaMap theorem_map;
  FormulaSet designated;

  friend bool operator==(const Component&, const Component&) = default;
};

// The triad (A, H, M) together with the components claimed to generate it.
// With `quasi` set, designated theorems need not be provable in their
// calculus.
struct Prevariety {
  FormulaSet axioms;
  std::vector<InferenceRule> rules;
  FormulaSet theorems;
  std::vector<Component> components;
  bool quasi = false;
};

// Covering calculus for the intersection over `index_tuple` (component ids).
struct VarietyWitness {
  std::string id;
  std::vector<std::string> index_tuple;
  Calculus covering;
  FormulaMap axiom_projection;
  FormulaMap theorem_projection;
  FormulaSet theorem_subset;
};

enum class DiagnosticCode {
  AxiomUnionMismatch,
  RuleUnionMismatch,
  TheoremUnionMismatch,
  NotATheorem,
  MapUndefined,
  RuleConflict,
  DepthExplosion,
  ComponentIdConflict,
  MissingWitness,
  WitnessBadTuple,
  WitnessMapUndefined,
  WitnessProjectionOutside,
  WitnessNotATheorem,
  NotBijective,
  NotClosed,
};

std::string_view diagnostic_code_name(DiagnosticCode code);

struct Diagnostic {
  DiagnosticCode code;
  // "A", "H", "M" or empty.
  std::string equation;
  std::string component;
  // Offending formula text, rule name, or index tuple.
  std::string subject;
  std::string detail;
};

enum class TupleStatus { Vacuous, Witnessed, SelfWitnessed, Missing, Invalid };
std::string_view tuple_status_name(TupleStatus status);

struct TupleReport {
  std::vector<std::string> components;
  FormulaSet axiom_intersection;
  // Intersection of transported bounded closures, valid up to `depth`.
  FormulaSet theorem_intersection;
  unsigned depth = 0;
  TupleStatus status = TupleStatus::Vacuous;
  std::string witness;
  // Reported, not required.
  std::optional<bool> axioms_surjective;
  std::optional<bool> theorems_surjective;
};

struct ClosureEquality {
  bool equal = false;
  unsigned depth = 0;
  // In the bounded closure but not designated.
  FormulaSet undesignated;
};

struct CheckReport {
  bool pass = true;
  std::string mode;
  // Equation name -> "holds" | "fails"; bounded ones carry "at depth d".
  std::map<std::string, std::string> equations;
  std::vector<Diagnostic> diagnostics;
  // Closure depth used per component id.
  std::map<std::string, unsigned> depth_bounds;
  std::vector<TupleReport> tuples;
  std::map<std::string, ClosureEquality> closure_equality;
  // Instantiation domain sizes per component id, for the record.
  std::map<std::string, std::size_t> domain_sizes;

  void add(Diagnostic d);
  // Sorts diagnostics by component id then subject text.
  void finalize();
};

struct CheckOptions {
  std::size_t theorem_cap = logic::kDefaultTheoremCap;
};

// Triad computed as exact unions. Throws MAP_UNDEFINED naming the component
// and formula, INVALID_ARGUMENT when two components define the same rule
// name differently.
Prevariety assemble_prevariety(const std::vector<Component>& components);

CheckReport check_prevariety(const Prevariety& candidate, const CheckOptions& options = {});

// Variety with depth k: every nonempty intersection over at most k distinct
// components needs a valid covering witness. Single-component tuples are
// covered by the component itself when no witness is supplied. Throws
// INVALID_ARGUMENT for k == 0.
CheckReport check_variety(const Prevariety& candidate, unsigned k, const std::vector<VarietyWitness>& witnesses,
                          const CheckOptions& options = {});

enum class BijectiveMode { Prevariety, Variety };

// Adds injectivity of every f_i on A_i and g_i on M_i, and compares M_i with
// the bounded closure. Closure equality gates PASS only in Variety mode; in
// Prevariety mode it is reported.
CheckReport check_bijective_variety(const Prevariety& candidate, BijectiveMode mode, unsigned k,
                                    const std::vector<VarietyWitness>& witnesses, const CheckOptions& options = {});

// Ids of the components with `query` in g_i(M_i), sorted.
std::vector<std::string> component_membership(const Prevariety& pv, const Formula& query);

struct ConsistencyReport {
  // Component id -> consistency of f_i(A_i) united with g_i(M_i).
  std::map<std::string, bool> components;
  bool global = true;
  bool locally_consistent_globally_inconsistent = false;
  // Minimal inconsistent groups of exactly two components.
  std::vector<std::vector<std::string>> pairs;
  // All minimal inconsistent groups by increasing size, then id order.
  std::vector<std::vector<std::string>> groups;
  // Set when the component count exceeded the group enumeration cap and only
  // groups of size <= 2 were searched.
  bool groups_truncated = false;
  std::size_t atoms = 0;
};

inline constexpr std::size_t kGroupEnumerationCap = 12;

// Throws ATOM_CAP_EXCEEDED.
ConsistencyReport consistency_report(const Prevariety& pv, const logic::ConsistencyOptions& options = {});

}  // namespace vty::variety
