#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vty/logic/calculus.hpp"
#include "vty/models/register_machine.hpp"
#include "vty/projection/registry.hpp"
#include "vty/variety/prevariety.hpp"

namespace vty::cli {

using logic::Formula;
using logic::FormulaSet;

struct Bounds {
  std::optional<unsigned> depth;
  std::optional<std::size_t> atoms;
  std::optional<std::size_t> enumeration;
  std::optional<std::size_t> cap;

  unsigned depth_or_default() const { return depth.value_or(2); }
  std::size_t atoms_or_default() const { return atoms.value_or(logic::kDefaultAtomCap); }
  std::size_t enumeration_or_default() const { return enumeration.value_or(1'000'000); }
  std::size_t cap_or_default() const { return cap.value_or(logic::kDefaultTheoremCap); }
};

struct CalculusDecl {
  std::string id;
  std::optional<std::string> preset;
  FormulaSet axioms;
  std::vector<logic::AxiomSchema> schemas;
  std::vector<logic::InferenceRule> rules;
  std::optional<unsigned> depth;
  std::set<std::string> atoms;
};

struct MapDecl {
  std::string id;
  variety::FormulaMap map;
};

struct ComponentDecl {
  std::string id;
  std::string calculus;
  std::string axiom_map = "identity";
  std::string theorem_map = "identity";
  FormulaSet designated;
};

struct PrevarietyDecl {
  std::string id;
  bool quasi = false;
  std::vector<std::string> components;
  // Triad computed from the components instead of listed.
  bool automatic = false;
  FormulaSet axioms;
  std::vector<logic::InferenceRule> rules;
  FormulaSet theorems;
};

struct WitnessDecl {
  std::string id;
  std::string prevariety;
  std::vector<std::string> covers;
  std::string calculus;
  std::string axiom_projection = "identity";
  std::string theorem_projection = "identity";
  FormulaSet theorems;
};

struct MachineDecl {
  std::string id;
  models::RegisterMachine machine;
};

struct Manifest {
  // Comment lines before the first statement, kept verbatim.
  std::vector<std::string> header;
  std::vector<std::string> signature;
  Bounds bounds;
  std::vector<CalculusDecl> calculi;
  std::vector<MapDecl> maps;
  std::vector<ComponentDecl> components;
  std::vector<PrevarietyDecl> prevarieties;
  std::vector<WitnessDecl> witnesses;
  std::vector<MachineDecl> machines;
  // Axiom declarations, class profiles and theorem records.
  projection::Registry registry;

  const CalculusDecl* find_calculus(const std::string& id) const;
  const MapDecl* find_map(const std::string& id) const;
  const ComponentDecl* find_component(const std::string& id) const;
  const PrevarietyDecl* find_prevariety(const std::string& id) const;
  const MachineDecl* find_machine(const std::string& id) const;
};

// Throws PARSE_ERROR ("line L, column C: ...") or UNRESOLVED_REFERENCE.
Manifest parse_manifest(const std::string& text);
// Throws INVALID_ARGUMENT when the file cannot be read.
Manifest load_manifest(const std::filesystem::path& path);

// Canonical text; parse_manifest(serialize_manifest(m)) reproduces m.
std::string serialize_manifest(const Manifest& manifest);

// Resolution against a parsed manifest. `depth` replaces every closure depth
// when set.
logic::Calculus resolve_calculus(const Manifest& m, const std::string& id, std::optional<unsigned> depth = {});
variety::Prevariety resolve_prevariety(const Manifest& m, const PrevarietyDecl& pv, std::optional<unsigned> depth = {});
std::vector<variety::VarietyWitness> resolve_witnesses(const Manifest& m, const std::string& prevariety,
                                                       std::optional<unsigned> depth = {});

}  // namespace vty::cli
