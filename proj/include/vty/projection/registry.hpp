#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace vty::projection {

enum class Status { Satisfied, Violated, Unknown };
std::string_view status_name(Status status);
std::optional<Status> status_from_name(std::string_view name);

struct Evidence {
  enum class Kind { None, Citation, ExecPositive, ExecExhaustive };
  Kind kind = Kind::None;
  // Citation text, or the witness id for the executable kinds.
  std::string text;
  // ExecPositive: number of cases in the suite.
  std::size_t suite_size = 0;
  // ExecExhaustive: description of the finite domain.
  std::string domain;

  static Evidence citation(std::string text);
  static Evidence exec_positive(std::string witness, std::size_t suite_size);
  static Evidence exec_exhaustive(std::string witness, std::string domain);

  bool executable() const noexcept { return kind == Kind::ExecPositive || kind == Kind::ExecExhaustive; }
  friend bool operator==(const Evidence&, const Evidence&) = default;
};

std::string_view evidence_kind_name(Evidence::Kind kind);

struct AxiomStatus {
  Status status = Status::Unknown;
  Evidence evidence;
  friend bool operator==(const AxiomStatus&, const AxiomStatus&) = default;
};

struct ClassProfile {
  std::string id;
  std::string name;
  std::map<std::string, AxiomStatus> statuses;

  // Unknown for axioms without an entry.
  Status status_of(const std::string& axiom) const;
  friend bool operator==(const ClassProfile&, const ClassProfile&) = default;
};

struct TheoremRecord {
  std::string id;
  // "{class}" is replaced by the class name in corollaries.
  std::string statement;
  std::set<std::string> dependencies;
  bool unconditional = false;
  std::string source;
  friend bool operator==(const TheoremRecord&, const TheoremRecord&) = default;
};

struct Registry {
  // Axiom id -> one-line statement of the property.
  std::map<std::string, std::string> axioms;
  std::vector<ClassProfile> classes;
  std::vector<TheoremRecord> theorems;

  const ClassProfile* find_class(const std::string& id) const;
  const TheoremRecord* find_theorem(const std::string& id) const;
};

// Throws UNDECLARED_AXIOM for an id used but not declared, INVALID_ARGUMENT
// for duplicate ids, a non-unknown status without evidence, or empty
// dependencies on a theorem not marked unconditional.
void validate_registry(const Registry& registry);

// Result of running an executable witness.
struct WitnessOutcome {
  bool passed = false;
  std::size_t cases = 0;
  std::string detail;
};
using WitnessRunner = std::function<std::optional<WitnessOutcome>(const std::string& witness)>;

struct EvidenceCheck {
  std::string class_id;
  std::string axiom;
  std::string witness;
  bool exists = false;
  bool passed = false;
  std::size_t cases = 0;
};

// Runs every executable evidence entry. Entries whose witness is unknown or
// fails come back with exists or passed unset.
std::vector<EvidenceCheck> check_evidence(const Registry& registry, const WitnessRunner& run);

inline const std::vector<std::string> kSeedAxioms = {"UNIVERSALITY", "TOTALITY", "COMPOSITION",
                                                     "DECIDABLE_HALTING"};

// Four seed axioms, ten classes and two theorems. Statuses and dependency
// sets are curated data and may be edited in a manifest.
Registry seed_registry();

}  // namespace vty::projection
