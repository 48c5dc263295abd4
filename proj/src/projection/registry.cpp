#include "vty/projection/registry.hpp"

#include <algorithm>

#include "vty/error.hpp"

namespace vty::projection {

std::string_view status_name(Status status) {
  switch (status) {
    case Status::Satisfied: return "satisfied";
    case Status::Violated: return "violated";
    case Status::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<Status> status_from_name(std::string_view name) {
  if (name == "satisfied") return Status::Satisfied;
  if (name == "violated") return Status::Violated;
  if (name == "unknown") return Status::Unknown;
  return std::nullopt;
}

std::string_view evidence_kind_name(Evidence::Kind kind) {
  switch (kind) {
    case Evidence::Kind::None: return "none";
    case Evidence::Kind::Citation: return "citation";
    case Evidence::Kind::ExecPositive: return "exec-positive";
    case Evidence::Kind::ExecExhaustive: return "exec-exhaustive";
  }
  return "none";
}

Evidence Evidence::citation(std::string text) { return {Kind::Citation, std::move(text), 0, {}}; }

Evidence Evidence::exec_positive(std::string witness, std::size_t suite_size) {
  return {Kind::ExecPositive, std::move(witness), suite_size, {}};
}

Evidence Evidence::exec_exhaustive(std::string witness, std::string domain) {
  return {Kind::ExecExhaustive, std::move(witness), 0, std::move(domain)};
}

Status ClassProfile::status_of(const std::string& axiom) const {
  auto it = statuses.find(axiom);
  return it == statuses.end() ? Status::Unknown : it->second.status;
}

const ClassProfile* Registry::find_class(const std::string& id) const {
  auto it = std::find_if(classes.begin(), classes.end(), [&](const ClassProfile& c) { return c.id == id; });
  return it == classes.end() ? nullptr : &*it;
}

const TheoremRecord* Registry::find_theorem(const std::string& id) const {
  auto it = std::find_if(theorems.begin(), theorems.end(), [&](const TheoremRecord& t) { return t.id == id; });
  return it == theorems.end() ? nullptr : &*it;
}

void validate_registry(const Registry& registry) {
  auto declared = [&](const std::string& id, const std::string& where) {
    if (!registry.axioms.contains(id)) {
      throw Error(ErrorCode::UndeclaredAxiom, "axiom " + id + " used by " + where + " is not declared");
    }
  };
  std::set<std::string> ids;
  for (const ClassProfile& c : registry.classes) {
    if (!ids.insert(c.id).second) throw Error(ErrorCode::InvalidArgument, "duplicate class id " + c.id);
    for (const auto& [axiom, s] : c.statuses) {
      declared(axiom, "class " + c.id);
      if (s.status != Status::Unknown && s.evidence.kind == Evidence::Kind::None) {
        throw Error(ErrorCode::InvalidArgument, "class " + c.id + ": status of " + axiom + " has no evidence");
      }
    }
  }
  ids.clear();
  for (const TheoremRecord& t : registry.theorems) {
    if (!ids.insert(t.id).second) throw Error(ErrorCode::InvalidArgument, "duplicate theorem id " + t.id);
    if (t.dependencies.empty() && !t.unconditional) {
      throw Error(ErrorCode::InvalidArgument, "theorem " + t.id + " has no dependencies and is not unconditional");
    }
    for (const auto& axiom : t.dependencies) declared(axiom, "theorem " + t.id);
  }
}

std::vector<EvidenceCheck> check_evidence(const Registry& registry, const WitnessRunner& run) {
  std::vector<EvidenceCheck> out;
  std::map<std::string, std::optional<WitnessOutcome>> cache;
  for (const ClassProfile& c : registry.classes) {
    for (const auto& [axiom, s] : c.statuses) {
      if (!s.evidence.executable()) continue;
      auto it = cache.find(s.evidence.text);
      if (it == cache.end()) it = cache.emplace(s.evidence.text, run(s.evidence.text)).first;
      EvidenceCheck check{c.id, axiom, s.evidence.text, it->second.has_value(), false, 0};
      if (it->second) {
        check.passed = it->second->passed;
        check.cases = it->second->cases;
      }
      out.push_back(std::move(check));
    }
  }
  return out;
}

namespace {

AxiomStatus sat(Evidence e) { return {Status::Satisfied, std::move(e)}; }
AxiomStatus viol(Evidence e) { return {Status::Violated, std::move(e)}; }
Evidence cite(const char* text) { return Evidence::citation(text); }

ClassProfile universal_class(std::string id, std::string name, const char* universal) {
  ClassProfile c{std::move(id), std::move(name), {}};
  c.statuses["UNIVERSALITY"] = sat(cite(universal));
  c.statuses["COMPOSITION"] = sat(cite("sequential composition stays in the class"));
  c.statuses["TOTALITY"] = viol(cite("the class contains a machine that diverges on some input"));
  c.statuses["DECIDABLE_HALTING"] = viol(cite("halting is undecidable for a class with a universal member"));
  return c;
}

ClassProfile super_recursive_class(std::string id, std::string name, const char* universal) {
  ClassProfile c{std::move(id), std::move(name), {}};
  c.statuses["UNIVERSALITY"] = sat(cite(universal));
  c.statuses["COMPOSITION"] = sat(cite("sequential composition stays in the class"));
  return c;
}

}  // namespace

Registry seed_registry() {
  Registry r;
  r.axioms = {
      {"UNIVERSALITY", "the class contains a universal algorithm for the class"},
      {"TOTALITY", "every algorithm in the class gives a result on every input"},
      {"COMPOSITION", "the sequential composition of two algorithms of the class is in the class"},
      {"DECIDABLE_HALTING", "some algorithm of the class decides whether a member halts on an input"},
  };

  r.classes.push_back(universal_class("T", "Turing machines", "universal Turing machine"));
  r.classes.push_back(universal_class("RAM", "random access machines", "universal random access machine"));
  r.classes.push_back(universal_class("KA", "Kolmogorov algorithms", "universal Kolmogorov algorithm"));
  ClassProfile rm = universal_class("RM", "Minsky machines", "universal register machine");
  rm.statuses["UNIVERSALITY"] = sat(Evidence::exec_positive("rm_universal_differential", 200));
  rm.statuses["TOTALITY"] = viol(Evidence::exec_positive("rm_self_loop_diverges", 10));
  r.classes.push_back(std::move(rm));
  r.classes.push_back(universal_class("PRF", "partial recursive functions", "universal partial recursive function"));
  r.classes.push_back(super_recursive_class("ITM1", "inductive Turing machines of the first order",
                                            "universal inductive Turing machine of the first order"));
  r.classes.push_back(super_recursive_class("PETM", "periodic evolutionary Turing machines",
                                            "universal periodic evolutionary Turing machine"));
  r.classes.push_back(super_recursive_class("LPRF", "limiting partial recursive functions",
                                            "universal limiting partial recursive function"));

  ClassProfile tt{"TT", "total Turing machines", {}};
  tt.statuses["UNIVERSALITY"] = viol(cite("diagonalization: no total machine simulates every total machine"));
  tt.statuses["TOTALITY"] = sat(cite("total by definition"));
  tt.statuses["COMPOSITION"] = sat(cite("composition of total machines is total"));
  tt.statuses["DECIDABLE_HALTING"] = sat(cite("every member halts on every input"));
  r.classes.push_back(std::move(tt));

  ClassProfile fa{"FA", "finite automata", {}};
  fa.statuses["UNIVERSALITY"] = viol(cite("a universal automaton would need unbounded memory"));
  fa.statuses["TOTALITY"] = sat(Evidence::exec_exhaustive("fa_totality_exhaustive",
                                                          "all complete DFAs with at most 2 states over {a}, "
                                                          "all words of length at most 4"));
  fa.statuses["COMPOSITION"] = sat(cite("product construction"));
  fa.statuses["DECIDABLE_HALTING"] = sat(cite("every run halts after reading the input"));
  r.classes.push_back(std::move(fa));

  r.theorems.push_back({"fixed_output_undecidable",
                        "The Fixed Output Problem is undecidable for {class}.",
                        {"UNIVERSALITY"},
                        false,
                        "seed registry"});
  r.theorems.push_back({"fixed_output_recognizable",
                        "The Fixed Output Problem is recognizable for {class}.",
                        {"UNIVERSALITY", "COMPOSITION"},
                        false,
                        "seed registry"});
  return r;
}

}  // namespace vty::projection
