#include "vty/cli/app.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "vty/cli/manifest.hpp"
#include "vty/error.hpp"
#include "vty/logic/closure.hpp"
#include "vty/logic/parse.hpp"
#include "vty/logic/semantics.hpp"
#include "vty/models/encoding.hpp"
#include "vty/models/fixed_output.hpp"
#include "vty/models/witnesses.hpp"
#include "vty/projection/projection.hpp"
#include "vty/projection/relation.hpp"
#include "vty/variety/prevariety.hpp"

namespace vty::cli {

using nlohmann::json;

int exit_code_for(const json& report) {
  bool op_error = false;
  for (const auto& e : report.value("errors", json::array())) {
    const std::string code = e.value("code", "");
    if (code == "USAGE_ERROR" || code == "PARSE_ERROR" || code == "UNRESOLVED_REFERENCE") return kExitUsage;
    op_error = true;
  }
  if (op_error) return kExitFailed;
  const std::string verdict = report.value("verdict", "");
  return verdict == "PASS" || verdict == "ANSWERED" ? kExitOk : kExitFailed;
}

namespace {

void render(const json& value, int indent, std::string& out);

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_scalar(const json& v) { return !v.is_object() && !v.is_array(); }

void render(const json& value, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (value.is_object()) {
    for (const auto& [key, v] : value.items()) {
      if (is_scalar(v)) {
        const std::string text = scalar(v);
        out += pad + key + ":" + (text.empty() ? "" : " " + text) + "\n";
      } else if (v.empty()) {
        out += pad + key + ": " + (v.is_array() ? "none" : "-") + "\n";
      } else {
        out += pad + key + ":\n";
        render(v, indent + 2, out);
      }
    }
  } else if (value.is_array()) {
    for (const auto& v : value) {
      if (is_scalar(v)) {
        out += pad + "- " + scalar(v) + "\n";
      } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
        std::string row;
        for (const auto& x : v) row += (row.empty() ? "" : ", ") + scalar(x);
        out += pad + "- (" + row + ")\n";
      } else {
        out += pad + "-\n";
        render(v, indent + 2, out);
      }
    }
  } else {
    out += pad + scalar(value) + "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::string out;
  render(report, 0, out);
  return out;
}

namespace {

json formulas_json(const FormulaSet& set) {
  json out = json::array();
  for (const auto& f : set) out.push_back(f.text());
  return out;
}

json proof_json(const logic::Proof& proof) {
  json steps = json::array();
  for (const auto& s : proof.steps) {
    json step{{"formula", s.formula.text()}};
    switch (s.justification.kind) {
      case logic::Justification::Kind::Axiom: step["by"] = "axiom"; break;
      case logic::Justification::Kind::SchemaInstance: step["by"] = "schema " + s.justification.name; break;
      case logic::Justification::Kind::Rule: step["by"] = "rule " + s.justification.name; break;
    }
    if (!s.justification.premises.empty()) step["premises"] = s.justification.premises;
    if (!s.justification.substitution.empty()) {
      json sigma = json::object();
      for (const auto& [k, v] : s.justification.substitution) sigma[k] = v.text();
      step["substitution"] = sigma;
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

json diagnostics_json(const std::vector<variety::Diagnostic>& ds) {
  json out = json::array();
  for (const auto& d : ds) {
    out.push_back({{"code", variety::diagnostic_code_name(d.code)},
                   {"equation", d.equation},
                   {"component", d.component},
                   {"subject", d.subject},
                   {"detail", d.detail}});
  }
  return out;
}

json check_json(const variety::CheckReport& r) {
  json out{{"verdict", r.pass ? "PASS" : "FAIL"},
           {"mode", r.mode},
           {"equations", r.equations},
           {"diagnostics", diagnostics_json(r.diagnostics)},
           {"depth_bounds", r.depth_bounds}};
  if (!r.tuples.empty()) {
    json tuples = json::array();
    for (const auto& t : r.tuples) {
      json entry{{"components", t.components},
                 {"status", variety::tuple_status_name(t.status)},
                 {"axiom_intersection", formulas_json(t.axiom_intersection)},
                 {"theorem_intersection", formulas_json(t.theorem_intersection)},
                 {"label", "at depth " + std::to_string(t.depth)}};
      if (!t.witness.empty()) entry["witness"] = t.witness;
      if (t.axioms_surjective) entry["axioms_surjective"] = *t.axioms_surjective;
      if (t.theorems_surjective) entry["theorems_surjective"] = *t.theorems_surjective;
      tuples.push_back(std::move(entry));
    }
    out["tuples"] = std::move(tuples);
  }
  if (!r.closure_equality.empty()) {
    json eq = json::object();
    for (const auto& [id, e] : r.closure_equality) {
      eq[id] = {{"equal", e.equal}, {"depth", e.depth}, {"undesignated", formulas_json(e.undesignated)}};
    }
    out["closure_equality"] = std::move(eq);
  }
  return out;
}

json triad_json(const variety::Prevariety& pv) {
  json rules = json::array();
  for (const auto& r : pv.rules) rules.push_back(r.describe());
  return {{"axioms", formulas_json(pv.axioms)}, {"rules", rules}, {"theorems", formulas_json(pv.theorems)}};
}

json consistency_json(const variety::ConsistencyReport& r) {
  json components = json::object();
  for (const auto& [id, ok] : r.components) components[id] = ok ? "CONSISTENT" : "INCONSISTENT";
  return {{"components", components},
          {"global", r.global ? "CONSISTENT" : "INCONSISTENT"},
          {"locally_consistent_globally_inconsistent", r.locally_consistent_globally_inconsistent},
          {"minimal_inconsistent_pairs", r.pairs},
          {"minimal_inconsistent_groups", r.groups},
          {"groups_truncated", r.groups_truncated},
          {"atoms", r.atoms}};
}

json error_json(const std::string& code, const std::string& message) {
  return {{"code", code}, {"message", message}};
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  std::string bounds;
  std::string manifest;
  std::string prevariety;
  bool bijective = false;
  unsigned k = 1;
  std::string calculus;
  std::optional<unsigned> depth;
  bool proofs = false;
  std::string theorem;
  std::vector<std::string> theorems;
  std::vector<std::string> axioms;
  std::string goal;
  std::string base = "hilbert";
  std::size_t max_instructions = 1;
  std::size_t registers = 1;
  std::string inputs;
  std::uint64_t fuel = 10;
  std::uint64_t y = 0;
  std::string machine;
  std::string code;
  std::string schedule;
};

std::vector<std::uint64_t> number_list(const std::string& text, const char* what) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty() || item.size() > 18 || !std::all_of(item.begin(), item.end(), ::isdigit)) {
      throw UsageError(std::string("bad ") + what + " list '" + text + "'");
    }
    out.push_back(std::stoull(item));
  }
  return out;
}

Bounds parse_bounds(const std::string& text, Bounds b) {
  if (text.empty()) return b;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("bad --bounds entry '" + item + "'");
    std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    auto v = number_list(value, "bounds");
    if (v.size() != 1 || v[0] == 0) throw UsageError("--bounds values must be positive integers");
    if (key == "depth") {
      b.depth = static_cast<unsigned>(v[0]);
    } else if (key == "atoms") {
      b.atoms = v[0];
    } else if (key == "enum") {
      b.enumeration = v[0];
    } else if (key == "cap") {
      b.cap = v[0];
    } else {
      throw UsageError("unknown bound '" + key + "'");
    }
  }
  return b;
}

class Session {
 public:
  Session(std::string command, const Options& o) : command_(std::move(command)), o_(o) {}

  json execute() {
    json report{{"command", command_}, {"errors", json::array()}};
    try {
      // Command-line bounds override the manifest's.
      Bounds overrides = parse_bounds(o_.bounds, {});
      if (!o_.manifest.empty()) {
        std::ifstream probe(o_.manifest);
        if (!probe) throw UsageError("cannot read manifest");
        manifest_ = load_manifest(o_.manifest);
        bounds_ = manifest_->bounds;
      }
      if (overrides.depth) bounds_.depth = overrides.depth;
      if (overrides.atoms) bounds_.atoms = overrides.atoms;
      if (overrides.enumeration) bounds_.enumeration = overrides.enumeration;
      if (overrides.cap) bounds_.cap = overrides.cap;
      depth_override_ = overrides.depth;
      dispatch(report);
    } catch (const UsageError& e) {
      report["errors"].push_back(error_json("USAGE_ERROR", e.what()));
      report["verdict"] = "ERROR";
    } catch (const Error& e) {
      report["errors"].push_back(error_json(std::string(error_code_name(e.code())), e.what()));
      report["verdict"] = "ERROR";
    }
    return report;
  }

  std::optional<std::string> text() const { return text_; }

 private:
  std::string command_;
  const Options& o_;
  std::optional<Manifest> manifest_;
  Bounds bounds_;
  std::optional<unsigned> depth_override_;
  std::optional<std::string> text_;

  const Manifest& manifest() const {
    if (!manifest_) throw UsageError(command_ + " needs a manifest");
    return *manifest_;
  }

  variety::CheckOptions check_options() const { return {bounds_.cap_or_default()}; }

  logic::ConsistencyOptions consistency_options() const {
    logic::ConsistencyOptions c;
    c.atom_cap = bounds_.atoms_or_default();
    return c;
  }

  std::vector<const PrevarietyDecl*> selected_prevarieties() const {
    const Manifest& m = manifest();
    std::vector<const PrevarietyDecl*> out;
    if (!o_.prevariety.empty()) {
      const PrevarietyDecl* p = m.find_prevariety(o_.prevariety);
      if (!p) throw Error(ErrorCode::UnresolvedReference, "unresolved reference to prevariety '" + o_.prevariety + "'");
      out.push_back(p);
    } else {
      for (const auto& p : m.prevarieties) out.push_back(&p);
    }
    if (out.empty()) throw Error(ErrorCode::InvalidArgument, "the manifest declares no prevariety");
    return out;
  }

  void dispatch(json& report) {
    if (command_ == "check-prevariety") return check_prevariety(report);
    if (command_ == "check-variety") return check_variety(report);
    if (command_ == "closure") return closure(report);
    if (command_ == "consistency") return consistency(report);
    if (command_ == "project") return project(report);
    if (command_ == "classify") return classify(report);
    if (command_ == "minimal-subsets") return minimal_subsets(report);
    if (command_ == "fixed-output brute") return brute(report);
    if (command_ == "fixed-output recognize") return recognize(report);
    if (command_ == "report-matrix") return matrix(report);
    throw UsageError("unknown command");
  }

  void check_prevariety(json& report) {
    bool pass = true;
    json list = json::array();
    for (const PrevarietyDecl* decl : selected_prevarieties()) {
      variety::Prevariety pv = resolve_prevariety(manifest(), *decl, depth_override_);
      variety::CheckReport r =
          o_.bijective ? variety::check_bijective_variety(pv, variety::BijectiveMode::Prevariety, 1, {}, check_options())
                       : variety::check_prevariety(pv, check_options());
      json entry = check_json(r);
      entry["id"] = decl->id;
      entry["triad"] = triad_json(pv);
      entry["consistency"] = consistency_json(variety::consistency_report(pv, consistency_options()));
      pass = pass && r.pass;
      list.push_back(std::move(entry));
    }
    report["prevarieties"] = std::move(list);
    report["verdict"] = pass ? "PASS" : "FAIL";
  }

  void check_variety(json& report) {
    if (o_.k == 0) throw UsageError("--depth must be at least 1");
    bool pass = true;
    json list = json::array();
    for (const PrevarietyDecl* decl : selected_prevarieties()) {
      variety::Prevariety pv = resolve_prevariety(manifest(), *decl, depth_override_);
      auto witnesses = resolve_witnesses(manifest(), decl->id, depth_override_);
      variety::CheckReport r =
          o_.bijective
              ? variety::check_bijective_variety(pv, variety::BijectiveMode::Variety, o_.k, witnesses, check_options())
              : variety::check_variety(pv, o_.k, witnesses, check_options());
      json entry = check_json(r);
      entry["id"] = decl->id;
      entry["k"] = o_.k;
      pass = pass && r.pass;
      list.push_back(std::move(entry));
    }
    report["prevarieties"] = std::move(list);
    report["verdict"] = pass ? "PASS" : "FAIL";
  }

  void closure(json& report) {
    if (o_.calculus.empty()) throw UsageError("closure needs --calculus");
    logic::Calculus c = resolve_calculus(manifest(), o_.calculus, depth_override_);
    logic::ClosureOptions co;
    co.depth = o_.depth.value_or(c.closure_depth);
    co.theorem_cap = bounds_.cap_or_default();
    auto result = logic::closure(c, co);
    json theorems = json::array();
    for (const auto& t : result.theorems) {
      json entry{{"formula", t.formula.text()}, {"level", t.level}, {"proof_length", t.proof.steps.size()}};
      if (o_.proofs) entry["proof"] = proof_json(t.proof);
      theorems.push_back(std::move(entry));
    }
    report["calculus"] = c.id;
    report["depth"] = result.depth;
    report["fixpoint"] = result.fixpoint;
    report["domain_size"] = result.domain.size();
    report["count"] = result.theorems.size();
    report["theorems"] = std::move(theorems);
    report["verdict"] = "ANSWERED";
  }

  void consistency(json& report) {
    json list = json::array();
    for (const PrevarietyDecl* decl : selected_prevarieties()) {
      variety::Prevariety pv = resolve_prevariety(manifest(), *decl, depth_override_);
      json entry = consistency_json(variety::consistency_report(pv, consistency_options()));
      entry["id"] = decl->id;
      list.push_back(std::move(entry));
    }
    report["prevarieties"] = std::move(list);
    report["verdict"] = "ANSWERED";
  }

  json evidence_json(const projection::Registry& registry, bool& all_pass) const {
    json out = json::array();
    all_pass = true;
    for (const auto& e : projection::check_evidence(registry, models::run_witness)) {
      out.push_back({{"class", e.class_id},
                     {"axiom", e.axiom},
                     {"witness", e.witness},
                     {"exists", e.exists},
                     {"passed", e.passed},
                     {"cases", e.cases}});
      all_pass = all_pass && e.exists && e.passed;
    }
    return out;
  }

  void project(json& report) {
    const projection::Registry& registry = manifest().registry;
    projection::validate_registry(registry);
    if (o_.theorem.empty()) throw UsageError("project needs --theorem");
    const projection::TheoremRecord* t = registry.find_theorem(o_.theorem);
    if (!t) throw Error(ErrorCode::UnresolvedReference, "unresolved reference to theorem '" + o_.theorem + "'");
    projection::Projection p = projection::project(registry, *t);
    json corollaries = json::array(), na = json::array(), unknown = json::array();
    for (const auto& e : p.corollaries) corollaries.push_back({{"class", e.class_id}, {"statement", e.text}});
    for (const auto& e : p.not_applicable) na.push_back({{"class", e.class_id}, {"violated", e.blocking}});
    for (const auto& e : p.unknown) unknown.push_back({{"class", e.class_id}, {"unresolved", e.blocking}});
    bool evidence_ok = true;
    report["theorem"] = t->id;
    report["dependencies"] = t->dependencies;
    report["unconditional"] = t->unconditional;
    report["corollaries"] = std::move(corollaries);
    report["not_applicable"] = std::move(na);
    report["unknown"] = std::move(unknown);
    report["evidence"] = evidence_json(registry, evidence_ok);
    report["verdict"] = evidence_ok ? "ANSWERED" : "FAIL";
  }

  FormulaSet axiom_arguments() const {
    FormulaSet out;
    for (const auto& a : o_.axioms) out.insert(logic::parse_formula(a));
    return out;
  }

  logic::Calculus base() const {
    auto b = logic::presets::by_name(o_.base);
    if (!b) throw UsageError("unknown --base '" + o_.base + "'");
    return *b;
  }

  projection::RelationOptions relation_options() const {
    projection::RelationOptions r;
    r.depth = o_.depth.value_or(bounds_.depth_or_default());
    r.atom_cap = bounds_.atoms_or_default();
    r.theorem_cap = bounds_.cap_or_default();
    return r;
  }

  void classify(json& report) {
    if (o_.goal.empty()) throw UsageError("classify needs --goal");
    FormulaSet axioms = axiom_arguments();
    Formula goal = logic::parse_formula(o_.goal);
    auto options = relation_options();
    auto r = projection::classify_relation(axioms, goal, base(), options);
    report["axioms"] = formulas_json(axioms);
    report["goal"] = goal.text();
    report["base"] = o_.base;
    report["depth"] = r.depth;
    report["label"] = "at depth " + std::to_string(r.depth);
    report["consistent_with"] = projection::answer_name(r.consistent_with);
    report["sufficient"] = projection::answer_name(r.sufficient);
    report["irreducible"] = projection::answer_name(r.irreducible);
    report["entailed"] = r.entailed;
    report["truncated"] = r.truncated;
    if (r.proof) report["proof"] = proof_json(*r.proof);
    if (r.smaller) report["smaller_sufficient_subset"] = formulas_json(*r.smaller);
    report["verdict"] = "ANSWERED";
  }

  void minimal_subsets(json& report) {
    if (o_.goal.empty()) throw UsageError("minimal-subsets needs --goal");
    FormulaSet axioms = axiom_arguments();
    Formula goal = logic::parse_formula(o_.goal);
    auto m = projection::minimal_axiom_subsets(axioms, goal, base(), relation_options());
    json subsets = json::array();
    for (const auto& s : m.subsets) subsets.push_back(formulas_json(s));
    report["axioms"] = formulas_json(axioms);
    report["goal"] = goal.text();
    report["base"] = o_.base;
    report["depth"] = m.depth;
    report["label"] = "at depth " + std::to_string(m.depth);
    report["subsets"] = std::move(subsets);
    report["truncated"] = m.truncated;
    report["verdict"] = "ANSWERED";
  }

  static std::string program_text(const models::RegisterMachine& m) {
    std::string text = models::format_machine(m);
    if (text.empty()) return "";
    text.pop_back();
    for (auto& c : text) {
      if (c == '\n') c = ';';
    }
    return text;
  }

  void brute(json& report) {
    models::BruteBounds b;
    b.max_instructions = o_.max_instructions;
    b.max_registers = o_.registers;
    b.inputs = o_.inputs.empty() ? std::vector<std::uint64_t>{0} : number_list(o_.inputs, "input");
    b.fuel = o_.fuel;
    b.cap = bounds_.enumeration_or_default();
    auto r = models::fixed_output_brute(b, o_.y);
    json hits = json::array();
    for (const auto& h : r.hits) {
      hits.push_back({{"index", h.index},
                      {"program", program_text(h.machine)},
                      {"code", models::encode_program(h.machine).str()},
                      {"input", h.input},
                      {"steps", h.steps}});
    }
    report["bounds"] = {{"max_instructions", b.max_instructions},
                        {"max_registers", b.max_registers},
                        {"inputs", b.inputs},
                        {"fuel", b.fuel},
                        {"cap", b.cap}};
    report["y"] = o_.y;
    report["machines"] = r.machines;
    report["runs"] = r.runs;
    report["count"] = r.hits.size();
    report["hits"] = std::move(hits);
    report["verdict"] = "ANSWERED";
  }

  void recognize(json& report) {
    models::RegisterMachine m;
    if (!o_.machine.empty()) {
      const MachineDecl* d = manifest().find_machine(o_.machine);
      if (!d) throw Error(ErrorCode::UnresolvedReference, "unresolved reference to machine '" + o_.machine + "'");
      m = d->machine;
      report["machine"] = d->id;
    } else if (!o_.code.empty()) {
      if (!std::all_of(o_.code.begin(), o_.code.end(), ::isdigit)) throw UsageError("--code must be a natural number");
      m = models::decode_program(models::BigInt(o_.code));
      report["machine"] = o_.code;
    } else {
      throw UsageError("recognize needs --machine or --code");
    }
    auto schedule = o_.schedule.empty() ? std::vector<std::uint64_t>{10, 100, 1000} : number_list(o_.schedule, "fuel");
    std::optional<std::vector<std::uint64_t>> inputs;
    if (!o_.inputs.empty()) inputs = number_list(o_.inputs, "input");
    auto r = models::fixed_output_recognize(m, o_.y, schedule, inputs);
    report["program"] = program_text(m);
    report["y"] = o_.y;
    report["schedule"] = schedule;
    report["runs"] = r.runs;
    report["answer"] = r.yes() ? "YES" : "UNKNOWN";
    if (r.certificate) {
      report["certificate"] = {{"input", r.certificate->input},
                               {"fuel", r.certificate->fuel},
                               {"stage", r.certificate->stage},
                               {"replayed", models::replay(m, o_.y, *r.certificate)}};
    }
    report["verdict"] = "ANSWERED";
  }

  void matrix(json& report) {
    const projection::Registry& registry = manifest().registry;
    projection::validate_registry(registry);
    std::vector<projection::TheoremRecord> theorems;
    if (o_.theorems.empty()) {
      theorems = registry.theorems;
    } else {
      for (const auto& id : o_.theorems) {
        const auto* t = registry.find_theorem(id);
        if (!t) throw Error(ErrorCode::UnresolvedReference, "unresolved reference to theorem '" + id + "'");
        theorems.push_back(*t);
      }
    }
    auto m = projection::registry_report(registry, theorems);
    json rows = json::array();
    for (std::size_t i = 0; i < m.classes.size(); ++i) {
      json cells = json::array();
      for (auto c : m.cells[i]) cells.push_back(projection::cell_name(c));
      rows.push_back({{"class", m.classes[i]}, {"cells", cells}});
    }
    bool evidence_ok = true;
    report["theorems"] = m.theorems;
    report["rows"] = std::move(rows);
    report["evidence"] = evidence_json(registry, evidence_ok);
    report["verdict"] = evidence_ok ? "ANSWERED" : "FAIL";
    text_ = projection::render_matrix(m);
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  if (const char* env = std::getenv("VTY_FORMAT")) o.format = env;

  CLI::App app{"Checks logical varieties, projects theorems onto algorithm classes and runs register machines.", "vty"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "json or text (default from VTY_FORMAT, else json)")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--bounds", o.bounds, "depth=N,atoms=N,enum=N,cap=N overrides the manifest bounds");

  auto manifest = [&](CLI::App* sub, bool required) {
    auto opt = sub->add_option("manifest", o.manifest, "manifest file");
    if (required) opt->required();
  };
  auto formula_args = [&](CLI::App* sub) {
    manifest(sub, false);
    sub->add_option("--axioms", o.axioms, "axiom formulas")->expected(0, -1);
    sub->add_option("--goal", o.goal, "theorem formula")->required();
    sub->add_option("--base", o.base, "base calculus preset (hilbert, mp, refutation)");
    sub->add_option("--depth", o.depth, "proof search depth");
  };

  auto* check_pv = app.add_subcommand("check-prevariety", "check a manifest's prevarieties");
  manifest(check_pv, true);
  check_pv->add_option("--prevariety", o.prevariety, "prevariety id");
  check_pv->add_flag("--bijective", o.bijective, "also require injective maps; closure equality is reported");

  auto* check_v = app.add_subcommand("check-variety", "check variety witnesses up to a tuple size");
  manifest(check_v, true);
  check_v->add_option("--depth", o.k, "largest index tuple")->required();
  check_v->add_option("--prevariety", o.prevariety, "prevariety id");
  check_v->add_flag("--bijective", o.bijective, "require injective maps and closed theorem sets");

  auto* closure = app.add_subcommand("closure", "bounded deductive closure of a calculus");
  manifest(closure, true);
  closure->add_option("--calculus", o.calculus, "calculus id")->required();
  closure->add_option("--depth", o.depth, "closure depth");
  closure->add_flag("--proofs", o.proofs, "include proof objects");

  auto* consistency = app.add_subcommand("consistency", "per-component and global consistency");
  manifest(consistency, true);
  consistency->add_option("--prevariety", o.prevariety, "prevariety id");

  auto* project = app.add_subcommand("project", "project a theorem onto the class registry");
  manifest(project, true);
  project->add_option("--theorem", o.theorem, "theorem id")->required();

  formula_args(app.add_subcommand("classify", "consistent / sufficient / irreducible flags"));
  formula_args(app.add_subcommand("minimal-subsets", "minimal sufficient axiom subsets"));

  auto* fixed = app.add_subcommand("fixed-output", "bounded Fixed Output Problem tools");
  fixed->require_subcommand(1);
  auto* brute = fixed->add_subcommand("brute", "exhaustive search of a bounded machine world");
  manifest(brute, false);
  brute->add_option("--max-instructions", o.max_instructions, "longest program");
  brute->add_option("--registers", o.registers, "register count");
  brute->add_option("--inputs", o.inputs, "comma-separated inputs (default 0)");
  brute->add_option("--fuel", o.fuel, "fuel per run");
  brute->add_option("--y", o.y, "target output")->required();
  auto* recognize = fixed->add_subcommand("recognize", "dovetailing recognizer");
  manifest(recognize, false);
  recognize->add_option("--machine", o.machine, "machine id in the manifest");
  recognize->add_option("--code", o.code, "program code");
  recognize->add_option("--y", o.y, "target output")->required();
  recognize->add_option("--schedule", o.schedule, "comma-separated increasing fuel values");
  recognize->add_option("--inputs", o.inputs, "comma-separated inputs (default 0, 1, 2, ...)");

  auto* matrix = app.add_subcommand("report-matrix", "classes x theorems matrix");
  manifest(matrix, true);
  matrix->add_option("--theorem", o.theorems, "restrict to these theorem ids");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    std::string command = app.get_subcommands().empty() ? "" : app.get_subcommands()[0]->get_name();
    json report{{"command", command}, {"errors", json::array({error_json("USAGE_ERROR", e.what())})}, {"verdict", "ERROR"}};
    out << report.dump(2) << "\n";
    return exit_code_for(report);
  }

  std::string command = app.get_subcommands()[0]->get_name();
  if (command == "fixed-output") command += " " + fixed->get_subcommands()[0]->get_name();
  Session session(command, o);
  json report = session.execute();
  if (o.format == "text") {
    auto custom = session.text();
    if (custom && report["errors"].empty()) {
      out << *custom;
      out << "verdict: " << report["verdict"].get<std::string>() << "\n";
    } else {
      out << render_text(report);
    }
  } else {
    out << report.dump(2) << "\n";
  }
  return exit_code_for(report);
}

}  // namespace vty::cli
