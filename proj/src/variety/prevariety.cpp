#include "vty/variety/prevariety.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "vty/error.hpp"

namespace vty::variety {

std::string_view diagnostic_code_name(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::AxiomUnionMismatch: return "AXIOM_UNION_MISMATCH";
    case DiagnosticCode::RuleUnionMismatch: return "RULE_UNION_MISMATCH";
    case DiagnosticCode::TheoremUnionMismatch: return "THEOREM_UNION_MISMATCH";
    case DiagnosticCode::NotATheorem: return "NOT_A_THEOREM";
    case DiagnosticCode::MapUndefined: return "MAP_UNDEFINED";
    case DiagnosticCode::RuleConflict: return "RULE_CONFLICT";
    case DiagnosticCode::DepthExplosion: return "DEPTH_EXPLOSION";
    case DiagnosticCode::ComponentIdConflict: return "COMPONENT_ID_CONFLICT";
    case DiagnosticCode::MissingWitness: return "MISSING_WITNESS";
    case DiagnosticCode::WitnessBadTuple: return "WITNESS_BAD_TUPLE";
    case DiagnosticCode::WitnessMapUndefined: return "WITNESS_MAP_UNDEFINED";
    case DiagnosticCode::WitnessProjectionOutside: return "WITNESS_PROJECTION_OUTSIDE";
    case DiagnosticCode::WitnessNotATheorem: return "WITNESS_NOT_A_THEOREM";
    case DiagnosticCode::NotBijective: return "NOT_BIJECTIVE";
    case DiagnosticCode::NotClosed: return "NOT_CLOSED";
  }
  return "UNKNOWN";
}

std::string_view tuple_status_name(TupleStatus status) {
  switch (status) {
    case TupleStatus::Vacuous: return "vacuous";
    case TupleStatus::Witnessed: return "witnessed";
    case TupleStatus::SelfWitnessed: return "self-witnessed";
    case TupleStatus::Missing: return "missing";
    case TupleStatus::Invalid: return "invalid";
  }
  return "unknown";
}

void CheckReport::add(Diagnostic d) {
  pass = false;
  diagnostics.push_back(std::move(d));
}

void CheckReport::finalize() {
  std::stable_sort(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.component, a.subject, a.equation) < std::tie(b.component, b.subject, b.equation);
  });
  auto same = [](const Diagnostic& a, const Diagnostic& b) {
    return a.code == b.code && a.equation == b.equation && a.component == b.component && a.subject == b.subject &&
           a.detail == b.detail;
  };
  diagnostics.erase(std::unique(diagnostics.begin(), diagnostics.end(), same), diagnostics.end());
}

namespace {

std::string tuple_text(const std::vector<std::string>& ids) {
  std::string out = "(";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += ids[i];
  }
  return out + ")";
}

FormulaSet intersect(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

// First occurrence of every component id; a repeated id with different
// content is reported.
std::vector<const Component*> distinct_components(const Prevariety& pv, CheckReport* report) {
  std::vector<const Component*> out;
  std::map<std::string, const Component*> seen;
  for (const Component& c : pv.components) {
    auto [it, inserted] = seen.emplace(c.id, &c);
    if (inserted) {
      out.push_back(&c);
    } else if (report && !(*it->second == c)) {
      report->add({DiagnosticCode::ComponentIdConflict, "", c.id, c.id,
                   "component id used for two different components"});
    }
  }
  std::sort(out.begin(), out.end(), [](const Component* a, const Component* b) { return a->id < b->id; });
  return out;
}

struct Images {
  FormulaSet axioms;
  FormulaSet theorems;
};

// Transports A_i and M_i; undefined points become diagnostics when a report
// is supplied, otherwise MAP_UNDEFINED is thrown.
Images transport(const Component& c, CheckReport* report) {
  Images images;
  auto carry = [&](const FormulaMap& map, const FormulaSet& inputs, const char* equation, FormulaSet& out) {
    for (const Formula& f : inputs) {
      if (auto image = map.try_apply(f)) {
        out.insert(*image);
      } else if (report) {
        report->add({DiagnosticCode::MapUndefined, equation, c.id, f.text(),
                     std::string(equation[0] == 'A' ? "axiom" : "theorem") + " map undefined on this formula"});
      } else {
        throw Error(ErrorCode::MapUndefined, "component '" + c.id + "': " +
                                                 (equation[0] == 'A' ? "axiom" : "theorem") +
                                                 " map undefined on " + f.text());
      }
    }
  };
  carry(c.axiom_map, c.calculus.axioms, "A", images.axioms);
  carry(c.theorem_map, c.designated, "M", images.theorems);
  return images;
}

}  // namespace

Prevariety assemble_prevariety(const std::vector<Component>& components) {
  Prevariety pv;
  std::map<std::string, const InferenceRule*> rules;
  for (const Component& c : components) {
    Images images = transport(c, nullptr);
    pv.axioms.insert(images.axioms.begin(), images.axioms.end());
    pv.theorems.insert(images.theorems.begin(), images.theorems.end());
    for (const InferenceRule& r : c.calculus.rules) {
      auto [it, inserted] = rules.emplace(r.name(), &r);
      if (!inserted && !(*it->second == r)) {
        throw Error(ErrorCode::InvalidArgument, "rule '" + r.name() + "' is defined differently by two components");
      }
    }
  }
  for (const auto& [_, r] : rules) pv.rules.push_back(*r);
  pv.components = components;
  return pv;
}

CheckReport check_prevariety(const Prevariety& candidate, const CheckOptions& options) {
  CheckReport report;
  report.mode = candidate.quasi ? "quasi-prevariety" : "prevariety";
  auto components = distinct_components(candidate, &report);

  // Formula -> first component id (by id order) whose image contains it.
  std::map<Formula, std::string> axiom_union;
  std::map<Formula, std::string> theorem_union;
  std::map<std::string, std::pair<const InferenceRule*, std::string>> rule_union;

  for (const Component* c : components) {
    report.depth_bounds[c->id] = c->calculus.closure_depth;
    Images images = transport(*c, &report);
    for (const Formula& f : images.axioms) axiom_union.emplace(f, c->id);
    for (const Formula& f : images.theorems) theorem_union.emplace(f, c->id);
    for (const InferenceRule& r : c->calculus.rules) {
      auto [it, inserted] = rule_union.try_emplace(r.name(), &r, c->id);
      if (!inserted && !(*it->second.first == r)) {
        report.add({DiagnosticCode::RuleConflict, "H", c->id, r.name(),
                    "rule also defined differently by component " + it->second.second});
      }
    }
    if (candidate.quasi) continue;
    for (const Formula& t : c->designated) {
      try {
        if (!logic::proves(c->calculus, t, c->calculus.closure_depth, options.theorem_cap).proved()) {
          report.add({DiagnosticCode::NotATheorem, "M", c->id, t.text(),
                      "designated theorem not derivable at depth " + std::to_string(c->calculus.closure_depth)});
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DepthExplosion) throw;
        report.add({DiagnosticCode::DepthExplosion, "M", c->id, t.text(), e.what()});
      }
    }
  }

  bool a_ok = true, h_ok = true, m_ok = true;
  auto compare = [&](const FormulaSet& triad, const std::map<Formula, std::string>& unions, DiagnosticCode code,
                     const char* eq, bool& ok) {
    for (const auto& [f, owner] : unions) {
      if (!triad.contains(f)) {
        ok = false;
        report.add({code, eq, owner, f.text(), "produced by a component but missing from the triad"});
      }
    }
    for (const Formula& f : triad) {
      if (!unions.contains(f)) {
        ok = false;
        report.add({code, eq, "", f.text(), "in the triad but produced by no component"});
      }
    }
  };
  compare(candidate.axioms, axiom_union, DiagnosticCode::AxiomUnionMismatch, "A", a_ok);
  compare(candidate.theorems, theorem_union, DiagnosticCode::TheoremUnionMismatch, "M", m_ok);

  std::set<std::string> triad_rules;
  for (const InferenceRule& r : candidate.rules) {
    triad_rules.insert(r.name());
    auto it = rule_union.find(r.name());
    if (it == rule_union.end()) {
      h_ok = false;
      report.add({DiagnosticCode::RuleUnionMismatch, "H", "", r.name(), "in the triad but used by no component"});
    } else if (!(*it->second.first == r)) {
      h_ok = false;
      report.add({DiagnosticCode::RuleUnionMismatch, "H", it->second.second, r.name(),
                  "triad rule differs from the component's definition"});
    }
  }
  for (const auto& [name, owner] : rule_union) {
    if (!triad_rules.contains(name)) {
      h_ok = false;
      report.add({DiagnosticCode::RuleUnionMismatch, "H", owner.second, name,
                  "used by a component but missing from the triad"});
    }
  }

  report.equations["A"] = a_ok ? "holds" : "fails";
  report.equations["H"] = h_ok ? "holds" : "fails";
  report.equations["M"] = m_ok ? "holds" : "fails";
  report.finalize();
  return report;
}

namespace {

struct ComponentData {
  const Component* component = nullptr;
  Images images;
  // g_i of the bounded closure (restricted to where g_i is defined).
  std::optional<FormulaSet> transported_closure;
  std::optional<logic::ClosureResult> closure;
};

// Validates a witness against the intersections of one tuple.
bool validate_witness(const VarietyWitness& w, const std::string& tuple, const FormulaSet& axiom_meet,
                      const FormulaSet& theorem_meet, const CheckOptions& options, CheckReport& report,
                      TupleReport& entry) {
  bool ok = true;
  FormulaSet axiom_image;
  for (const Formula& a : w.covering.axioms) {
    auto image = w.axiom_projection.try_apply(a);
    if (!image) {
      ok = false;
      report.add({DiagnosticCode::WitnessMapUndefined, "A", tuple, a.text(),
                  "axiom projection of witness " + w.id + " undefined on a covering axiom"});
      continue;
    }
    axiom_image.insert(*image);
    if (!axiom_meet.contains(*image)) {
      ok = false;
      report.add({DiagnosticCode::WitnessProjectionOutside, "A", tuple, image->text(),
                  "witness " + w.id + " projects axiom " + a.text() + " outside the axiom intersection"});
    }
  }
  FormulaSet theorem_image;
  for (const Formula& t : w.theorem_subset) {
    auto image = w.theorem_projection.try_apply(t);
    if (!image) {
      ok = false;
      report.add({DiagnosticCode::WitnessMapUndefined, "M", tuple, t.text(),
                  "theorem projection of witness " + w.id + " undefined on a listed theorem"});
      continue;
    }
    theorem_image.insert(*image);
    if (!theorem_meet.contains(*image)) {
      ok = false;
      report.add({DiagnosticCode::WitnessProjectionOutside, "M", tuple, image->text(),
                  "witness " + w.id + " projects theorem " + t.text() + " outside the theorem intersection"});
    }
    try {
      if (!logic::proves(w.covering, t, w.covering.closure_depth, options.theorem_cap).proved()) {
        ok = false;
        report.add({DiagnosticCode::WitnessNotATheorem, "M", tuple, t.text(),
                    "not derivable in the covering calculus of " + w.id + " at depth " +
                        std::to_string(w.covering.closure_depth)});
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DepthExplosion) throw;
      ok = false;
      report.add({DiagnosticCode::DepthExplosion, "M", tuple, t.text(), e.what()});
    }
  }
  entry.axioms_surjective = axiom_image == axiom_meet;
  entry.theorems_surjective = theorem_image == theorem_meet;
  return ok;
}

}  // namespace

CheckReport check_variety(const Prevariety& candidate, unsigned k, const std::vector<VarietyWitness>& witnesses,
                          const CheckOptions& options) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "variety depth k must be at least 1");
  CheckReport report = check_prevariety(candidate, options);
  report.mode = "variety";
  if (!report.pass) return report;

  auto components = distinct_components(candidate, nullptr);
  std::map<std::string, std::size_t> position;
  std::vector<ComponentData> data;
  for (const Component* c : components) {
    position[c->id] = data.size();
    data.push_back(ComponentData{c, transport(*c, nullptr), std::nullopt, std::nullopt});
  }

  auto closure_of = [&](ComponentData& d) -> const FormulaSet* {
    if (d.transported_closure) return &*d.transported_closure;
    logic::ClosureOptions co;
    co.depth = d.component->calculus.closure_depth;
    co.goals.assign(d.component->designated.begin(), d.component->designated.end());
    co.theorem_cap = options.theorem_cap;
    try {
      d.closure = logic::closure(d.component->calculus, co);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DepthExplosion) throw;
      report.add({DiagnosticCode::DepthExplosion, "M", d.component->id, "", e.what()});
      return nullptr;
    }
    report.domain_sizes[d.component->id] = d.closure->domain.size();
    d.transported_closure = d.component->theorem_map.image_of_defined(d.closure->formulas());
    return &*d.transported_closure;
  };

  // Index witnesses by their (sorted) tuple.
  std::map<std::vector<std::string>, const VarietyWitness*> by_tuple;
  for (const VarietyWitness& w : witnesses) {
    std::vector<std::string> ids = w.index_tuple;
    std::sort(ids.begin(), ids.end());
    bool bad = ids.empty() || std::adjacent_find(ids.begin(), ids.end()) != ids.end();
    for (const auto& id : ids) bad = bad || !position.contains(id);
    if (bad) {
      report.add({DiagnosticCode::WitnessBadTuple, "", "", tuple_text(w.index_tuple),
                  "witness " + w.id + " names unknown or repeated components"});
      continue;
    }
    by_tuple.emplace(ids, &w);
  }

  const std::size_t n = data.size();
  const std::size_t max_size = std::min<std::size_t>(k, n);
  bool a_ok = true;
  bool explosion = false;
  for (std::size_t size = 1; size <= max_size; ++size) {
    // Lexicographic combinations of `size` component positions.
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      TupleReport entry;
      FormulaSet axiom_meet = data[pick[0]].images.axioms;
      std::optional<FormulaSet> closure_meet;
      unsigned depth = 0;
      for (std::size_t j = 0; j < size; ++j) {
        ComponentData& d = data[pick[j]];
        entry.components.push_back(d.component->id);
        if (j) axiom_meet = intersect(axiom_meet, d.images.axioms);
        depth = std::max(depth, d.component->calculus.closure_depth);
        const FormulaSet* t = closure_of(d);
        if (!t) {
          explosion = true;
          closure_meet.reset();
          break;
        }
        closure_meet = closure_meet ? intersect(*closure_meet, *t) : *t;
      }
      if (closure_meet) {
        entry.axiom_intersection = axiom_meet;
        entry.theorem_intersection = *closure_meet;
        entry.depth = depth;
        std::string tuple = tuple_text(entry.components);
        if (axiom_meet.empty() && closure_meet->empty()) {
          entry.status = TupleStatus::Vacuous;
        } else if (auto it = by_tuple.find(entry.components); it != by_tuple.end()) {
          entry.witness = it->second->id;
          bool ok = validate_witness(*it->second, tuple, axiom_meet, *closure_meet, options, report, entry);
          entry.status = ok ? TupleStatus::Witnessed : TupleStatus::Invalid;
          a_ok = a_ok && ok;
        } else if (size == 1) {
          // The component covers its own images: C = C_i, f = f_i, g = g_i and
          // N = the designated theorems inside the bounded closure.
          const ComponentData& d = data[pick[0]];
          VarietyWitness self{"self:" + d.component->id, entry.components, d.component->calculus,
                              d.component->axiom_map, d.component->theorem_map, {}};
          for (const Formula& t : d.component->designated) {
            if (d.closure->contains(t)) self.theorem_subset.insert(t);
          }
          entry.witness = self.id;
          bool ok = validate_witness(self, tuple, axiom_meet, *closure_meet, options, report, entry);
          entry.status = ok ? TupleStatus::SelfWitnessed : TupleStatus::Invalid;
          a_ok = a_ok && ok;
        } else {
          entry.status = TupleStatus::Missing;
          a_ok = false;
          report.add({DiagnosticCode::MissingWitness, "", "", tuple,
                       "nonempty intersection without a covering witness"});
        }
        report.tuples.push_back(std::move(entry));
      }
      // Advance the combination.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  report.equations["intersections"] =
      std::string(a_ok && !explosion ? "covered" : "uncovered") + " up to k=" + std::to_string(k);
  report.finalize();
  return report;
}

CheckReport check_bijective_variety(const Prevariety& candidate, BijectiveMode mode, unsigned k,
                                    const std::vector<VarietyWitness>& witnesses, const CheckOptions& options) {
  CheckReport report = mode == BijectiveMode::Variety ? check_variety(candidate, k, witnesses, options)
                                                      : check_prevariety(candidate, options);
  report.mode = mode == BijectiveMode::Variety ? "bijective-variety" : "bijective-prevariety";

  bool injective = true;
  bool closed = true;
  for (const Component* c : distinct_components(candidate, nullptr)) {
    if (auto pair = c->axiom_map.collision(c->calculus.axioms)) {
      injective = false;
      report.add({DiagnosticCode::NotBijective, "A", c->id, pair->first.text() + " | " + pair->second.text(),
                  "axiom map sends both formulas to " + c->axiom_map.apply(pair->first).text()});
    }
    if (auto pair = c->theorem_map.collision(c->designated)) {
      injective = false;
      report.add({DiagnosticCode::NotBijective, "M", c->id, pair->first.text() + " | " + pair->second.text(),
                  "theorem map sends both formulas to " + c->theorem_map.apply(pair->first).text()});
    }

    logic::ClosureOptions co;
    co.depth = c->calculus.closure_depth;
    co.goals.assign(c->designated.begin(), c->designated.end());
    co.theorem_cap = options.theorem_cap;
    ClosureEquality eq;
    eq.depth = co.depth;
    try {
      FormulaSet bounded = logic::closure(c->calculus, co).formulas();
      for (const Formula& f : bounded) {
        if (!c->designated.contains(f)) eq.undesignated.insert(f);
      }
      eq.equal = bounded == c->designated;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DepthExplosion) throw;
      report.add({DiagnosticCode::DepthExplosion, "M", c->id, "", e.what()});
    }
    if (mode == BijectiveMode::Variety && !eq.equal) {
      closed = false;
      for (const Formula& f : eq.undesignated) {
        report.add({DiagnosticCode::NotClosed, "M", c->id, f.text(),
                    "in the closure at depth " + std::to_string(eq.depth) + " but not designated"});
      }
    }
    report.closure_equality[c->id] = std::move(eq);
  }
  report.equations["injective"] = injective ? "holds" : "fails";
  report.equations["closed"] = std::string(closed ? "holds" : "fails") +
                               (mode == BijectiveMode::Variety ? "" : " (reported only)");
  if (mode == BijectiveMode::Prevariety) {
    bool all_equal = true;
    for (const auto& [_, eq] : report.closure_equality) all_equal = all_equal && eq.equal;
    report.equations["closed"] = std::string(all_equal ? "holds" : "fails") + " (reported only)";
  }
  report.finalize();
  return report;
}

std::vector<std::string> component_membership(const Prevariety& pv, const Formula& query) {
  std::set<std::string> ids;
  for (const Component& c : pv.components) {
    for (const Formula& t : c.designated) {
      auto image = c.theorem_map.try_apply(t);
      if (image && *image == query) {
        ids.insert(c.id);
        break;
      }
    }
  }
  return {ids.begin(), ids.end()};
}

ConsistencyReport consistency_report(const Prevariety& pv, const logic::ConsistencyOptions& options) {
  ConsistencyReport out;
  auto components = distinct_components(pv, nullptr);
  std::vector<FormulaSet> images;
  for (const Component* c : components) {
    Images im = transport(*c, nullptr);
    FormulaSet all = im.axioms;
    all.insert(im.theorems.begin(), im.theorems.end());
    images.push_back(std::move(all));
  }

  FormulaSet global = pv.axioms;
  global.insert(pv.theorems.begin(), pv.theorems.end());
  auto verdict = logic::consistent(global, options);
  out.global = verdict.consistent;
  out.atoms = verdict.atoms.size();

  bool all_local = true;
  for (std::size_t i = 0; i < components.size(); ++i) {
    bool ok = logic::consistent(images[i], options).consistent;
    out.components[components[i]->id] = ok;
    all_local = all_local && ok;
  }
  out.locally_consistent_globally_inconsistent = all_local && !out.global;

  const std::size_t n = components.size();
  std::size_t max_size = n;
  if (n > kGroupEnumerationCap) {
    max_size = std::min<std::size_t>(n, 2);
    out.groups_truncated = true;
  }
  std::vector<std::vector<std::size_t>> found;
  for (std::size_t size = 1; size <= max_size; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      bool contains_found = std::any_of(found.begin(), found.end(), [&](const std::vector<std::size_t>& g) {
        return std::includes(pick.begin(), pick.end(), g.begin(), g.end());
      });
      if (!contains_found) {
        FormulaSet united;
        for (std::size_t i : pick) united.insert(images[i].begin(), images[i].end());
        if (!logic::consistent(united, options).consistent) found.push_back(pick);
      }
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  for (const auto& g : found) {
    std::vector<std::string> ids;
    for (std::size_t i : g) ids.push_back(components[i]->id);
    if (ids.size() == 2) out.pairs.push_back(ids);
    out.groups.push_back(std::move(ids));
  }
  return out;
}

}  // namespace vty::variety
