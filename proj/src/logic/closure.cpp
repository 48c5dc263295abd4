#include "vty/logic/closure.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "vty/error.hpp"

namespace vty::logic {

namespace {

// Upper bound on substitutions tried per theorem by the substitution rule.
constexpr std::size_t kSubstitutionBudget = 5'000'000;

std::size_t kind_slot(Kind k) { return static_cast<std::size_t>(k); }

// Saturation by rounds: round L combines premises from rounds < L, at least
// one of them from round L-1, so each formula is recorded at its minimal
// derivation height.
class Engine {
 public:
  Engine(const Calculus& calculus, const ClosureOptions& options)
      : calculus_(calculus), options_(options) {
    FormulaSet dom = instantiation_domain(calculus, options.goals);
    domain_set_ = dom;
    domain_.assign(dom.begin(), dom.end());
  }

  void stop_on(const Formula& goal) { goal_ = goal; }
  bool goal_found() const { return goal_index_.has_value(); }
  std::size_t goal_index() const { return *goal_index_; }

  // Returns true if the round added nothing.
  bool run(unsigned depth, unsigned& reached) {
    seed();
    reached = 0;
    if (goal_found()) return false;
    std::size_t frontier = 0;
    for (unsigned level = 1; level <= depth; ++level) {
      std::size_t before = table_.size();
      round(level, frontier, before);
      frontier = before;
      reached = level;
      if (goal_found()) return false;
      if (table_.size() == before) return true;
    }
    return false;
  }

  Proof proof_of(std::size_t idx) const {
    Proof proof;
    std::unordered_map<std::size_t, std::size_t> emitted;
    emit(idx, proof, emitted);
    return proof;
  }

  std::size_t size() const { return table_.size(); }
  const Formula& formula(std::size_t i) const { return table_[i].formula; }
  unsigned level(std::size_t i) const { return table_[i].level; }
  const FormulaSet& domain() const { return domain_set_; }

 private:
  struct Entry {
    Formula formula;
    unsigned level;
    Justification justification;
  };

  void add(Formula f, unsigned level, Justification j) {
    if (index_.contains(f)) return;
    if (table_.size() >= options_.theorem_cap) {
      throw Error(ErrorCode::DepthExplosion,
                  "closure of '" + calculus_.id + "' exceeds " + std::to_string(options_.theorem_cap) +
                      " theorems at depth " + std::to_string(level) + "; tighten the instantiation domain");
    }
    std::size_t idx = table_.size();
    index_.emplace(f, idx);
    buckets_[kind_slot(f.kind())].push_back(idx);
    if (goal_ && *goal_ == f) goal_index_ = idx;
    table_.push_back(Entry{std::move(f), level, std::move(j)});
  }

  void check_budget(std::size_t metas, const std::string& what) const {
    double count = 1;
    for (std::size_t i = 0; i < metas; ++i) count *= static_cast<double>(domain_.size());
    if (count > static_cast<double>(kSubstitutionBudget)) {
      throw Error(ErrorCode::DepthExplosion, what + " of '" + calculus_.id + "' needs " +
                                                 std::to_string(static_cast<long double>(count)) +
                                                 " substitutions over the instantiation domain");
    }
  }

  // Calls fn(subst) for every assignment of `names` to domain elements, in
  // lexicographic order of (names, domain).
  template <typename Fn>
  void for_each_assignment(const std::vector<std::string>& names, Fn&& fn) {
    if (!names.empty() && domain_.empty()) return;
    std::vector<std::size_t> digits(names.size(), 0);
    Substitution subst;
    for (std::size_t i = 0; i < names.size(); ++i) subst.insert_or_assign(names[i], domain_[0]);
    while (true) {
      fn(subst);
      if (goal_found()) return;
      std::size_t pos = names.size();
      while (pos > 0) {
        --pos;
        if (++digits[pos] < domain_.size()) {
          subst.insert_or_assign(names[pos], domain_[digits[pos]]);
          break;
        }
        digits[pos] = 0;
        subst.insert_or_assign(names[pos], domain_[0]);
        if (pos == 0) return;
      }
      if (names.empty()) return;
    }
  }

  void seed() {
    for (const Formula& a : calculus_.axioms) {
      add(a, 0, Justification{Justification::Kind::Axiom, {}, {}, {}});
      if (goal_found()) return;
    }
    for (const AxiomSchema& schema : calculus_.schemas) {
      auto metas = metas_of(schema.pattern);
      std::vector<std::string> names(metas.begin(), metas.end());
      check_budget(names.size(), "schema " + schema.id);
      for_each_assignment(names, [&](const Substitution& s) {
        add(instantiate(schema.pattern, s), 0, Justification{Justification::Kind::SchemaInstance, schema.id, {}, s});
      });
      if (goal_found()) return;
    }
  }

  void round(unsigned level, std::size_t frontier, std::size_t limit) {
    for (const InferenceRule& rule : calculus_.rules) {
      if (rule.kind() == InferenceRule::Kind::Substitution) {
        substitution_round(rule, level, frontier, limit);
      } else {
        std::vector<std::size_t> chosen;
        Substitution subst;
        join(rule, 0, subst, chosen, false, level, frontier, limit);
      }
      if (goal_found()) return;
    }
  }

  void join(const InferenceRule& rule, std::size_t k, const Substitution& subst, std::vector<std::size_t>& chosen,
            bool uses_frontier, unsigned level, std::size_t frontier, std::size_t limit) {
    if (goal_found()) return;
    if (k == rule.premises().size()) {
      if (!uses_frontier) return;
      add(instantiate(rule.conclusion(), subst), level,
          Justification{Justification::Kind::Rule, rule.name(), chosen, subst});
      return;
    }
    const Formula& pattern = rule.premises()[k];
    auto visit = [&](std::size_t idx) {
      Substitution extended = subst;
      if (!match(pattern, table_[idx].formula, extended)) return;
      chosen.push_back(idx);
      join(rule, k + 1, extended, chosen, uses_frontier || idx >= frontier, level, frontier, limit);
      chosen.pop_back();
    };
    if (pattern.is_meta() && subst.contains(pattern.name())) {
      auto it = index_.find(subst.at(pattern.name()));
      if (it != index_.end() && it->second < limit) visit(it->second);
      return;
    }
    if (pattern.is_meta()) {
      for (std::size_t idx = 0; idx < limit && !goal_found(); ++idx) visit(idx);
      return;
    }
    const auto& bucket = buckets_[kind_slot(pattern.kind())];
    for (std::size_t i = 0; i < bucket.size() && !goal_found(); ++i) {
      std::size_t idx = bucket[i];
      if (idx >= limit) break;
      visit(idx);
    }
  }

  void substitution_round(const InferenceRule& rule, unsigned level, std::size_t frontier, std::size_t limit) {
    for (std::size_t idx = frontier; idx < limit && !goal_found(); ++idx) {
      Formula source = table_[idx].formula;
      auto atoms = atoms_of(source);
      std::vector<std::string> names(atoms.begin(), atoms.end());
      if (names.empty()) continue;
      check_budget(names.size(), "substitution rule " + rule.name());
      for_each_assignment(names, [&](const Substitution& s) {
        Formula image = substitute_atoms(source, s);
        if (image == source) return;
        add(std::move(image), level, Justification{Justification::Kind::Rule, rule.name(), {idx}, s});
      });
    }
  }

  std::size_t emit(std::size_t idx, Proof& proof, std::unordered_map<std::size_t, std::size_t>& emitted) const {
    if (auto it = emitted.find(idx); it != emitted.end()) return it->second;
    const Entry& e = table_[idx];
    Justification j = e.justification;
    for (auto& p : j.premises) p = emit(p, proof, emitted);
    std::size_t pos = proof.steps.size();
    proof.steps.push_back(ProofStep{e.formula, std::move(j)});
    emitted.emplace(idx, pos);
    return pos;
  }

  const Calculus& calculus_;
  const ClosureOptions& options_;
  FormulaSet domain_set_;
  std::vector<Formula> domain_;
  std::vector<Entry> table_;
  std::unordered_map<Formula, std::size_t, FormulaHash> index_;
  std::array<std::vector<std::size_t>, 7> buckets_;
  std::optional<Formula> goal_;
  std::optional<std::size_t> goal_index_;
};

}  // namespace

FormulaSet instantiation_domain(const Calculus& calculus, const std::vector<Formula>& goals) {
  FormulaSet dom;
  for (const Formula& a : calculus.axioms) collect_subformulas(a, dom);
  for (const AxiomSchema& s : calculus.schemas) collect_ground_subformulas(s.pattern, dom);
  for (const InferenceRule& r : calculus.rules) {
    if (r.kind() != InferenceRule::Kind::Schema) continue;
    for (const Formula& p : r.premises()) collect_ground_subformulas(p, dom);
    collect_ground_subformulas(r.conclusion(), dom);
  }
  for (const Formula& g : goals) collect_ground_subformulas(g, dom);
  for (const std::string& a : calculus.atoms) dom.insert(Formula::atom(a));
  return dom;
}

bool ClosureResult::contains(const Formula& f) const { return find(f) != nullptr; }

const Theorem* ClosureResult::find(const Formula& f) const {
  auto it = std::lower_bound(theorems.begin(), theorems.end(), f,
                             [](const Theorem& t, const Formula& x) { return t.formula < x; });
  if (it != theorems.end() && it->formula == f) return &*it;
  return nullptr;
}

FormulaSet ClosureResult::formulas() const {
  FormulaSet out;
  for (const auto& t : theorems) out.insert(out.end(), t.formula);
  return out;
}

ClosureResult closure(const Calculus& calculus, const ClosureOptions& options) {
  Engine engine(calculus, options);
  unsigned reached = 0;
  ClosureResult result;
  result.fixpoint = engine.run(options.depth, reached);
  result.depth = options.depth;
  result.domain = engine.domain();
  result.theorems.reserve(engine.size());
  for (std::size_t i = 0; i < engine.size(); ++i) {
    result.theorems.push_back(Theorem{engine.formula(i), engine.level(i), engine.proof_of(i)});
  }
  std::sort(result.theorems.begin(), result.theorems.end(),
            [](const Theorem& a, const Theorem& b) { return a.formula < b.formula; });
  return result;
}

ClosureResult closure(const Calculus& calculus, unsigned depth) {
  ClosureOptions options;
  options.depth = depth;
  return closure(calculus, options);
}

ProofSearch proves(const Calculus& calculus, const Formula& goal, unsigned depth, std::size_t theorem_cap) {
  ClosureOptions options;
  options.depth = depth;
  options.goals = {goal};
  options.theorem_cap = theorem_cap;
  Engine engine(calculus, options);
  engine.stop_on(goal);
  unsigned reached = 0;
  engine.run(depth, reached);
  ProofSearch result;
  result.depth = depth;
  if (engine.goal_found()) result.proof = engine.proof_of(engine.goal_index());
  return result;
}

}  // namespace vty::logic
