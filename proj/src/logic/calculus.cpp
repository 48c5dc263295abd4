#include "vty/logic/calculus.hpp"

#include <set>

#include "vty/error.hpp"
#include "vty/logic/parse.hpp"

namespace vty::logic {

InferenceRule InferenceRule::schema(std::string name, std::vector<Formula> premises, Formula conclusion) {
  if (premises.empty()) {
    throw Error(ErrorCode::InvalidArgument, "rule '" + name + "' has no premises");
  }
  std::set<std::string> bound;
  for (const Formula& p : premises) {
    for (auto& m : metas_of(p)) bound.insert(m);
  }
  for (const auto& m : metas_of(conclusion)) {
    if (!bound.contains(m)) {
      throw Error(ErrorCode::InvalidArgument,
                  "rule '" + name + "': metavariable " + m + " in the conclusion occurs in no premise");
    }
  }
  InferenceRule rule(std::move(name), Kind::Schema);
  rule.premises_ = std::move(premises);
  rule.conclusion_ = std::move(conclusion);
  return rule;
}

InferenceRule InferenceRule::substitution(std::string name) {
  return InferenceRule(std::move(name), Kind::Substitution);
}

std::string InferenceRule::describe() const {
  std::string out = name_;
  if (kind_ == Kind::Substitution) return out + " substitution";
  for (const Formula& p : premises_) out += " " + p.text();
  out += " => " + conclusion_->text();
  return out;
}

const InferenceRule* Calculus::find_rule(const std::string& name) const {
  for (const auto& r : rules) {
    if (r.name() == name) return &r;
  }
  return nullptr;
}

const AxiomSchema* Calculus::find_schema(const std::string& schema_id) const {
  for (const auto& s : schemas) {
    if (s.id == schema_id) return &s;
  }
  return nullptr;
}

void validate_calculus(const Calculus& calculus) {
  std::set<std::string> names;
  for (const auto& r : calculus.rules) {
    if (!names.insert(r.name()).second) {
      throw Error(ErrorCode::InvalidArgument,
                  "calculus '" + calculus.id + "': duplicate rule name '" + r.name() + "'");
    }
  }
  std::set<std::string> ids;
  for (const auto& s : calculus.schemas) {
    if (!ids.insert(s.id).second) {
      throw Error(ErrorCode::InvalidArgument,
                  "calculus '" + calculus.id + "': duplicate schema id '" + s.id + "'");
    }
  }
  for (const auto& a : calculus.axioms) {
    if (!a.is_ground()) {
      throw Error(ErrorCode::InvalidArgument,
                  "calculus '" + calculus.id + "': axiom " + a.text() + " contains metavariables");
    }
  }
}

namespace presets {

namespace {

InferenceRule rule(std::string name, std::vector<std::string_view> premises, std::string_view conclusion) {
  std::vector<Formula> ps;
  for (auto p : premises) ps.push_back(parse_schema(p));
  return InferenceRule::schema(std::move(name), std::move(ps), parse_schema(conclusion));
}

}  // namespace

InferenceRule modus_ponens() { return rule("mp", {"A", "(-> A B)"}, "B"); }

Calculus hilbert() {
  Calculus c;
  c.id = "hilbert";
  c.schemas = {
      {"P1", parse_schema("(-> A (-> B A))")},
      {"P2", parse_schema("(-> (-> A (-> B C)) (-> (-> A B) (-> A C)))")},
      {"P3", parse_schema("(-> (-> (not A) (not B)) (-> B A))")},
  };
  c.rules = {modus_ponens()};
  return c;
}

Calculus modus_ponens_only() {
  Calculus c;
  c.id = "mp";
  c.rules = {modus_ponens()};
  return c;
}

Calculus refutation() {
  Calculus c;
  c.id = "refutation";
  c.rules = {
      modus_ponens(),
      rule("and_elim_l", {"(and A B)"}, "A"),
      rule("and_elim_r", {"(and A B)"}, "B"),
      rule("disj_syll_l", {"(or A B)", "(not A)"}, "B"),
      rule("disj_syll_r", {"(or A B)", "(not B)"}, "A"),
      rule("modus_tollens", {"(-> A B)", "(not B)"}, "(not A)"),
      rule("contradiction", {"A", "(not A)"}, "bot"),
  };
  return c;
}

std::optional<Calculus> by_name(const std::string& name) {
  if (name == "hilbert") return hilbert();
  if (name == "mp") return modus_ponens_only();
  if (name == "refutation") return refutation();
  return std::nullopt;
}

std::vector<std::string> names() { return {"hilbert", "mp", "refutation"}; }

}  // namespace presets

}  // namespace vty::logic
