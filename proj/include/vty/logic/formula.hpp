#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace vty::logic {

enum class Kind : std::uint8_t { Atom, Meta, Bottom, Not, And, Or, Implies };

// Immutable propositional formula with shared structure.
//
// Each node caches its canonical prefix text, `(-> p q)`, `(not p)`, `bot`.
// The text is unambiguous, so structural equality, ordering and hashing all
// reduce to comparisons of that string. There is no normalization:
// `(and p q)` and `(and q p)` are different formulas.
//
// `Meta` nodes are metavariables (rendered with a leading uppercase letter);
// they only occur in axiom schemas and rule patterns. A formula without
// metavariables is *ground*.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula meta(std::string name);
  static Formula bottom();
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula binary(Kind kind, Formula lhs, Formula rhs);

  Kind kind() const noexcept;
  bool is_atom() const noexcept { return kind() == Kind::Atom; }
  bool is_meta() const noexcept { return kind() == Kind::Meta; }
  bool is_binary() const noexcept {
    return kind() == Kind::And || kind() == Kind::Or || kind() == Kind::Implies;
  }
  bool is_ground() const noexcept;

  // Atom or metavariable name; empty for connectives.
  const std::string& name() const noexcept;
  // Operand of Not, left operand of a binary connective.
  const Formula& lhs() const;
  const Formula& rhs() const;

  const std::string& text() const noexcept;
  std::size_t size() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend bool operator<(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  bool ground;
  std::string name;
  std::vector<Formula> children;
  std::string text;
  std::size_t size;
  std::size_t hash;
};

inline Kind Formula::kind() const noexcept { return node_->kind; }
inline bool Formula::is_ground() const noexcept { return node_->ground; }
inline const std::string& Formula::name() const noexcept { return node_->name; }
inline const Formula& Formula::lhs() const { return node_->children.at(0); }
inline const Formula& Formula::rhs() const { return node_->children.at(1); }
inline const std::string& Formula::text() const noexcept { return node_->text; }
inline std::size_t Formula::size() const noexcept { return node_->size; }
inline std::size_t Formula::hash() const noexcept { return node_->hash; }

inline bool operator==(const Formula& a, const Formula& b) noexcept {
  return a.node_ == b.node_ || (a.node_->hash == b.node_->hash && a.node_->text == b.node_->text);
}
inline bool operator<(const Formula& a, const Formula& b) noexcept {
  return a.node_ != b.node_ && a.node_->text < b.node_->text;
}

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

using FormulaSet = std::set<Formula>;

// Maps metavariable names (schemas) or atom names (substitution rule) to formulas.
using Substitution = std::map<std::string, Formula>;

std::string_view connective_keyword(Kind kind);

// Replace metavariables bound in `subst`; unbound metavariables are kept.
Formula instantiate(const Formula& schema, const Substitution& subst);

// Replace atoms bound in `subst`; unbound atoms are kept.
Formula substitute_atoms(const Formula& f, const Substitution& subst);

// One-sided matching of `pattern` (may contain metavariables) against a
// ground formula, extending `subst`. On failure `subst` may be partially
// extended; callers copy before matching when they need to backtrack.
bool match(const Formula& pattern, const Formula& ground, Substitution& subst);

void collect_subformulas(const Formula& f, FormulaSet& out);
// Ground subformulas only; metavariable-containing nodes are skipped.
void collect_ground_subformulas(const Formula& f, FormulaSet& out);
std::set<std::string> atoms_of(const Formula& f);
std::set<std::string> metas_of(const Formula& f);

// Atom-to-atom renaming extended homomorphically over every connective.
Formula rename_atoms(const Formula& f, const std::map<std::string, std::string>& renaming);

}  // namespace vty::logic

template <>
struct std::hash<vty::logic::Formula> {
  std::size_t operator()(const vty::logic::Formula& f) const noexcept { return f.hash(); }
};
