#include "vty/logic/formula.hpp"

#include <stdexcept>

#include "vty/error.hpp"

namespace vty::logic {

namespace {

std::size_t text_hash(const std::string& text) { return std::hash<std::string>{}(text); }

}  // namespace

std::string_view connective_keyword(Kind kind) {
  switch (kind) {
    case Kind::Not: return "not";
    case Kind::And: return "and";
    case Kind::Or: return "or";
    case Kind::Implies: return "->";
    case Kind::Bottom: return "bot";
    case Kind::Atom:
    case Kind::Meta: break;
  }
  return "";
}

Formula Formula::atom(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->ground = true;
  node->text = name;
  node->name = std::move(name);
  node->size = 1;
  node->hash = text_hash(node->text);
  return Formula(std::move(node));
}

Formula Formula::meta(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Meta;
  node->ground = false;
  node->text = name;
  node->name = std::move(name);
  node->size = 1;
  node->hash = text_hash(node->text);
  return Formula(std::move(node));
}

Formula Formula::bottom() {
  static const Formula bot = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Bottom;
    node->ground = true;
    node->text = "bot";
    node->size = 1;
    node->hash = text_hash(node->text);
    return Formula(std::move(node));
  }();
  return bot;
}

Formula Formula::negation(Formula operand) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->ground = operand.is_ground();
  node->size = operand.size() + 1;
  node->text = "(not " + operand.text() + ")";
  node->hash = text_hash(node->text);
  node->children.push_back(std::move(operand));
  return Formula(std::move(node));
}

Formula Formula::binary(Kind kind, Formula lhs, Formula rhs) {
  if (kind != Kind::And && kind != Kind::Or && kind != Kind::Implies) {
    throw Error(ErrorCode::InvalidArgument, "not a binary connective");
  }
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->ground = lhs.is_ground() && rhs.is_ground();
  node->size = lhs.size() + rhs.size() + 1;
  node->text.reserve(lhs.text().size() + rhs.text().size() + 8);
  node->text += '(';
  node->text += connective_keyword(kind);
  node->text += ' ';
  node->text += lhs.text();
  node->text += ' ';
  node->text += rhs.text();
  node->text += ')';
  node->hash = text_hash(node->text);
  node->children.push_back(std::move(lhs));
  node->children.push_back(std::move(rhs));
  return Formula(std::move(node));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return binary(Kind::And, std::move(lhs), std::move(rhs));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return binary(Kind::Or, std::move(lhs), std::move(rhs));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return binary(Kind::Implies, std::move(lhs), std::move(rhs));
}

namespace {

template <typename Leaf>
Formula rebuild(const Formula& f, Leaf&& leaf) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Meta:
    case Kind::Bottom:
      return leaf(f);
    case Kind::Not: {
      Formula operand = rebuild(f.lhs(), leaf);
      if (operand == f.lhs()) return f;
      return Formula::negation(std::move(operand));
    }
    default: {
      Formula lhs = rebuild(f.lhs(), leaf);
      Formula rhs = rebuild(f.rhs(), leaf);
      if (lhs == f.lhs() && rhs == f.rhs()) return f;
      return Formula::binary(f.kind(), std::move(lhs), std::move(rhs));
    }
  }
}

}  // namespace

Formula instantiate(const Formula& schema, const Substitution& subst) {
  if (schema.is_ground()) return schema;
  return rebuild(schema, [&](const Formula& leaf) {
    if (leaf.is_meta()) {
      if (auto it = subst.find(leaf.name()); it != subst.end()) return it->second;
    }
    return leaf;
  });
}

Formula substitute_atoms(const Formula& f, const Substitution& subst) {
  return rebuild(f, [&](const Formula& leaf) {
    if (leaf.is_atom()) {
      if (auto it = subst.find(leaf.name()); it != subst.end()) return it->second;
    }
    return leaf;
  });
}

Formula rename_atoms(const Formula& f, const std::map<std::string, std::string>& renaming) {
  return rebuild(f, [&](const Formula& leaf) {
    if (leaf.is_atom()) {
      if (auto it = renaming.find(leaf.name()); it != renaming.end()) return Formula::atom(it->second);
    }
    return leaf;
  });
}

bool match(const Formula& pattern, const Formula& ground, Substitution& subst) {
  if (pattern.is_meta()) {
    auto [it, inserted] = subst.try_emplace(pattern.name(), ground);
    return inserted || it->second == ground;
  }
  if (pattern.is_ground()) return pattern == ground;
  if (pattern.kind() != ground.kind()) return false;
  if (pattern.kind() == Kind::Not) return match(pattern.lhs(), ground.lhs(), subst);
  return match(pattern.lhs(), ground.lhs(), subst) && match(pattern.rhs(), ground.rhs(), subst);
}

void collect_subformulas(const Formula& f, FormulaSet& out) {
  if (!out.insert(f).second) return;
  if (f.kind() == Kind::Not) {
    collect_subformulas(f.lhs(), out);
  } else if (f.is_binary()) {
    collect_subformulas(f.lhs(), out);
    collect_subformulas(f.rhs(), out);
  }
}

void collect_ground_subformulas(const Formula& f, FormulaSet& out) {
  if (f.is_ground()) {
    collect_subformulas(f, out);
    return;
  }
  if (f.kind() == Kind::Not) {
    collect_ground_subformulas(f.lhs(), out);
  } else if (f.is_binary()) {
    collect_ground_subformulas(f.lhs(), out);
    collect_ground_subformulas(f.rhs(), out);
  }
}

namespace {

void collect_leaves(const Formula& f, Kind kind, std::set<std::string>& out) {
  if (f.kind() == kind) {
    out.insert(f.name());
  } else if (f.kind() == Kind::Not) {
    collect_leaves(f.lhs(), kind, out);
  } else if (f.is_binary()) {
    collect_leaves(f.lhs(), kind, out);
    collect_leaves(f.rhs(), kind, out);
  }
}

}  // namespace

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect_leaves(f, Kind::Atom, out);
  return out;
}

std::set<std::string> metas_of(const Formula& f) {
  std::set<std::string> out;
  collect_leaves(f, Kind::Meta, out);
  return out;
}

}  // namespace vty::logic
