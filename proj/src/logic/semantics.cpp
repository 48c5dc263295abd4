#include "vty/logic/semantics.hpp"

#include <cstdint>
#include <set>

#include "vty/error.hpp"
#include "vty/logic/calculus.hpp"
#include "vty/logic/closure.hpp"

namespace vty::logic {

namespace {

// Postfix program over atom indices; evaluated once per truth-table row.
class Compiled {
 public:
  Compiled(const Formula& f, const std::map<std::string, std::size_t>& slots) { emit(f, slots); }

  bool eval(std::uint64_t row) const {
    stack_.clear();
    for (const Op& op : ops_) {
      switch (op.kind) {
        case Kind::Atom: stack_.push_back((row >> op.slot) & 1u); break;
        case Kind::Bottom: stack_.push_back(false); break;
        case Kind::Not: stack_.back() = !stack_.back(); break;
        default: {
          bool b = stack_.back();
          stack_.pop_back();
          bool a = stack_.back();
          stack_.back() = op.kind == Kind::And ? (a && b) : op.kind == Kind::Or ? (a || b) : (!a || b);
        }
      }
    }
    return stack_.back();
  }

 private:
  struct Op {
    Kind kind;
    std::size_t slot;
  };

  void emit(const Formula& f, const std::map<std::string, std::size_t>& slots) {
    switch (f.kind()) {
      case Kind::Atom: ops_.push_back({Kind::Atom, slots.at(f.name())}); return;
      case Kind::Meta: throw Error(ErrorCode::InvalidArgument, "cannot evaluate schema " + f.text());
      case Kind::Bottom: ops_.push_back({Kind::Bottom, 0}); return;
      case Kind::Not:
        emit(f.lhs(), slots);
        ops_.push_back({Kind::Not, 0});
        return;
      default:
        emit(f.lhs(), slots);
        emit(f.rhs(), slots);
        ops_.push_back({f.kind(), 0});
    }
  }

  std::vector<Op> ops_;
  mutable std::vector<bool> stack_;
};

std::vector<std::string> collect_atoms(const std::vector<Formula>& formulas, std::size_t atom_cap) {
  std::set<std::string> atoms;
  for (const Formula& f : formulas) {
    for (auto& a : atoms_of(f)) atoms.insert(a);
  }
  if (atoms.size() > atom_cap) {
    throw Error(ErrorCode::AtomCapExceeded, "formula set mentions " + std::to_string(atoms.size()) +
                                                " atoms, cap is " + std::to_string(atom_cap) +
                                                "; partition the set");
  }
  return {atoms.begin(), atoms.end()};
}

// First row (in increasing bit order) satisfying every formula.
std::optional<std::uint64_t> first_model(const std::vector<Formula>& formulas, const std::vector<std::string>& atoms) {
  std::map<std::string, std::size_t> slots;
  for (std::size_t i = 0; i < atoms.size(); ++i) slots[atoms[i]] = i;
  std::vector<Compiled> programs;
  programs.reserve(formulas.size());
  for (const Formula& f : formulas) programs.emplace_back(f, slots);
  const std::uint64_t rows = std::uint64_t{1} << atoms.size();
  for (std::uint64_t row = 0; row < rows; ++row) {
    bool all = true;
    for (const auto& p : programs) {
      if (!p.eval(row)) {
        all = false;
        break;
      }
    }
    if (all) return row;
  }
  return std::nullopt;
}

Assignment row_to_assignment(std::uint64_t row, const std::vector<std::string>& atoms) {
  Assignment a;
  for (std::size_t i = 0; i < atoms.size(); ++i) a[atoms[i]] = (row >> i) & 1u;
  return a;
}

}  // namespace

bool evaluate(const Formula& f, const Assignment& assignment) {
  switch (f.kind()) {
    case Kind::Atom: return assignment.at(f.name());
    case Kind::Meta: throw Error(ErrorCode::InvalidArgument, "cannot evaluate schema " + f.text());
    case Kind::Bottom: return false;
    case Kind::Not: return !evaluate(f.lhs(), assignment);
    case Kind::And: return evaluate(f.lhs(), assignment) && evaluate(f.rhs(), assignment);
    case Kind::Or: return evaluate(f.lhs(), assignment) || evaluate(f.rhs(), assignment);
    case Kind::Implies: return !evaluate(f.lhs(), assignment) || evaluate(f.rhs(), assignment);
  }
  return false;
}

std::optional<Assignment> satisfying_assignment(const std::vector<Formula>& formulas, std::size_t atom_cap) {
  auto atoms = collect_atoms(formulas, atom_cap);
  auto row = first_model(formulas, atoms);
  if (!row) return std::nullopt;
  return row_to_assignment(*row, atoms);
}

bool entails(const std::vector<Formula>& premises, const Formula& conclusion, std::size_t atom_cap) {
  std::vector<Formula> set = premises;
  set.push_back(Formula::negation(conclusion));
  return !satisfying_assignment(set, atom_cap).has_value();
}

Consistency consistent(const std::vector<Formula>& formulas, const ConsistencyOptions& options) {
  Consistency result;
  result.atoms = collect_atoms(formulas, options.atom_cap);
  if (auto row = first_model(formulas, result.atoms)) {
    result.model = row_to_assignment(*row, result.atoms);
    return result;
  }
  result.consistent = false;
  Calculus refuter = presets::refutation();
  refuter.id = "refutation";
  refuter.axioms.insert(formulas.begin(), formulas.end());
  try {
    auto search = proves(refuter, Formula::bottom(), options.refutation_depth);
    result.refutation = std::move(search.proof);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DepthExplosion) throw;
  }
  return result;
}

Consistency consistent(const FormulaSet& formulas, const ConsistencyOptions& options) {
  return consistent(std::vector<Formula>(formulas.begin(), formulas.end()), options);
}

}  // namespace vty::logic
