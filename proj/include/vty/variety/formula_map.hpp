#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vty/logic/formula.hpp"

namespace vty::variety {

using logic::Formula;
using logic::FormulaSet;

// A partial map L -> L: either an atom renaming extended homomorphically, or
// a finite table. An optional domain restriction further limits where the map
// is defined. Applying a map outside its domain is MAP_UNDEFINED, never a
// silent identity.
class FormulaMap {
 public:
  enum class Kind { Renaming, Table };

  // Renaming with no entries and no restriction: the identity on L.
  static FormulaMap identity();
  static FormulaMap renaming(std::map<std::string, std::string> atoms,
                             std::optional<FormulaSet> domain = std::nullopt);
  // Throws INVALID_ARGUMENT when two pairs share a first element.
  static FormulaMap table(const std::vector<std::pair<Formula, Formula>>& pairs,
                          std::optional<FormulaSet> domain = std::nullopt);

  Kind kind() const noexcept { return kind_; }
  const std::map<std::string, std::string>& atom_renaming() const noexcept { return renaming_; }
  const std::map<Formula, Formula>& pairs() const noexcept { return table_; }
  const std::optional<FormulaSet>& domain() const noexcept { return domain_; }

  bool defined_on(const Formula& f) const;
  std::optional<Formula> try_apply(const Formula& f) const;
  // Throws MAP_UNDEFINED.
  Formula apply(const Formula& f) const;

  // Image of the part of `inputs` inside the domain.
  FormulaSet image_of_defined(const FormulaSet& inputs) const;

  // Two distinct inputs sharing an image, if any (first in input order).
  std::optional<std::pair<Formula, Formula>> collision(const FormulaSet& inputs) const;

  friend bool operator==(const FormulaMap&, const FormulaMap&) = default;

 private:
  Kind kind_ = Kind::Renaming;
  std::map<std::string, std::string> renaming_;
  std::map<Formula, Formula> table_;
  std::optional<FormulaSet> domain_;
};

}  // namespace vty::variety
