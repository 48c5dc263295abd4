#include "vty/variety/formula_map.hpp"

#include "vty/error.hpp"

namespace vty::variety {

FormulaMap FormulaMap::identity() { return FormulaMap{}; }

FormulaMap FormulaMap::renaming(std::map<std::string, std::string> atoms, std::optional<FormulaSet> domain) {
  FormulaMap m;
  m.kind_ = Kind::Renaming;
  m.renaming_ = std::move(atoms);
  m.domain_ = std::move(domain);
  return m;
}

FormulaMap FormulaMap::table(const std::vector<std::pair<Formula, Formula>>& pairs, std::optional<FormulaSet> domain) {
  FormulaMap m;
  m.kind_ = Kind::Table;
  for (const auto& [from, to] : pairs) {
    if (!m.table_.emplace(from, to).second) {
      throw Error(ErrorCode::InvalidArgument, "table map lists " + from.text() + " twice");
    }
  }
  m.domain_ = std::move(domain);
  return m;
}

bool FormulaMap::defined_on(const Formula& f) const {
  if (domain_ && !domain_->contains(f)) return false;
  return kind_ == Kind::Renaming || table_.contains(f);
}

std::optional<Formula> FormulaMap::try_apply(const Formula& f) const {
  if (!defined_on(f)) return std::nullopt;
  if (kind_ == Kind::Table) return table_.at(f);
  return logic::rename_atoms(f, renaming_);
}

Formula FormulaMap::apply(const Formula& f) const {
  if (auto image = try_apply(f)) return *image;
  throw Error(ErrorCode::MapUndefined, "map undefined on " + f.text());
}

FormulaSet FormulaMap::image_of_defined(const FormulaSet& inputs) const {
  FormulaSet out;
  for (const Formula& f : inputs) {
    if (auto image = try_apply(f)) out.insert(*image);
  }
  return out;
}

std::optional<std::pair<Formula, Formula>> FormulaMap::collision(const FormulaSet& inputs) const {
  std::map<Formula, Formula> seen;
  for (const Formula& f : inputs) {
    auto image = try_apply(f);
    if (!image) continue;
    auto [it, inserted] = seen.emplace(*image, f);
    if (!inserted) return std::make_pair(it->second, f);
  }
  return std::nullopt;
}

}  // namespace vty::variety
