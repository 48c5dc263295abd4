#include "vty/projection/projection.hpp"

#include <algorithm>

#include "vty/error.hpp"

namespace vty::projection {

std::string instantiate_statement(const std::string& statement, const std::string& class_name) {
  static const std::string token = "{class}";
  std::string out;
  std::size_t pos = 0;
  while (true) {
    std::size_t hit = statement.find(token, pos);
    if (hit == std::string::npos) break;
    out.append(statement, pos, hit - pos);
    out += class_name;
    pos = hit + token.size();
  }
  out.append(statement, pos);
  return out;
}

Projection project(const TheoremRecord& theorem, const std::vector<ClassProfile>& classes,
                   const std::map<std::string, std::string>& axioms) {
  for (const auto& d : theorem.dependencies) {
    if (!axioms.contains(d)) {
      throw Error(ErrorCode::UndeclaredAxiom, "theorem " + theorem.id + " depends on undeclared axiom " + d);
    }
  }
  Projection out;
  out.theorem = theorem.id;
  for (const ClassProfile& c : classes) {
    std::vector<std::string> violated, unresolved;
    for (const auto& d : theorem.dependencies) {
      switch (c.status_of(d)) {
        case Status::Satisfied: break;
        case Status::Violated: violated.push_back(d); break;
        case Status::Unknown: unresolved.push_back(d); break;
      }
    }
    if (!violated.empty()) {
      out.not_applicable.push_back({c.id, "", std::move(violated)});
    } else if (!unresolved.empty()) {
      out.unknown.push_back({c.id, "", std::move(unresolved)});
    } else {
      out.corollaries.push_back({c.id, instantiate_statement(theorem.statement, c.name.empty() ? c.id : c.name), {}});
    }
  }
  return out;
}

Projection project(const Registry& registry, const TheoremRecord& theorem) {
  return project(theorem, registry.classes, registry.axioms);
}

std::string_view cell_name(Cell cell) {
  switch (cell) {
    case Cell::Corollary: return "corollary";
    case Cell::NotApplicable: return "na";
    case Cell::Unknown: return "unknown";
  }
  return "unknown";
}

Matrix registry_report(const Registry& registry, const std::vector<TheoremRecord>& theorems) {
  Matrix m;
  for (const auto& c : registry.classes) m.classes.push_back(c.id);
  m.cells.assign(m.classes.size(), {});
  for (const auto& t : theorems) {
    m.theorems.push_back(t.id);
    Projection p = project(registry, t);
    std::map<std::string, Cell> cell;
    for (const auto& e : p.corollaries) cell[e.class_id] = Cell::Corollary;
    for (const auto& e : p.not_applicable) cell[e.class_id] = Cell::NotApplicable;
    for (const auto& e : p.unknown) cell[e.class_id] = Cell::Unknown;
    for (std::size_t row = 0; row < m.classes.size(); ++row) m.cells[row].push_back(cell.at(m.classes[row]));
  }
  return m;
}

std::string render_matrix(const Matrix& m) {
  std::size_t first = std::string_view("class").size();
  for (const auto& c : m.classes) first = std::max(first, c.size());
  std::vector<std::size_t> widths;
  for (const auto& t : m.theorems) widths.push_back(std::max(t.size(), std::string_view("corollary").size()));

  auto pad = [](std::string_view s, std::size_t w) {
    std::string out(s);
    out.resize(std::max(w, s.size()), ' ');
    return out;
  };
  auto line = [&](std::string_view head, const std::vector<std::string>& cells) {
    std::string out = pad(head, first);
    for (std::size_t i = 0; i < cells.size(); ++i) out += "  " + pad(cells[i], widths[i]);
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  std::string out = line("class", m.theorems);
  for (std::size_t row = 0; row < m.classes.size(); ++row) {
    std::vector<std::string> cells;
    for (Cell c : m.cells[row]) cells.emplace_back(cell_name(c));
    out += line(m.classes[row], cells);
  }
  return out;
}

}  // namespace vty::projection
