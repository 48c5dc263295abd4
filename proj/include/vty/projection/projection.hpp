#pragma once

#include <string>
#include <vector>

#include "vty/projection/registry.hpp"

namespace vty::projection {

struct Placement {
  std::string class_id;
  // Corollary statement for corollaries; empty otherwise.
  std::string text;
  // Violated dependencies for not_applicable, unresolved ones for unknown.
  std::vector<std::string> blocking;
};

struct Projection {
  std::string theorem;
  // Each list follows registry order.
  std::vector<Placement> corollaries;
  std::vector<Placement> not_applicable;
  std::vector<Placement> unknown;
};

// Throws UNDECLARED_AXIOM when a dependency is not declared in `axioms`.
Projection project(const TheoremRecord& theorem, const std::vector<ClassProfile>& classes,
                   const std::map<std::string, std::string>& axioms);
Projection project(const Registry& registry, const TheoremRecord& theorem);

std::string instantiate_statement(const std::string& statement, const std::string& class_name);

enum class Cell { Corollary, NotApplicable, Unknown };
std::string_view cell_name(Cell cell);

struct Matrix {
  std::vector<std::string> theorems;
  std::vector<std::string> classes;
  // cells[row][column], rows follow `classes`.
  std::vector<std::vector<Cell>> cells;
};

Matrix registry_report(const Registry& registry, const std::vector<TheoremRecord>& theorems);

// Aligned plain-text rendering, one row per class.
std::string render_matrix(const Matrix& matrix);

}  // namespace vty::projection
