#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vty/projection/registry.hpp"

namespace vty::models {

// rm_universal_differential, fa_totality_exhaustive, rm_self_loop_diverges.
std::vector<std::string> witness_ids();

// nullopt for an unknown id.
std::optional<projection::WitnessOutcome> run_witness(const std::string& id);

inline constexpr std::size_t kDifferentialSuiteSize = 200;

}  // namespace vty::models
