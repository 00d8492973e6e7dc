#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ivq/gdm.hpp"

namespace ivq {

/// Parses a JSON problem document:
///
///   {
///     "description": "optional free text",
///     "alternatives": ["x1", "x2"],
///     "attributes": [{"name": "C1", "kind": "benefit"}, {"name": "C2", "kind": "cost"}],
///     "experts": ["e1", "e2"],
///     "q": "auto" | 3,
///     "matrices": {"e1": [[[t_lo, t_hi, f_lo, f_hi], ...], ...], "e2": ...},
///     "attribute_measure": [{"subset": ["C1"], "value": 0.4}, ...],
///     "expert_measure": [{"subset": ["e1"], "value": 0.6}, ...]
///   }
///
/// Subsets are name lists resolved against declaration order; the empty and
/// full sets default to 0 and 1. `expert_measure` may be omitted when there
/// is a single expert. Unknown keys are rejected. Structural problems throw
/// Parse; bad measures throw the measure error kinds.
DecisionProblem parse_problem(std::string_view text);

DecisionProblem load_problem(const std::filesystem::path& path);

/// Canonical JSON document; parse_problem(emit_problem(p)) == p.
std::string emit_problem(const DecisionProblem& p, std::string_view description = {});

}  // namespace ivq
