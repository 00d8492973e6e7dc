#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ivq/gdm.hpp"

namespace ivq {

enum class GoldenStatus { Pass, Fail, Info };

std::string_view to_string(GoldenStatus status);

/// One comparison against a published reference value. Info entries are
/// reported for context and never affect the outcome.
struct GoldenCheck {
    std::string name;
    GoldenStatus status;
    std::string detail;
};

struct ReproReport {
    std::string fixture;
    DecisionProblem problem;
    /// The runs behind the report (one per q for sweep fixtures).
    std::vector<SweepEntry> runs;
    std::vector<GoldenCheck> checks;

    bool passed() const;
    std::size_t count(GoldenStatus status) const;
};

/// Fixture names accepted by run_repro.
const std::vector<std::string>& repro_names();

/// Solves a built-in fixture and compares against its reference values.
/// Throws Parse for an unknown name.
ReproReport run_repro(std::string_view name);

}  // namespace ivq
