#pragma once

#include <span>
#include <string>
#include <string_view>

#include "ivq/gdm.hpp"
#include "ivq/repro.hpp"

namespace ivq {

enum class OutputFormat { Table, Json, Csv };

/// "table", "json" or "csv". Throws Parse.
OutputFormat parse_output_format(std::string_view name);

/// Per-alternative aggregate, score (with its paper-scale double), accuracy
/// and rank, followed by the ranking. Numbers use `precision` decimals.
std::string render_result(const DecisionProblem& p, const RankingResult& r, OutputFormat format,
                          int precision = 4);

/// One block (table), object (json) or set of rows (csv) per q.
std::string render_sweep(const DecisionProblem& p, std::span<const SweepEntry> runs,
                         OutputFormat format, int precision = 4);

/// PASS/FAIL/INFO table followed by a summary line.
std::string render_checks(const ReproReport& report);

}  // namespace ivq
