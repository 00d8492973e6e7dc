#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ivq/choquet.hpp"
#include "ivq/ivqrofn.hpp"
#include "ivq/measure.hpp"

namespace ivq {

enum class AttributeKind { Benefit, Cost };

struct AttributeSpec {
    std::string name;
    AttributeKind kind = AttributeKind::Benefit;

    friend bool operator==(const AttributeSpec&, const AttributeSpec&) = default;
};

/// rows = alternatives, columns = attributes.
using Matrix = std::vector<std::vector<IvqRofn>>;

/// A multi-attribute group decision problem: one matrix per expert.
struct DecisionProblem {
    std::vector<std::string> alternatives;
    std::vector<AttributeSpec> attributes;
    std::vector<std::string> experts;
    std::vector<Matrix> matrices;  // one per expert, in expert order
    FuzzyMeasure attribute_measure;
    FuzzyMeasure expert_measure;
    std::optional<int> q;  // nullopt: choose the smallest valid rung

    /// Names unique and non-empty, dimensions consistent, measure sizes match.
    /// Throws Parse (structural problems) or SizeMismatch.
    void validate_shape() const;

    friend bool operator==(const DecisionProblem&, const DecisionProblem&) = default;
};

/// Operator used by one aggregation stage of the pipeline.
enum class StageKind { CA, CG, WCA, OCA, OWCA, WCG, OCG, OWCG, GIIFGA, IVIFEGC };

std::string_view to_string(StageKind kind);
/// Accepts the names produced by to_string (case-insensitive). Throws Parse.
StageKind parse_stage_kind(std::string_view name);
bool is_baseline(StageKind kind);

/// How a stage turns its measure into operator parameters:
/// CA/CG use the measure directly; WCA/WCG require it to be additive;
/// OCA/OCG use order weights Q(k/n) - Q((k-1)/n); OWCA/OWCG use the BUM with
/// the measure's normalized singleton values; GIIFGA/IVIFEGC need q = 1.
struct StageOperator {
    StageKind kind = StageKind::CA;
    SortOrder order = SortOrder::Descending;  // CA/CG only
    BumFunction bum = BumFunction::identity();
};

struct SolveOptions {
    StageOperator expert_stage;
    StageOperator attribute_stage;
    /// Overrides the problem's own q when set; 0 means auto.
    std::optional<int> q_override;
    int q_max = 20;
};

struct RankingResult {
    int resolved_q = 1;
    Matrix collective;  // expert-aggregated matrix
    std::vector<IvqRofn> aggregates;
    std::vector<double> scores;
    std::vector<double> accuracies;
    /// Alternative indices, best first.
    std::vector<std::size_t> ranking;
};

/// Cost columns replaced by their complements; all flags become Benefit.
DecisionProblem standardize(const DecisionProblem& p);

/// Explicit q checked against every entry (ExplicitQInvalid names the first
/// failing entry); otherwise the smallest valid q up to q_max (NoValidQ).
int resolve_q(const DecisionProblem& p, std::optional<int> q, int q_max);
int resolve_q(const DecisionProblem& p, int q_max);

Matrix aggregate_experts(const DecisionProblem& p, int q, const StageOperator& op = {});
std::vector<IvqRofn> aggregate_attributes(const Matrix& collective,
                                          const FuzzyMeasure& attribute_measure, int q,
                                          const StageOperator& op = {});

/// Applies one stage operator to a list of values over `m`.
IvqRofn aggregate_stage(std::span<const IvqRofn> items, const FuzzyMeasure& m, int q,
                        const StageOperator& op);

RankingResult rank(std::vector<IvqRofn> aggregates, int q);

RankingResult solve(const DecisionProblem& p, const SolveOptions& options = {});

struct SweepEntry {
    int q;
    RankingResult result;
};

/// One solve per q; every q must be valid for all entries.
std::vector<SweepEntry> sweep_q(const DecisionProblem& p, std::span<const int> qs,
                                const SolveOptions& options = {});

}  // namespace ivq
