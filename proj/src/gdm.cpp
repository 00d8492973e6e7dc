#include "ivq/gdm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <string>

#include "ivq/baselines.hpp"

namespace ivq {

namespace {

void check_names(const std::vector<std::string>& names, std::string_view what) {
    if (names.empty()) throw Error(ErrorKind::Parse, "no " + std::string(what) + " declared");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw Error(ErrorKind::Parse, std::string(what) + " name is empty");
        if (!seen.insert(n).second)
            throw Error(ErrorKind::Parse, "duplicate " + std::string(what) + " name '" + n + "'");
    }
}

std::string entry_label(const DecisionProblem& p, std::size_t k, std::size_t i, std::size_t j) {
    return "entry " + p.experts[k] + "/" + p.alternatives[i] + "/" + p.attributes[j].name;
}

}  // namespace

void DecisionProblem::validate_shape() const {
    check_names(alternatives, "alternative");
    std::vector<std::string> attr_names;
    for (const auto& a : attributes) attr_names.push_back(a.name);
    check_names(attr_names, "attribute");
    check_names(experts, "expert");
    if (matrices.size() != experts.size())
        throw Error(ErrorKind::Parse, "expected " + std::to_string(experts.size()) +
                                          " matrices, got " + std::to_string(matrices.size()));
    for (std::size_t k = 0; k < matrices.size(); ++k) {
        if (matrices[k].size() != alternatives.size())
            throw Error(ErrorKind::Parse, "matrix of expert " + experts[k] + " has " +
                                              std::to_string(matrices[k].size()) + " rows, expected " +
                                              std::to_string(alternatives.size()));
        for (std::size_t i = 0; i < alternatives.size(); ++i) {
            if (matrices[k][i].size() != attributes.size())
                throw Error(ErrorKind::Parse, "matrix of expert " + experts[k] + ", row " +
                                                  alternatives[i] + " has " +
                                                  std::to_string(matrices[k][i].size()) +
                                                  " cells, expected " +
                                                  std::to_string(attributes.size()));
        }
    }
    if (static_cast<std::size_t>(attribute_measure.size()) != attributes.size())
        throw Error(ErrorKind::SizeMismatch, "attribute measure size differs from attribute count");
    if (static_cast<std::size_t>(expert_measure.size()) != experts.size())
        throw Error(ErrorKind::SizeMismatch, "expert measure size differs from expert count");
    if (q && *q < 1) throw Error(ErrorKind::BadRung, "q must be >= 1");
}

std::string_view to_string(StageKind kind) {
    switch (kind) {
        case StageKind::CA: return "ca";
        case StageKind::CG: return "cg";
        case StageKind::WCA: return "wca";
        case StageKind::OCA: return "oca";
        case StageKind::OWCA: return "owca";
        case StageKind::WCG: return "wcg";
        case StageKind::OCG: return "ocg";
        case StageKind::OWCG: return "owcg";
        case StageKind::GIIFGA: return "giifga";
        case StageKind::IVIFEGC: return "ivifegc";
    }
    return "?";
}

StageKind parse_stage_kind(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    // Accept the long operator names as well, e.g. "ivqrofca".
    if (lower.rfind("ivqrof", 0) == 0) lower = lower.substr(6);
    for (auto kind : {StageKind::CA, StageKind::CG, StageKind::WCA, StageKind::OCA, StageKind::OWCA,
                      StageKind::WCG, StageKind::OCG, StageKind::OWCG, StageKind::GIIFGA,
                      StageKind::IVIFEGC}) {
        if (to_string(kind) == lower) return kind;
    }
    throw Error(ErrorKind::Parse, "unknown operator '" + std::string(name) + "'");
}

bool is_baseline(StageKind kind) {
    return kind == StageKind::GIIFGA || kind == StageKind::IVIFEGC;
}

DecisionProblem standardize(const DecisionProblem& p) {
    DecisionProblem out = p;
    for (std::size_t j = 0; j < out.attributes.size(); ++j) {
        if (out.attributes[j].kind != AttributeKind::Cost) continue;
        for (auto& matrix : out.matrices)
            for (auto& row : matrix) row[j] = complement(row[j]);
        out.attributes[j].kind = AttributeKind::Benefit;
    }
    return out;
}

int resolve_q(const DecisionProblem& p, std::optional<int> q, int q_max) {
    if (q) {
        check_rung(*q);
        for (std::size_t k = 0; k < p.matrices.size(); ++k)
            for (std::size_t i = 0; i < p.matrices[k].size(); ++i)
                for (std::size_t j = 0; j < p.matrices[k][i].size(); ++j)
                    if (!is_valid(p.matrices[k][i][j], *q))
                        throw Error(ErrorKind::ExplicitQInvalid,
                                    entry_label(p, k, i, j) + " " + to_string(p.matrices[k][i][j]) +
                                        " is not valid at q=" + std::to_string(*q));
        return *q;
    }
    std::vector<IvqRofn> all;
    for (const auto& matrix : p.matrices)
        for (const auto& row : matrix) all.insert(all.end(), row.begin(), row.end());
    return min_valid_q(all, q_max);
}

int resolve_q(const DecisionProblem& p, int q_max) { return resolve_q(p, p.q, q_max); }

IvqRofn aggregate_stage(std::span<const IvqRofn> items, const FuzzyMeasure& m, int q,
                        const StageOperator& op) {
    const auto n = items.size();
    auto uniform_order_weights = [&] {
        std::vector<double> lambda(n);
        for (std::size_t k = 0; k < n; ++k)
            lambda[k] = std::max(0.0, op.bum(static_cast<double>(k + 1) / n) -
                                          op.bum(static_cast<double>(k) / n));
        return lambda;
    };
    auto singleton_weights = [&] {
        auto s = m.singleton_values();
        const double total = std::accumulate(s.begin(), s.end(), 0.0);
        if (!(total > 0.0))
            throw Error(ErrorKind::WeightSumNotOne, "stage measure has all-zero singletons");
        for (double& v : s) v /= total;
        return s;
    };
    switch (op.kind) {
        case StageKind::CA: return ivqrofca(items, m, q, op.order);
        case StageKind::CG: return ivqrofcg(items, m, q, op.order);
        case StageKind::WCA: return ivqrofwca(items, m, q);
        case StageKind::WCG: return ivqrofwcg(items, m, q);
        case StageKind::OCA: return ivqrofoca(items, uniform_order_weights(), q);
        case StageKind::OCG: return ivqrofocg(items, uniform_order_weights(), q);
        case StageKind::OWCA: return ivqrofowca(items, op.bum, singleton_weights(), q);
        case StageKind::OWCG: return ivqrofowcg(items, op.bum, singleton_weights(), q);
        case StageKind::GIIFGA:
        case StageKind::IVIFEGC:
            if (q != 1)
                throw Error(ErrorKind::ExplicitQInvalid,
                            std::string(to_string(op.kind)) + " requires q=1, got q=" +
                                std::to_string(q));
            return op.kind == StageKind::GIIFGA ? giifga(items, m) : ivifegc(items, m);
    }
    throw Error(ErrorKind::Parse, "unknown stage operator");
}

Matrix aggregate_experts(const DecisionProblem& p, int q, const StageOperator& op) {
    const auto m = p.alternatives.size();
    const auto n = p.attributes.size();
    Matrix collective(m, std::vector<IvqRofn>(n, null_element()));
    std::vector<IvqRofn> cell(p.experts.size(), null_element());
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < p.experts.size(); ++k) cell[k] = p.matrices[k][i][j];
            collective[i][j] = aggregate_stage(cell, p.expert_measure, q, op);
        }
    }
    return collective;
}

std::vector<IvqRofn> aggregate_attributes(const Matrix& collective,
                                          const FuzzyMeasure& attribute_measure, int q,
                                          const StageOperator& op) {
    std::vector<IvqRofn> out;
    out.reserve(collective.size());
    for (const auto& row : collective) out.push_back(aggregate_stage(row, attribute_measure, q, op));
    return out;
}

RankingResult rank(std::vector<IvqRofn> aggregates, int q) {
    RankingResult r;
    r.resolved_q = q;
    for (const auto& a : aggregates) {
        r.scores.push_back(score(a, q));
        r.accuracies.push_back(accuracy(a, q));
    }
    r.ranking.resize(aggregates.size());
    std::iota(r.ranking.begin(), r.ranking.end(), std::size_t{0});
    std::stable_sort(r.ranking.begin(), r.ranking.end(), [&](std::size_t a, std::size_t b) {
        return compare(aggregates[a], aggregates[b], q) > 0;
    });
    r.aggregates = std::move(aggregates);
    return r;
}

RankingResult solve(const DecisionProblem& p, const SolveOptions& options) {
    p.validate_shape();
    const DecisionProblem std_problem = standardize(p);

    std::optional<int> requested = p.q;
    if (options.q_override) {
        requested = *options.q_override == 0 ? std::nullopt : options.q_override;
    }
    const bool baseline =
        is_baseline(options.expert_stage.kind) || is_baseline(options.attribute_stage.kind);
    if (baseline) {
        if (requested && *requested != 1)
            throw Error(ErrorKind::ExplicitQInvalid,
                        "baseline operators work on intuitionistic values and require q=1, got q=" +
                            std::to_string(*requested));
        requested = 1;
    }
    const int q = resolve_q(std_problem, requested, options.q_max);

    Matrix collective = aggregate_experts(std_problem, q, options.expert_stage);
    auto aggregates = aggregate_attributes(collective, std_problem.attribute_measure, q,
                                           options.attribute_stage);
    RankingResult result = rank(std::move(aggregates), q);
    result.collective = std::move(collective);
    return result;
}

std::vector<SweepEntry> sweep_q(const DecisionProblem& p, std::span<const int> qs,
                                const SolveOptions& options) {
    std::vector<SweepEntry> out;
    for (int q : qs) {
        check_rung(q);
        SolveOptions per_q = options;
        per_q.q_override = q;
        out.push_back({q, solve(p, per_q)});
    }
    return out;
}

}  // namespace ivq
