#pragma once

#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "ivq/ivqrofn.hpp"
#include "ivq/measure.hpp"

namespace ivq {

/// Direction in which inputs are sorted before the chain weights are taken.
/// Descending is the standard Choquet convention; Ascending is kept for
/// sensitivity runs only.
enum class SortOrder { Descending, Ascending };

/// Orders items best-first under `compare`, ties kept in index order.
Permutation sort_desc(std::span<const IvqRofn> items, int q);
/// sort_desc, or its mirror (worst-first, ties in index order) for Ascending.
Permutation sort_items(std::span<const IvqRofn> items, int q, SortOrder order);

// Averaging family ----------------------------------------------------------

IvqRofn ivqrofca(std::span<const IvqRofn> items, const FuzzyMeasure& m, int q,
                 SortOrder order = SortOrder::Descending);
/// Requires an additive measure (NotAdditive otherwise); exponents are the singleton measures.
IvqRofn ivqrofwca(std::span<const IvqRofn> items, const FuzzyMeasure& m, int q);
/// lambda_k weights the k-th largest item.
IvqRofn ivqrofoca(std::span<const IvqRofn> items, std::span<const double> lambda, int q);
IvqRofn ivqrofowca(std::span<const IvqRofn> items, const BumFunction& bum,
                   std::span<const double> singleton_weights, int q);

// Geometric family ----------------------------------------------------------

IvqRofn ivqrofcg(std::span<const IvqRofn> items, const FuzzyMeasure& m, int q,
                 SortOrder order = SortOrder::Descending);
IvqRofn ivqrofwcg(std::span<const IvqRofn> items, const FuzzyMeasure& m, int q);
IvqRofn ivqrofocg(std::span<const IvqRofn> items, std::span<const double> lambda, int q);
IvqRofn ivqrofowcg(std::span<const IvqRofn> items, const BumFunction& bum,
                   std::span<const double> singleton_weights, int q);

/// Closed forms shared by every operator above: weights[k] applies to items[order[k]].
IvqRofn weighted_average_form(std::span<const IvqRofn> items, const Permutation& order,
                              std::span<const double> weights, int q);
IvqRofn weighted_geometric_form(std::span<const IvqRofn> items, const Permutation& order,
                                std::span<const double> weights, int q);

// Iterated-arithmetic evaluation --------------------------------------------

/// Sum (oplus) of w_k * a_sigma(k) computed with scalar_mul and oplus only.
IvqRofn choquet_oracle_avg(std::span<const IvqRofn> items, const FuzzyMeasure& m, int q);
/// Product (otimes) of a_sigma(k) ^ w_k computed with power and otimes only.
IvqRofn choquet_oracle_geo(std::span<const IvqRofn> items, const FuzzyMeasure& m, int q);

// Dispatch ------------------------------------------------------------------

enum class OperatorKind { CA, CG, WCA, OCA, OWCA, WCG, OCG, OWCG };

std::string_view to_string(OperatorKind kind);
bool is_geometric(OperatorKind kind);

struct BumPayload {
    BumFunction bum;
    std::vector<double> singleton_weights;
};

/// One configured aggregation: the operator, its parameters and the rung.
struct AggregationSpec {
    OperatorKind kind;
    std::variant<FuzzyMeasure, std::vector<double>, BumPayload> payload;
    int q;

    /// Throws SizeMismatch if the payload alternative does not fit `kind`, BadRung on q < 1.
    void validate() const;
};

IvqRofn aggregate(const AggregationSpec& spec, std::span<const IvqRofn> items);

}  // namespace ivq
