#include "ivq/choquet.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ivq/detail/numerics.hpp"

namespace ivq {

namespace {

void check_items(std::span<const IvqRofn> items, int q) {
    check_rung(q);
    if (items.empty()) throw Error(ErrorKind::SizeMismatch, "aggregation needs at least one item");
    for (std::size_t i = 0; i < items.size(); ++i)
        require_valid(items[i], q, "item " + std::to_string(i));
}

void check_size(std::span<const IvqRofn> items, std::size_t n) {
    if (items.size() != n) {
        throw Error(ErrorKind::SizeMismatch, "got " + std::to_string(items.size()) +
                                                 " items for a ground set of " + std::to_string(n));
    }
}

struct Gathered {
    std::vector<double> t_lo, t_hi, f_lo, f_hi;
};

Gathered gather(std::span<const IvqRofn> items, const Permutation& order, int q, bool pow_t,
                bool pow_f) {
    Gathered g;
    const auto n = order.size();
    g.t_lo.reserve(n);
    g.t_hi.reserve(n);
    g.f_lo.reserve(n);
    g.f_hi.reserve(n);
    auto take = [q](double v, bool raise) { return raise ? detail::pow_q(v, q) : v; };
    for (std::size_t k = 0; k < n; ++k) {
        const auto& a = items[order[k]];
        g.t_lo.push_back(take(a.t.lo(), pow_t));
        g.t_hi.push_back(take(a.t.hi(), pow_t));
        g.f_lo.push_back(take(a.f.lo(), pow_f));
        g.f_hi.push_back(take(a.f.hi(), pow_f));
    }
    return g;
}

void check_weights(std::span<const IvqRofn> items, const Permutation& order,
                   std::span<const double> weights) {
    if (order.size() != items.size() || weights.size() != items.size())
        throw Error(ErrorKind::SizeMismatch, "order, weights and items differ in length");
}

}  // namespace

Permutation sort_desc(std::span<const IvqRofn> items, int q) {
    check_items(items, q);
    std::vector<std::size_t> order(items.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return compare(items[a], items[b], q) > 0;
    });
    return Permutation(std::move(order));
}

Permutation sort_items(std::span<const IvqRofn> items, int q, SortOrder order) {
    if (order == SortOrder::Descending) return sort_desc(items, q);
    check_items(items, q);
    std::vector<std::size_t> idx(items.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return compare(items[a], items[b], q) < 0;
    });
    return Permutation(std::move(idx));
}

IvqRofn weighted_average_form(std::span<const IvqRofn> items, const Permutation& order,
                              std::span<const double> weights, int q) {
    check_weights(items, order, weights);
    const auto g = gather(items, order, q, true, false);
    return detail::settled(detail::root_q(detail::one_minus_weighted_complement(g.t_lo, weights), q),
                           detail::root_q(detail::one_minus_weighted_complement(g.t_hi, weights), q),
                           detail::weighted_product(g.f_lo, weights),
                           detail::weighted_product(g.f_hi, weights), q);
}

IvqRofn weighted_geometric_form(std::span<const IvqRofn> items, const Permutation& order,
                                std::span<const double> weights, int q) {
    check_weights(items, order, weights);
    const auto g = gather(items, order, q, false, true);
    return detail::settled(detail::weighted_product(g.t_lo, weights),
                           detail::weighted_product(g.t_hi, weights),
                           detail::root_q(detail::one_minus_weighted_complement(g.f_lo, weights), q),
                           detail::root_q(detail::one_minus_weighted_complement(g.f_hi, weights), q), q);
}

IvqRofn ivqrofca(std::span<const IvqRofn> items, const FuzzyMeasure& m, int q, SortOrder order) {
    check_items(items, q);
    check_size(items, static_cast<std::size_t>(m.size()));
    const auto sigma = sort_items(items, q, order);
    return weighted_average_form(items, sigma, chain_weights(m, sigma), q);
}

IvqRofn ivqrofcg(std::span<const IvqRofn> items, const FuzzyMeasure& m, int q, SortOrder order) {
    check_items(items, q);
    check_size(items, static_cast<std::size_t>(m.size()));
    const auto sigma = sort_items(items, q, order);
    return weighted_geometric_form(items, sigma, chain_weights(m, sigma), q);
}

namespace {

std::vector<double> additive_weights(const FuzzyMeasure& m) {
    if (!m.is_additive())
        throw Error(ErrorKind::NotAdditive, "weighted Choquet operators need an additive measure");
    return m.singleton_values();
}

}  // namespace

IvqRofn ivqrofwca(std::span<const IvqRofn> items, const FuzzyMeasure& m, int q) {
    check_items(items, q);
    check_size(items, static_cast<std::size_t>(m.size()));
    const auto w = additive_weights(m);
    return weighted_average_form(items, Permutation::identity(items.size()), w, q);
}

IvqRofn ivqrofwcg(std::span<const IvqRofn> items, const FuzzyMeasure& m, int q) {
    check_items(items, q);
    check_size(items, static_cast<std::size_t>(m.size()));
    const auto w = additive_weights(m);
    return weighted_geometric_form(items, Permutation::identity(items.size()), w, q);
}

IvqRofn ivqrofoca(std::span<const IvqRofn> items, std::span<const double> lambda, int q) {
    check_items(items, q);
    const auto w = normalized_weights(lambda);
    check_size(items, w.size());
    return weighted_average_form(items, sort_desc(items, q), w, q);
}

IvqRofn ivqrofocg(std::span<const IvqRofn> items, std::span<const double> lambda, int q) {
    check_items(items, q);
    const auto w = normalized_weights(lambda);
    check_size(items, w.size());
    return weighted_geometric_form(items, sort_desc(items, q), w, q);
}

IvqRofn ivqrofowca(std::span<const IvqRofn> items, const BumFunction& bum,
                   std::span<const double> singleton_weights, int q) {
    check_items(items, q);
    check_size(items, singleton_weights.size());
    const auto sigma = sort_desc(items, q);
    return weighted_average_form(items, sigma, bum_order_weights(bum, singleton_weights, sigma), q);
}

IvqRofn ivqrofowcg(std::span<const IvqRofn> items, const BumFunction& bum,
                   std::span<const double> singleton_weights, int q) {
    check_items(items, q);
    check_size(items, singleton_weights.size());
    const auto sigma = sort_desc(items, q);
    return weighted_geometric_form(items, sigma, bum_order_weights(bum, singleton_weights, sigma),
                                   q);
}

namespace {

// Insertion sort on (score, accuracy), kept separate from sort_desc.
std::vector<std::size_t> oracle_order(std::span<const IvqRofn> items, int q) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const double si = score(items[i], q);
        const double hi = accuracy(items[i], q);
        auto pos = order.end();
        for (auto it = order.begin(); it != order.end(); ++it) {
            const double sj = score(items[*it], q);
            const double hj = accuracy(items[*it], q);
            if (si > sj || (si == sj && hi > hj)) {
                pos = it;
                break;
            }
        }
        order.insert(pos, i);
    }
    return order;
}

std::vector<double> oracle_weights(const FuzzyMeasure& m, const std::vector<std::size_t>& order) {
    std::vector<double> w;
    Subset prefix = 0;
    for (auto e : order) {
        const double before = m.value(prefix);
        prefix |= singleton(e);
        w.push_back(m.value(prefix) - before);
    }
    return w;
}

}  // namespace

IvqRofn choquet_oracle_avg(std::span<const IvqRofn> items, const FuzzyMeasure& m, int q) {
    check_items(items, q);
    check_size(items, static_cast<std::size_t>(m.size()));
    const auto order = oracle_order(items, q);
    const auto w = oracle_weights(m, order);
    IvqRofn acc = scalar_mul(std::max(0.0, w[0]), items[order[0]], q);
    for (std::size_t k = 1; k < order.size(); ++k)
        acc = oplus(acc, scalar_mul(std::max(0.0, w[k]), items[order[k]], q), q);
    return acc;
}

IvqRofn choquet_oracle_geo(std::span<const IvqRofn> items, const FuzzyMeasure& m, int q) {
    check_items(items, q);
    check_size(items, static_cast<std::size_t>(m.size()));
    const auto order = oracle_order(items, q);
    const auto w = oracle_weights(m, order);
    IvqRofn acc = power(items[order[0]], std::max(0.0, w[0]), q);
    for (std::size_t k = 1; k < order.size(); ++k)
        acc = otimes(acc, power(items[order[k]], std::max(0.0, w[k]), q), q);
    return acc;
}

std::string_view to_string(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::CA: return "ca";
        case OperatorKind::CG: return "cg";
        case OperatorKind::WCA: return "wca";
        case OperatorKind::OCA: return "oca";
        case OperatorKind::OWCA: return "owca";
        case OperatorKind::WCG: return "wcg";
        case OperatorKind::OCG: return "ocg";
        case OperatorKind::OWCG: return "owcg";
    }
    return "?";
}

bool is_geometric(OperatorKind kind) {
    return kind == OperatorKind::CG || kind == OperatorKind::WCG || kind == OperatorKind::OCG ||
           kind == OperatorKind::OWCG;
}

void AggregationSpec::validate() const {
    check_rung(q);
    bool ok = false;
    switch (kind) {
        case OperatorKind::CA:
        case OperatorKind::CG:
        case OperatorKind::WCA:
        case OperatorKind::WCG:
            ok = std::holds_alternative<FuzzyMeasure>(payload);
            break;
        case OperatorKind::OCA:
        case OperatorKind::OCG:
            ok = std::holds_alternative<std::vector<double>>(payload);
            break;
        case OperatorKind::OWCA:
        case OperatorKind::OWCG:
            ok = std::holds_alternative<BumPayload>(payload);
            break;
    }
    if (!ok)
        throw Error(ErrorKind::SizeMismatch,
                    "payload does not match operator " + std::string(to_string(kind)));
}

IvqRofn aggregate(const AggregationSpec& spec, std::span<const IvqRofn> items) {
    spec.validate();
    switch (spec.kind) {
        case OperatorKind::CA: return ivqrofca(items, std::get<FuzzyMeasure>(spec.payload), spec.q);
        case OperatorKind::CG: return ivqrofcg(items, std::get<FuzzyMeasure>(spec.payload), spec.q);
        case OperatorKind::WCA: return ivqrofwca(items, std::get<FuzzyMeasure>(spec.payload), spec.q);
        case OperatorKind::WCG: return ivqrofwcg(items, std::get<FuzzyMeasure>(spec.payload), spec.q);
        case OperatorKind::OCA:
            return ivqrofoca(items, std::get<std::vector<double>>(spec.payload), spec.q);
        case OperatorKind::OCG:
            return ivqrofocg(items, std::get<std::vector<double>>(spec.payload), spec.q);
        case OperatorKind::OWCA: {
            const auto& p = std::get<BumPayload>(spec.payload);
            return ivqrofowca(items, p.bum, p.singleton_weights, spec.q);
        }
        case OperatorKind::OWCG: {
            const auto& p = std::get<BumPayload>(spec.payload);
            return ivqrofowcg(items, p.bum, p.singleton_weights, spec.q);
        }
    }
    throw Error(ErrorKind::SizeMismatch, "unknown operator");
}

}  // namespace ivq
