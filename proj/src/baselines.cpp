#include "ivq/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "ivq/choquet.hpp"
#include "ivq/detail/numerics.hpp"

namespace ivq {

namespace {

struct Prepared {
    Permutation order;
    std::vector<double> weights;
};

Prepared prepare(std::span<const IvqRofn> items, const FuzzyMeasure& m) {
    if (items.size() != static_cast<std::size_t>(m.size()))
        throw Error(ErrorKind::SizeMismatch, "got " + std::to_string(items.size()) +
                                                 " items for a ground set of " +
                                                 std::to_string(m.size()));
    auto order = sort_items(items, 1, SortOrder::Ascending);
    auto weights = reverse_chain_weights(m, order);
    return {std::move(order), std::move(weights)};
}

// prod over positions of g(item)^w, 0^0 = 1.
double product(std::span<const IvqRofn> items, const Prepared& p,
               const std::function<double(const IvqRofn&)>& g) {
    double log_sum = 0.0;
    for (std::size_t k = 0; k < p.order.size(); ++k) {
        if (p.weights[k] == 0.0) continue;
        const double base = g(items[p.order[k]]);
        if (base == 0.0) return 0.0;
        log_sum += p.weights[k] * std::log(base);
    }
    return std::exp(log_sum);
}

double einstein_t(std::span<const IvqRofn> items, const Prepared& p,
                  double (*grade)(const IvqRofn&)) {
    const double t_part = product(items, p, [&](const IvqRofn& a) { return grade(a); });
    const double two_minus = product(items, p, [&](const IvqRofn& a) { return 2.0 - grade(a); });
    return std::clamp(2.0 * t_part / (two_minus + t_part), 0.0, 1.0);
}

double einstein_f(std::span<const IvqRofn> items, const Prepared& p,
                  double (*grade)(const IvqRofn&)) {
    const double plus = product(items, p, [&](const IvqRofn& a) { return 1.0 + grade(a); });
    const double minus = product(items, p, [&](const IvqRofn& a) { return 1.0 - grade(a); });
    return std::clamp((plus - minus) / (plus + minus), 0.0, 1.0);
}

double t_lo(const IvqRofn& a) { return a.t.lo(); }
double t_hi(const IvqRofn& a) { return a.t.hi(); }
double f_lo(const IvqRofn& a) { return a.f.lo(); }
double f_hi(const IvqRofn& a) { return a.f.hi(); }

}  // namespace

IvqRofn giifga(std::span<const IvqRofn> items, const FuzzyMeasure& m) {
    const auto p = prepare(items, m);
    return weighted_geometric_form(items, p.order, p.weights, 1);
}

IvqRofn ivifegc(std::span<const IvqRofn> items, const FuzzyMeasure& m) {
    const auto p = prepare(items, m);
    return detail::settled(einstein_t(items, p, t_lo), einstein_t(items, p, t_hi),
                           einstein_f(items, p, f_lo), einstein_f(items, p, f_hi), 1);
}

}  // namespace ivq
