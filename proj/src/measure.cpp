#include "ivq/measure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ivq {

namespace {

constexpr double kGroundTol = 1e-12;
constexpr double kMonotoneTol = 1e-12;
constexpr double kWeightSumTol = 1e-9;

std::string subset_string(Subset s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if (s & singleton(i)) {
            if (!first) os << ',';
            os << i;
            first = false;
        }
    }
    os << '}';
    return os.str();
}

void check_ground_size(int n) {
    if (n < 1 || n > kMaxGroundSetSize) {
        throw Error(ErrorKind::SizeMismatch, "ground set size must be in [1, " +
                                                 std::to_string(kMaxGroundSetSize) + "], got " +
                                                 std::to_string(n));
    }
}

}  // namespace

Permutation::Permutation(std::vector<std::size_t> order) : order_(std::move(order)) {
    std::vector<bool> seen(order_.size(), false);
    for (auto e : order_) {
        if (e >= order_.size() || seen[e])
            throw Error(ErrorKind::SizeMismatch, "not a permutation of 0..n-1");
        seen[e] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return Permutation(std::move(order));
}

Permutation Permutation::reversed() const {
    return Permutation(std::vector<std::size_t>(order_.rbegin(), order_.rend()));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(order_.size());
    for (std::size_t k = 0; k < order_.size(); ++k) inv[order_[k]] = k;
    return Permutation(std::move(inv));
}

FuzzyMeasure FuzzyMeasure::from_table(int n, const std::map<Subset, double>& entries) {
    check_ground_size(n);
    const Subset full = full_set(n);
    std::vector<double> values(std::size_t{full} + 1, 0.0);
    for (const auto& [s, v] : entries) {
        if (s > full) throw Error(ErrorKind::BadSubset, "subset " + subset_string(s) + " outside ground set");
    }
    for (Subset s = 0; s <= full; ++s) {
        auto it = entries.find(s);
        if (it != entries.end()) {
            values[s] = it->second;
        } else if (s == 0) {
            values[s] = 0.0;
        } else if (s == full) {
            values[s] = 1.0;
        } else {
            throw Error(ErrorKind::MissingSubset, "no measure value for subset " + subset_string(s));
        }
    }
    return from_values(std::move(values));
}

FuzzyMeasure FuzzyMeasure::from_values(std::vector<double> values) {
    const auto size = values.size();
    if (size < 2 || !std::has_single_bit(size))
        throw Error(ErrorKind::SizeMismatch, "measure table size must be 2^n with n >= 1");
    const int n = std::countr_zero(size);
    check_ground_size(n);
    FuzzyMeasure m(n, std::move(values));
    m.validate();
    return m;
}

void FuzzyMeasure::validate() {
    const Subset full = full_set(n_);
    for (Subset s = 0; s <= full; ++s) {
        if (!std::isfinite(values_[s]))
            throw Error(ErrorKind::NonFinite, "measure value of " + subset_string(s) + " is not finite");
    }
    if (std::abs(values_[0]) > kGroundTol)
        throw Error(ErrorKind::NotGrounded, "measure of the empty set must be 0");
    if (std::abs(values_[full] - 1.0) > kGroundTol)
        throw Error(ErrorKind::NotGrounded, "measure of the full set must be 1");
    values_[0] = 0.0;
    values_[full] = 1.0;
    // One-element extensions suffice: inclusion chains are built from them.
    for (Subset s = 0; s <= full; ++s) {
        for (int i = 0; i < n_; ++i) {
            const Subset bigger = s | singleton(i);
            if (bigger == s) continue;
            if (values_[s] > values_[bigger] + kMonotoneTol) {
                std::ostringstream msg;
                msg << "measure is not monotone: mu" << subset_string(s) << " = " << values_[s]
                    << " > mu" << subset_string(bigger) << " = " << values_[bigger];
                throw Error(ErrorKind::NotMonotone, msg.str());
            }
        }
    }
}

FuzzyMeasure FuzzyMeasure::additive(std::span<const double> weights) {
    const auto w = normalized_weights(weights);
    const int n = static_cast<int>(w.size());
    check_ground_size(n);
    std::vector<double> values(std::size_t{full_set(n)} + 1, 0.0);
    for (Subset s = 1; s < values.size(); ++s) {
        const int low = std::countr_zero(s);
        values[s] = values[s & (s - 1)] + w[low];
    }
    return from_values(std::move(values));
}

FuzzyMeasure FuzzyMeasure::symmetric(std::span<const double> order_weights) {
    const auto w = normalized_weights(order_weights);
    const int n = static_cast<int>(w.size());
    check_ground_size(n);
    std::vector<double> by_card(w.size() + 1, 0.0);
    for (std::size_t k = 0; k < w.size(); ++k) by_card[k + 1] = by_card[k] + w[k];
    std::vector<double> values(std::size_t{full_set(n)} + 1, 0.0);
    for (Subset s = 0; s < values.size(); ++s) values[s] = by_card[std::popcount(s)];
    return from_values(std::move(values));
}

double FuzzyMeasure::value(Subset s) const {
    if (s > full_set(n_))
        throw Error(ErrorKind::BadSubset, "subset " + subset_string(s) + " outside ground set of size " +
                                              std::to_string(n_));
    return values_[s];
}

bool FuzzyMeasure::is_additive(double tol) const {
    for (Subset s = 1; s < values_.size(); ++s) {
        double sum = 0.0;
        for (int i = 0; i < n_; ++i)
            if (s & singleton(i)) sum += values_[singleton(i)];
        if (std::abs(sum - values_[s]) > tol) return false;
    }
    return true;
}

std::vector<double> FuzzyMeasure::singleton_values() const {
    std::vector<double> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = values_[singleton(i)];
    return out;
}

FuzzyMeasure FuzzyMeasure::relabeled(const Permutation& order) const {
    if (order.size() != static_cast<std::size_t>(n_))
        throw Error(ErrorKind::SizeMismatch, "relabeling size differs from ground set");
    std::vector<double> values(values_.size());
    for (Subset s = 0; s < values.size(); ++s) {
        Subset image = 0;
        for (int i = 0; i < n_; ++i)
            if (s & singleton(i)) image |= singleton(order[i]);
        values[s] = values_[image];
    }
    return FuzzyMeasure(n_, std::move(values));
}

BumFunction::BumFunction(std::function<double(double)> fn, std::string name, int grid)
    : fn_(std::move(fn)), name_(std::move(name)) {
    if (!fn_) throw Error(ErrorKind::InvalidBum, "empty BUM function");
    if (grid < 2) grid = 2;
    if (fn_(0.0) != 0.0) throw Error(ErrorKind::InvalidBum, "BUM " + name_ + ": Q(0) != 0");
    if (fn_(1.0) != 1.0) throw Error(ErrorKind::InvalidBum, "BUM " + name_ + ": Q(1) != 1");
    double prev = 0.0;
    for (int k = 1; k < grid; ++k) {
        const double x = static_cast<double>(k) / (grid - 1);
        const double y = fn_(x);
        if (!std::isfinite(y) || y < prev || y > 1.0)
            throw Error(ErrorKind::InvalidBum, "BUM " + name_ + " is not monotone into [0,1] near x=" +
                                                   std::to_string(x));
        prev = y;
    }
}

BumFunction BumFunction::identity() {
    return BumFunction([](double x) { return x; }, "identity");
}

BumFunction BumFunction::power(double r) {
    if (!(r > 0.0) || !std::isfinite(r))
        throw Error(ErrorKind::InvalidBum, "power BUM needs a positive finite exponent");
    std::ostringstream name;
    name << "power:" << r;
    return BumFunction([r](double x) { return std::pow(x, r); }, name.str());
}

BumFunction BumFunction::piecewise_linear(std::vector<std::pair<double, double>> knots) {
    if (knots.size() < 2 || knots.front() != std::pair{0.0, 0.0} || knots.back() != std::pair{1.0, 1.0})
        throw Error(ErrorKind::InvalidBum, "piecewise-linear BUM must run from (0,0) to (1,1)");
    for (std::size_t k = 1; k < knots.size(); ++k) {
        if (!(knots[k].first > knots[k - 1].first))
            throw Error(ErrorKind::InvalidBum, "piecewise-linear BUM knots must be strictly increasing in x");
    }
    auto fn = [knots](double x) {
        x = std::clamp(x, 0.0, 1.0);
        auto it = std::upper_bound(knots.begin(), knots.end(), x,
                                   [](double v, const auto& knot) { return v < knot.first; });
        if (it == knots.end()) return knots.back().second;
        const auto& [x1, y1] = *it;
        const auto& [x0, y0] = *(it - 1);
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    };
    return BumFunction(std::move(fn), "piecewise-linear");
}

std::vector<double> normalized_weights(std::span<const double> weights) {
    if (weights.empty()) throw Error(ErrorKind::SizeMismatch, "weight vector is empty");
    double sum = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w)) throw Error(ErrorKind::NonFinite, "weight is not finite");
        if (w < 0.0) throw Error(ErrorKind::NegativeWeight, "weights must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightSumTol) {
        std::ostringstream msg;
        msg << "weights sum to " << sum << ", expected 1";
        throw Error(ErrorKind::WeightSumNotOne, msg.str());
    }
    std::vector<double> out(weights.begin(), weights.end());
    for (double& w : out) w /= sum;
    return out;
}

std::vector<double> chain_weights(const FuzzyMeasure& m, const Permutation& sigma) {
    if (sigma.size() != static_cast<std::size_t>(m.size()))
        throw Error(ErrorKind::SizeMismatch, "permutation size differs from ground set");
    std::vector<double> w(sigma.size());
    Subset prefix = 0;
    double prev = 0.0;
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        prefix |= singleton(sigma[k]);
        const double cur = m.value(prefix);
        w[k] = std::max(0.0, cur - prev);
        prev = cur;
    }
    return w;
}

std::vector<double> reverse_chain_weights(const FuzzyMeasure& m, const Permutation& sigma) {
    if (sigma.size() != static_cast<std::size_t>(m.size()))
        throw Error(ErrorKind::SizeMismatch, "permutation size differs from ground set");
    std::vector<double> w(sigma.size());
    Subset suffix = 0;
    double prev = 0.0;
    for (std::size_t k = sigma.size(); k-- > 0;) {
        suffix |= singleton(sigma[k]);
        const double cur = m.value(suffix);
        w[k] = std::max(0.0, cur - prev);
        prev = cur;
    }
    return w;
}

std::vector<double> bum_order_weights(const BumFunction& q, std::span<const double> singleton_weights,
                                      const Permutation& sigma) {
    const auto s = normalized_weights(singleton_weights);
    if (sigma.size() != s.size())
        throw Error(ErrorKind::SizeMismatch, "permutation size differs from weight count");
    std::vector<double> w(s.size());
    double cum = 0.0;
    double prev_q = q(0.0);
    for (std::size_t k = 0; k < s.size(); ++k) {
        cum = (k + 1 == s.size()) ? 1.0 : std::min(1.0, cum + s[sigma[k]]);
        const double cur_q = q(cum);
        w[k] = std::max(0.0, cur_q - prev_q);
        prev_q = cur_q;
    }
    return w;
}

double scalar_choquet(std::span<const double> f, const FuzzyMeasure& m) {
    if (f.size() != static_cast<std::size_t>(m.size()))
        throw Error(ErrorKind::SizeMismatch, "function length differs from ground set");
    for (double v : f) {
        if (!std::isfinite(v)) throw Error(ErrorKind::NonFinite, "function value is not finite");
        if (v < 0.0) throw Error(ErrorKind::NegativeInput, "Choquet integrand must be non-negative");
    }
    std::vector<std::size_t> order(f.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return f[a] > f[b]; });
    const auto w = chain_weights(m, Permutation(order));
    double sum = 0.0;
    for (std::size_t k = 0; k < order.size(); ++k) sum += f[order[k]] * w[k];
    return sum;
}

}  // namespace ivq
