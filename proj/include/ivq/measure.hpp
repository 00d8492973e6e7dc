#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ivq/error.hpp"

namespace ivq {

/// Subset of a finite ground set: bit i set means element i is present.
using Subset = std::uint32_t;

inline constexpr int kMaxGroundSetSize = 20;

inline constexpr Subset singleton(std::size_t i) { return Subset{1} << i; }
inline constexpr Subset full_set(std::size_t n) { return (Subset{1} << n) - 1; }

/// Bijection on {0, ..., n-1}; order()[k] is the element placed at position k.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> order);
    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return order_.size(); }
    std::size_t operator[](std::size_t position) const { return order_[position]; }
    const std::vector<std::size_t>& order() const noexcept { return order_; }

    Permutation reversed() const;
    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> order_;
};

/// Capacity on a ground set of n elements: grounded (empty set -> 0, full
/// set -> 1) and monotone under inclusion. Immutable after construction.
class FuzzyMeasure {
public:
    /// `entries` must cover every subset, except that the empty and full
    /// sets default to 0 and 1 when absent.
    static FuzzyMeasure from_table(int n, const std::map<Subset, double>& entries);
    /// Validates a dense table of size 2^n indexed by Subset.
    static FuzzyMeasure from_values(std::vector<double> values);
    /// mu(B) = sum of member weights. Weights must sum to 1 within 1e-9.
    static FuzzyMeasure additive(std::span<const double> weights);
    /// mu(B) = lambda_1 + ... + lambda_|B|.
    static FuzzyMeasure symmetric(std::span<const double> order_weights);

    int size() const noexcept { return n_; }
    double value(Subset s) const;
    const std::vector<double>& values() const noexcept { return values_; }

    /// mu(B) == sum over B of mu({i}) for every B, within tol.
    bool is_additive(double tol = 1e-9) const;
    std::vector<double> singleton_values() const;

    /// Measure seen through a relabeling: result(B) = mu({order[i] : i in B}).
    FuzzyMeasure relabeled(const Permutation& order) const;

    friend bool operator==(const FuzzyMeasure&, const FuzzyMeasure&) = default;

private:
    FuzzyMeasure(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {}
    void validate();

    int n_;
    std::vector<double> values_;
};

/// Basic unit-interval monotonic function Q: Q(0) = 0, Q(1) = 1, non-decreasing.
class BumFunction {
public:
    /// Checks the BUM conditions on a uniform grid of `grid` points. Throws InvalidBum.
    BumFunction(std::function<double(double)> fn, std::string name, int grid = 1001);

    static BumFunction identity();
    /// Q(x) = x^r, r > 0.
    static BumFunction power(double r);
    /// Linear interpolation through (x, Q(x)) knots; must start at (0,0) and end at (1,1).
    static BumFunction piecewise_linear(std::vector<std::pair<double, double>> knots);

    double operator()(double x) const { return fn_(x); }
    const std::string& name() const noexcept { return name_; }

private:
    std::function<double(double)> fn_;
    std::string name_;
};

/// w_i = mu(B_i) - mu(B_{i-1}) with B_i the first i elements of `sigma`.
std::vector<double> chain_weights(const FuzzyMeasure& m, const Permutation& sigma);

/// w_i = mu(B_i) - mu(B_{i+1}) with B_i = {sigma(i), ..., sigma(n)} and B_{n+1} empty.
std::vector<double> reverse_chain_weights(const FuzzyMeasure& m, const Permutation& sigma);

/// w_i = Q(sum_{j<=i} s_sigma(j)) - Q(sum_{j<i} s_sigma(j)).
std::vector<double> bum_order_weights(const BumFunction& q,
                                      std::span<const double> singleton_weights,
                                      const Permutation& sigma);

/// Non-negative weights summing to 1 within 1e-9, renormalized. Throws
/// NegativeWeight / WeightSumNotOne.
std::vector<double> normalized_weights(std::span<const double> weights);

/// Discrete Choquet integral of a non-negative function f (one value per element).
double scalar_choquet(std::span<const double> f, const FuzzyMeasure& m);

}  // namespace ivq
