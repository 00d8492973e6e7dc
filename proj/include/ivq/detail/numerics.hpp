#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>

namespace ivq::detail {

inline double pow_q(double x, int q) {
    double r = 1.0;
    for (int i = 0; i < q; ++i) r *= x;
    return r;
}

inline double root_q(double x, int q) {
    x = std::clamp(x, 0.0, 1.0);
    if (q == 1 || x == 0.0 || x == 1.0) return x;
    if (q == 2) return std::sqrt(x);
    if (q == 3) return std::cbrt(x);
    return std::pow(x, 1.0 / q);
}

/// 1 - prod (1 - x_i)^{w_i}, evaluated through log1p/expm1 so that small x
/// keep full relative precision. Terms with w_i == 0 contribute 1 (0^0 = 1).
inline double one_minus_weighted_complement(std::span<const double> x,
                                            std::span<const double> w) {
    double log_sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (w[i] == 0.0) continue;
        if (x[i] >= 1.0) return 1.0;
        log_sum += w[i] * std::log1p(-x[i]);
    }
    return std::clamp(-std::expm1(log_sum), 0.0, 1.0);
}

/// prod x_i^{w_i}, with 0^0 = 1.
inline double weighted_product(std::span<const double> x, std::span<const double> w) {
    double p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (w[i] == 0.0) continue;
        if (x[i] == 0.0) return 0.0;
        p *= std::pow(x[i], w[i]);
    }
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace ivq::detail
