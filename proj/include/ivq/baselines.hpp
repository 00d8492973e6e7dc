#pragma once

#include <span>

#include "ivq/ivqrofn.hpp"
#include "ivq/measure.hpp"

namespace ivq {

// Interval-valued intuitionistic (q = 1) comparison operators. Both sort
// their inputs ascending and weight them by the suffix chain
// mu(B_i) - mu(B_{i+1}), B_i = {sigma(i), ..., sigma(n)}.

/// Geometric Choquet aggregation: t = prod t^w, f = 1 - prod (1 - f)^w.
IvqRofn giifga(std::span<const IvqRofn> items, const FuzzyMeasure& m);

/// Einstein geometric Choquet aggregation:
/// t = 2 prod t^w / (prod (2 - t)^w + prod t^w),
/// f = (prod (1 + f)^w - prod (1 - f)^w) / (prod (1 + f)^w + prod (1 - f)^w).
IvqRofn ivifegc(std::span<const IvqRofn> items, const FuzzyMeasure& m);

}  // namespace ivq
