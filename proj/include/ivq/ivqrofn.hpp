#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>

#include "ivq/error.hpp"

namespace ivq {

/// Closed subinterval [lo, hi] of [0, 1].
class UnitInterval {
public:
    /// Throws OutOfRange, InvertedInterval or NonFinite.
    UnitInterval(double lo, double hi);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }

    friend bool operator==(const UnitInterval&, const UnitInterval&) = default;

private:
    double lo_;
    double hi_;
};

/// Interval-valued q-rung orthopair fuzzy number <[t-, t+], [f-, f+]>.
///
/// The rung q is not part of the value: the same number can be valid at
/// q = 3 and invalid at q = 2, so every operation takes q explicitly.
struct IvqRofn {
    UnitInterval t;  // membership
    UnitInterval f;  // non-membership

    friend bool operator==(const IvqRofn&, const IvqRofn&) = default;
};

IvqRofn make_ivqrofn(double t_lo, double t_hi, double f_lo, double f_hi);

namespace detail {
/// Builds a computed result. Rounding can leave a value that lies on the
/// validity boundary up to 1e-12 outside it; f+ (and f- with it) is then
/// lowered onto the boundary so the result passes is_valid exactly.
IvqRofn settled(double t_lo, double t_hi, double f_lo, double f_hi, int q);
}  // namespace detail

/// <[0,0],[1,1]>, the neutral element of oplus.
IvqRofn null_element();
/// <[1,1],[0,0]>, the neutral element of otimes.
IvqRofn unit_element();

/// Throws BadRung unless q >= 1.
void check_rung(int q);

/// (t+)^q + (f+)^q <= 1, compared exactly.
bool is_valid(const IvqRofn& a, int q);

/// Throws InvalidAtQ naming `what` when `a` fails is_valid at q.
void require_valid(const IvqRofn& a, int q, std::string_view what = "operand");

/// Smallest q in [1, q_max] at which every item is valid. Throws NoValidQ.
int min_valid_q(std::span<const IvqRofn> items, int q_max);

IvqRofn oplus(const IvqRofn& a, const IvqRofn& b, int q);
IvqRofn otimes(const IvqRofn& a, const IvqRofn& b, int q);
/// lambda * a. lambda = 0 yields the null element.
IvqRofn scalar_mul(double lambda, const IvqRofn& a, int q);
/// a ^ lambda. lambda = 0 yields the unit element.
IvqRofn power(const IvqRofn& a, double lambda, int q);
IvqRofn complement(const IvqRofn& a);

/// 1/2 [(t-)^q + (t+)^q - (f-)^q - (f+)^q]
double score(const IvqRofn& a, int q);
/// Twice the score; the scale on which published case-study scores are printed.
double paper_scale_score(const IvqRofn& a, int q);
/// 1/2 [(t-)^q + (t+)^q + (f-)^q + (f+)^q]
double accuracy(const IvqRofn& a, int q);

/// Score first, accuracy on exact score ties.
std::weak_ordering compare(const IvqRofn& a, const IvqRofn& b, int q);

/// Hesitancy interval [(1 - t+^q - f+^q)^(1/q), (1 - t-^q - f-^q)^(1/q)].
UnitInterval hesitancy(const IvqRofn& a, int q);

/// `<[t_lo,t_hi],[f_lo,f_hi]>` at fixed precision.
std::string to_string(const IvqRofn& a, int precision = 4);
std::ostream& operator<<(std::ostream& os, const IvqRofn& a);

/// Fixed-point rendering that never prints "-0.000".
std::string format_fixed(double value, int precision);

}  // namespace ivq
