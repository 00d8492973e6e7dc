#include "ivq/ivqrofn.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ivq/detail/numerics.hpp"

namespace ivq {

using detail::pow_q;
using detail::root_q;

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::InvertedInterval: return "InvertedInterval";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::BadRung: return "BadRung";
        case ErrorKind::NegativeScalar: return "NegativeScalar";
        case ErrorKind::NegativeInput: return "NegativeInput";
        case ErrorKind::InvalidAtQ: return "InvalidAtQ";
        case ErrorKind::NoValidQ: return "NoValidQ";
        case ErrorKind::ExplicitQInvalid: return "ExplicitQInvalid";
        case ErrorKind::MissingSubset: return "MissingSubset";
        case ErrorKind::NotGrounded: return "NotGrounded";
        case ErrorKind::NotMonotone: return "NotMonotone";
        case ErrorKind::NotAdditive: return "NotAdditive";
        case ErrorKind::BadSubset: return "BadSubset";
        case ErrorKind::NegativeWeight: return "NegativeWeight";
        case ErrorKind::WeightSumNotOne: return "WeightSumNotOne";
        case ErrorKind::InvalidBum: return "InvalidBum";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

UnitInterval::UnitInterval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw Error(ErrorKind::NonFinite, "interval bound is not finite");
    if (lo < 0.0 || lo > 1.0 || hi < 0.0 || hi > 1.0) {
        std::ostringstream msg;
        msg << "interval [" << lo << ", " << hi << "] leaves [0, 1]";
        throw Error(ErrorKind::OutOfRange, msg.str());
    }
    if (lo > hi) {
        std::ostringstream msg;
        msg << "interval [" << lo << ", " << hi << "] has lo > hi";
        throw Error(ErrorKind::InvertedInterval, msg.str());
    }
}

IvqRofn make_ivqrofn(double t_lo, double t_hi, double f_lo, double f_hi) {
    return IvqRofn{UnitInterval(t_lo, t_hi), UnitInterval(f_lo, f_hi)};
}

namespace detail {

IvqRofn settled(double t_lo, double t_hi, double f_lo, double f_hi, int q) {
    const double excess = pow_q(t_hi, q) + pow_q(f_hi, q) - 1.0;
    if (excess > 0.0 && excess <= 1e-12) {
        f_hi = std::min(f_hi, root_q(1.0 - pow_q(t_hi, q), q));
        while (f_hi > 0.0 && pow_q(t_hi, q) + pow_q(f_hi, q) > 1.0)
            f_hi = std::nextafter(f_hi, 0.0);
        f_lo = std::min(f_lo, f_hi);
    }
    return make_ivqrofn(t_lo, t_hi, f_lo, f_hi);
}

}  // namespace detail

IvqRofn null_element() { return make_ivqrofn(0.0, 0.0, 1.0, 1.0); }
IvqRofn unit_element() { return make_ivqrofn(1.0, 1.0, 0.0, 0.0); }

void check_rung(int q) {
    if (q < 1) throw Error(ErrorKind::BadRung, "rung q must be >= 1, got " + std::to_string(q));
}

bool is_valid(const IvqRofn& a, int q) {
    check_rung(q);
    return pow_q(a.t.hi(), q) + pow_q(a.f.hi(), q) <= 1.0;
}

void require_valid(const IvqRofn& a, int q, std::string_view what) {
    if (!is_valid(a, q)) {
        throw Error(ErrorKind::InvalidAtQ,
                    std::string(what) + " " + to_string(a, 4) + " is not valid at q=" +
                        std::to_string(q));
    }
}

int min_valid_q(std::span<const IvqRofn> items, int q_max) {
    check_rung(q_max);
    if (items.empty()) throw Error(ErrorKind::SizeMismatch, "min_valid_q needs at least one item");
    for (int q = 1; q <= q_max; ++q) {
        bool all = true;
        for (const auto& a : items) {
            if (!is_valid(a, q)) {
                all = false;
                break;
            }
        }
        if (all) return q;
    }
    throw Error(ErrorKind::NoValidQ,
                "no rung q in [1, " + std::to_string(q_max) + "] makes every value valid");
}

namespace {

// Operands produced by earlier arithmetic may sit on the validity boundary
// up to rounding; accept them within this slack.
constexpr double kOperandSlack = 1e-12;

void require_operand(const IvqRofn& a, int q) {
    check_rung(q);
    if (pow_q(a.t.hi(), q) + pow_q(a.f.hi(), q) > 1.0 + kOperandSlack) require_valid(a, q);
}

// 1 - (1 - x)(1 - y) on q-th powers, then the q-th root.
double probabilistic_sum(double a, double b, int q) {
    const double x = pow_q(a, q);
    const double y = pow_q(b, q);
    return root_q(x + y - x * y, q);
}

double scale_grade(double grade, double lambda, int q) {
    const double x = pow_q(grade, q);
    if (x >= 1.0) return 1.0;
    return root_q(-std::expm1(lambda * std::log1p(-x)), q);
}

}  // namespace

IvqRofn oplus(const IvqRofn& a, const IvqRofn& b, int q) {
    require_operand(a, q);
    require_operand(b, q);
    return detail::settled(probabilistic_sum(a.t.lo(), b.t.lo(), q),
                           probabilistic_sum(a.t.hi(), b.t.hi(), q),
                           a.f.lo() * b.f.lo(), a.f.hi() * b.f.hi(), q);
}

IvqRofn otimes(const IvqRofn& a, const IvqRofn& b, int q) {
    require_operand(a, q);
    require_operand(b, q);
    return detail::settled(a.t.lo() * b.t.lo(), a.t.hi() * b.t.hi(),
                           probabilistic_sum(a.f.lo(), b.f.lo(), q),
                           probabilistic_sum(a.f.hi(), b.f.hi(), q), q);
}

IvqRofn scalar_mul(double lambda, const IvqRofn& a, int q) {
    if (!(lambda >= 0.0)) throw Error(ErrorKind::NegativeScalar, "scalar must be >= 0");
    require_operand(a, q);
    if (lambda == 0.0) return null_element();
    return detail::settled(scale_grade(a.t.lo(), lambda, q), scale_grade(a.t.hi(), lambda, q),
                           std::pow(a.f.lo(), lambda), std::pow(a.f.hi(), lambda), q);
}

IvqRofn power(const IvqRofn& a, double lambda, int q) {
    if (!(lambda >= 0.0)) throw Error(ErrorKind::NegativeScalar, "exponent must be >= 0");
    require_operand(a, q);
    if (lambda == 0.0) return unit_element();
    return detail::settled(std::pow(a.t.lo(), lambda), std::pow(a.t.hi(), lambda),
                           scale_grade(a.f.lo(), lambda, q), scale_grade(a.f.hi(), lambda, q), q);
}

IvqRofn complement(const IvqRofn& a) { return IvqRofn{a.f, a.t}; }

double score(const IvqRofn& a, int q) {
    check_rung(q);
    return 0.5 * (pow_q(a.t.lo(), q) + pow_q(a.t.hi(), q) - pow_q(a.f.lo(), q) -
                  pow_q(a.f.hi(), q));
}

double paper_scale_score(const IvqRofn& a, int q) { return 2.0 * score(a, q); }

double accuracy(const IvqRofn& a, int q) {
    check_rung(q);
    return 0.5 * (pow_q(a.t.lo(), q) + pow_q(a.t.hi(), q) + pow_q(a.f.lo(), q) +
                  pow_q(a.f.hi(), q));
}

std::weak_ordering compare(const IvqRofn& a, const IvqRofn& b, int q) {
    const double sa = score(a, q);
    const double sb = score(b, q);
    if (sa < sb) return std::weak_ordering::less;
    if (sa > sb) return std::weak_ordering::greater;
    const double ha = accuracy(a, q);
    const double hb = accuracy(b, q);
    if (ha < hb) return std::weak_ordering::less;
    if (ha > hb) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
}

UnitInterval hesitancy(const IvqRofn& a, int q) {
    require_operand(a, q);
    const double lo = 1.0 - pow_q(a.t.hi(), q) - pow_q(a.f.hi(), q);
    const double hi = 1.0 - pow_q(a.t.lo(), q) - pow_q(a.f.lo(), q);
    return UnitInterval(root_q(lo, q), root_q(hi, q));
}

std::string format_fixed(double value, int precision) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(precision) << value;
    std::string s = os.str();
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

std::string to_string(const IvqRofn& a, int precision) {
    return "<[" + format_fixed(a.t.lo(), precision) + "," + format_fixed(a.t.hi(), precision) +
           "],[" + format_fixed(a.f.lo(), precision) + "," + format_fixed(a.f.hi(), precision) +
           "]>";
}

std::ostream& operator<<(std::ostream& os, const IvqRofn& a) { return os << to_string(a); }

}  // namespace ivq
