#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace qcf {

/// Closed real interval [lo, hi] with dyadic endpoints, backed by MPFR.
///
/// Every operation rounds the lower endpoint toward -inf and the upper one
/// toward +inf, so the result always encloses the exact real result of the
/// operation applied to any points of the operands. Results are computed at
/// the larger of the operand precisions.
class Interval {
public:
    static constexpr mpfr_prec_t kDefaultPrecision = 64;

    explicit Interval(mpfr_prec_t prec = kDefaultPrecision);
    Interval(const mpq_class& value, mpfr_prec_t prec);
    Interval(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(const Interval& other);
    Interval& operator=(Interval&& other) noexcept;
    ~Interval();

    mpfr_prec_t precision() const noexcept { return prec_; }

    mpq_class lower() const;
    mpq_class upper() const;
    double lower_double() const;
    double upper_double() const;
    mpq_class width() const;

    bool is_positive() const;   // lo > 0
    bool is_negative() const;   // hi < 0
    bool contains_zero() const { return !is_positive() && !is_negative(); }
    bool contains(const Interval& inner) const;
    bool contains(const mpq_class& x) const;
    /// True when width <= 2^(1-bits) * max(1, |lo|).
    bool meets_precision(unsigned bits) const;

    /// Floors of the endpoints, as exact integers.
    mpz_class floor_lower() const;
    mpz_class floor_upper() const;

    Interval operator-() const;
    Interval abs() const;
    Interval square() const;
    /// Square root; a negative lower endpoint is clamped to zero.
    Interval sqrt() const;
    /// Fourth root of a nonnegative interval.
    Interval root4() const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    /// Throws PreconditionError if the divisor contains zero.
    friend Interval operator/(const Interval& a, const Interval& b);

    /// Enclosure of max(x, y) over x in a, y in b.
    static Interval max(const Interval& a, const Interval& b);

    /// Midpoint rendered with the given number of significant digits.
    std::string to_decimal(int digits) const;
    /// "[lo, hi]" with 17 significant digits per endpoint.
    std::string to_string() const;

private:
    void init(mpfr_prec_t prec);

    mpfr_prec_t prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace qcf
