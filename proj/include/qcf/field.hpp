#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "qcf/interval.hpp"

namespace qcf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Real quadratic field K = Q(sqrt(D)) together with its integral basis
/// {1, w}: w = (1 + sqrt(D))/2 when D = 1 (mod 4), w = sqrt(D) otherwise, so
/// that the ring of integers is exactly Z + Z w.
class FieldSpec {
public:
    /// Throws PreconditionError unless d > 1 and d is squarefree.
    explicit FieldSpec(std::int64_t d);

    std::int64_t d() const noexcept { return d_; }
    bool half_integral_basis() const noexcept { return d_ % 4 == 1; }

    /// w satisfies w^2 = trace * w + norm_term.
    std::int64_t trace() const noexcept { return half_integral_basis() ? 1 : 0; }
    std::int64_t norm_term() const noexcept { return half_integral_basis() ? (d_ - 1) / 4 : d_; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept { return a.d_ == b.d_; }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) noexcept { return a.d_ != b.d_; }

    static bool is_squarefree(std::int64_t d);

private:
    std::int64_t d_;
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign sign_from_int(int s) { return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero); }

enum class RealEmbedding { identity, sigma };

/// Exact element a + b*w of K.
class KElement {
public:
    explicit KElement(FieldSpec spec) : spec_(spec) {}
    KElement(FieldSpec spec, Rational a, Rational b = 0);

    const FieldSpec& spec() const noexcept { return spec_; }
    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }

    /// The basis element w of the field.
    static KElement omega(FieldSpec spec) { return KElement(spec, 0, 1); }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    /// Membership in O_K = Z + Z w.
    bool is_integral() const;

    KElement conj() const;
    /// N(x) = x * conj(x), a rational number.
    Rational norm() const;
    Rational trace() const;
    KElement inverse() const;

    /// Components in the power basis: value = p + q*sqrt(D).
    Rational sqrt_d_rational_part() const;
    Rational sqrt_d_coefficient() const;

    KElement& operator+=(const KElement& o);
    KElement& operator-=(const KElement& o);
    KElement& operator*=(const KElement& o);
    KElement& operator/=(const KElement& o);

    friend KElement operator+(KElement x, const KElement& y) { return x += y; }
    friend KElement operator-(KElement x, const KElement& y) { return x -= y; }
    friend KElement operator*(KElement x, const KElement& y) { return x *= y; }
    friend KElement operator/(KElement x, const KElement& y) { return x /= y; }
    KElement operator-() const { return KElement(spec_, -a_, -b_); }

    KElement operator+(const Rational& r) const { return KElement(spec_, a_ + r, b_); }
    KElement operator-(const Rational& r) const { return KElement(spec_, a_ - r, b_); }
    KElement operator*(const Rational& r) const { return KElement(spec_, a_ * r, b_ * r); }

    friend bool operator==(const KElement& x, const KElement& y) {
        return x.spec_ == y.spec_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const KElement& x, const KElement& y) { return !(x == y); }

    /// Total order on representations (not on real values); for map keys.
    static int compare_repr(const KElement& x, const KElement& y);

    /// Enclosure of the chosen real embedding, computed at working
    /// precision `prec` (no width guarantee; see k_embed).
    Interval evaluate(mpfr_prec_t prec, RealEmbedding which = RealEmbedding::identity) const;

    std::string to_string() const;

private:
    FieldSpec spec_;
    Rational a_;
    Rational b_;
};

/// op in {add, sub, mul, div}; throws PreconditionError on mismatched fields
/// or a zero divisor.
enum class ArithOp { add, sub, mul, div };
KElement k_ops(const KElement& x, const KElement& y, ArithOp op);

inline KElement k_conj(const KElement& x) { return x.conj(); }

/// Interval for the chosen embedding of x with width at most
/// 2^(1-precision_bits) * max(1, |lo|).
Interval k_embed(const KElement& x, RealEmbedding which, unsigned precision_bits);

/// Exact sign of x under the identity embedding (sigma when requested).
Sign sign_of(const KElement& x, RealEmbedding which = RealEmbedding::identity);

/// A square root of x in K, when one exists.
std::optional<KElement> is_square_in_k(const KElement& x);

/// Square root of a rational, when it is rational.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Interval enclosing sqrt(D) at working precision prec.
Interval sqrt_d_interval(std::int64_t d, mpfr_prec_t prec);

}  // namespace qcf
