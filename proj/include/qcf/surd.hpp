#pragma once

#include <optional>
#include <string>

#include "qcf/field.hpp"

namespace qcf {

/// Element x + y*sqrt(delta) of L = K(sqrt(delta)), with sqrt(delta) the
/// positive real root. delta is fixed per family: operands of arithmetic
/// must share it, and equality is then componentwise.
class SurdElement {
public:
    /// Validates delta > 0 and delta not a square in K.
    SurdElement(KElement delta, KElement x, KElement y);

    /// Embeds a K-element into the family of `delta` (no validation of delta).
    static SurdElement from_k(const KElement& delta, const KElement& x);
    /// Skips the radicand validation; for callers that already established
    /// delta > 0 and non-square.
    static SurdElement unchecked(KElement delta, KElement x, KElement y) {
        return SurdElement(std::move(delta), std::move(x), std::move(y), Unchecked{});
    }

    const FieldSpec& spec() const noexcept { return delta_.spec(); }
    const KElement& delta() const noexcept { return delta_; }
    const KElement& x() const noexcept { return x_; }
    const KElement& y() const noexcept { return y_; }

    bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
    /// Irrational over K iff y != 0.
    bool in_k() const { return y_.is_zero(); }

    /// x - y sqrt(delta): the image under sqrt(delta) -> -sqrt(delta).
    SurdElement surd_conj() const { return SurdElement(delta_, x_, -y_, Unchecked{}); }
    /// Relative norm (x^2 - y^2 delta) in K.
    KElement relative_norm() const { return x_ * x_ - y_ * y_ * delta_; }

    SurdElement& operator+=(const SurdElement& o);
    SurdElement& operator-=(const SurdElement& o);
    SurdElement& operator*=(const SurdElement& o);
    SurdElement& operator/=(const SurdElement& o);

    friend SurdElement operator+(SurdElement u, const SurdElement& v) { return u += v; }
    friend SurdElement operator-(SurdElement u, const SurdElement& v) { return u -= v; }
    friend SurdElement operator*(SurdElement u, const SurdElement& v) { return u *= v; }
    friend SurdElement operator/(SurdElement u, const SurdElement& v) { return u /= v; }
    SurdElement operator-() const { return SurdElement(delta_, -x_, -y_, Unchecked{}); }

    SurdElement operator+(const KElement& k) const { return SurdElement(delta_, x_ + k, y_, Unchecked{}); }
    SurdElement operator-(const KElement& k) const { return SurdElement(delta_, x_ - k, y_, Unchecked{}); }
    SurdElement operator*(const KElement& k) const { return SurdElement(delta_, x_ * k, y_ * k, Unchecked{}); }
    SurdElement operator/(const KElement& k) const;

    friend bool operator==(const SurdElement& u, const SurdElement& v) {
        return u.delta_ == v.delta_ && u.x_ == v.x_ && u.y_ == v.y_;
    }
    friend bool operator!=(const SurdElement& u, const SurdElement& v) { return !(u == v); }

    /// Re-expresses the value over another radicand `target` whose square root
    /// is a K-multiple of sqrt(delta); empty when the two families differ.
    std::optional<SurdElement> rebase(const KElement& target) const;

    /// Enclosure at working precision prec. With `conj_radical`, evaluates
    /// x - y sqrt(delta) instead.
    Interval evaluate(mpfr_prec_t prec, bool conj_radical = false) const;

    std::string to_string() const;

private:
    struct Unchecked {};
    SurdElement(KElement delta, KElement x, KElement y, Unchecked)
        : delta_(std::move(delta)), x_(std::move(x)), y_(std::move(y)) {}
    void require_same_family(const SurdElement& o) const;

    KElement delta_;
    KElement x_;
    KElement y_;
};

SurdElement surd_ops(const SurdElement& u, const SurdElement& v, ArithOp op);

/// Exact sign of u under the identity embedding: symbolic zero test, then
/// interval refinement from 64 bits, doubling up to 2^16 bits.
Sign sign_of(const SurdElement& u);

/// Value r0 + r1*sqrt(delta1) + r2*sqrt(delta2) with r_i in K; the sum of an
/// element of K(sqrt(delta1)) and one of K(sqrt(delta2)). Used for the lattice
/// coordinates and distances, which mix a quartic number and its conjugate.
class MixedSurd {
public:
    MixedSurd(KElement delta1, KElement delta2, KElement r0, KElement r1, KElement r2);
    /// u + v with u over delta1 and v over delta2.
    static MixedSurd sum(const SurdElement& u, const SurdElement& v);

    const KElement& delta1() const noexcept { return delta1_; }
    const KElement& delta2() const noexcept { return delta2_; }
    const KElement& r0() const noexcept { return r0_; }
    const KElement& r1() const noexcept { return r1_; }
    const KElement& r2() const noexcept { return r2_; }

    MixedSurd operator+(const KElement& k) const;
    MixedSurd operator-(const KElement& k) const;
    MixedSurd operator*(const KElement& k) const;
    MixedSurd operator/(const KElement& k) const;
    MixedSurd operator-(const MixedSurd& o) const;
    MixedSurd operator+(const MixedSurd& o) const;

    /// Exact zero test (requires delta1 non-square in K).
    bool is_zero() const;
    Interval evaluate(mpfr_prec_t prec) const;
    std::string to_string() const;

private:
    void require_same_family(const MixedSurd& o) const;

    KElement delta1_, delta2_;
    KElement r0_, r1_, r2_;
};

Sign sign_of(const MixedSurd& m);

/// floor and ceil of an exact value; equal when the value is an integer.
struct FloorCeil {
    Integer floor;
    Integer ceil;
};
FloorCeil floor_ceil(const MixedSurd& m);

/// Precision schedule shared by every refinement loop.
struct RefinementPolicy {
    static constexpr mpfr_prec_t kInitialBits = 64;
    static constexpr mpfr_prec_t kMaxBits = 1 << 16;
};

}  // namespace qcf
