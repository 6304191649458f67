#include "qcf/surd.hpp"

#include "qcf/errors.hpp"

namespace qcf {

namespace {

void validate_radicand(const KElement& delta) {
    if (sign_of(delta) != Sign::positive) {
        throw PreconditionError("radicand " + delta.to_string() + " is not positive");
    }
    if (is_square_in_k(delta)) {
        throw PreconditionError("radicand " + delta.to_string() + " is a square in K");
    }
}

template <typename Eval>
Sign refine_sign(Eval&& eval) {
    for (mpfr_prec_t prec = RefinementPolicy::kInitialBits; prec <= RefinementPolicy::kMaxBits; prec *= 2) {
        const Interval iv = eval(prec);
        if (iv.is_positive()) return Sign::positive;
        if (iv.is_negative()) return Sign::negative;
    }
    throw InternalError("sign refinement exceeded the precision cap on a nonzero value");
}

}  // namespace

SurdElement::SurdElement(KElement delta, KElement x, KElement y)
    : delta_(std::move(delta)), x_(std::move(x)), y_(std::move(y)) {
    if (delta_.spec() != x_.spec() || delta_.spec() != y_.spec()) {
        throw PreconditionError("surd components from different fields");
    }
    validate_radicand(delta_);
}

SurdElement SurdElement::from_k(const KElement& delta, const KElement& x) {
    return SurdElement(delta, x, KElement(x.spec()), Unchecked{});
}

void SurdElement::require_same_family(const SurdElement& o) const {
    if (delta_ != o.delta_) {
        throw PreconditionError("mixed radicands: " + delta_.to_string() + " vs " + o.delta_.to_string());
    }
}

SurdElement& SurdElement::operator+=(const SurdElement& o) {
    require_same_family(o);
    x_ += o.x_;
    y_ += o.y_;
    return *this;
}

SurdElement& SurdElement::operator-=(const SurdElement& o) {
    require_same_family(o);
    x_ -= o.x_;
    y_ -= o.y_;
    return *this;
}

SurdElement& SurdElement::operator*=(const SurdElement& o) {
    require_same_family(o);
    KElement nx = x_ * o.x_ + y_ * o.y_ * delta_;
    KElement ny = x_ * o.y_ + y_ * o.x_;
    x_ = std::move(nx);
    y_ = std::move(ny);
    return *this;
}

SurdElement& SurdElement::operator/=(const SurdElement& o) {
    require_same_family(o);
    if (o.is_zero()) throw PreconditionError("division by zero in K(sqrt(delta))");
    // u / v = u * conj(v) / N(v); N(v) != 0 because delta is not a square.
    const KElement n = o.relative_norm();
    *this *= o.surd_conj();
    x_ /= n;
    y_ /= n;
    return *this;
}

SurdElement SurdElement::operator/(const KElement& k) const {
    if (k.is_zero()) throw PreconditionError("division by zero in K(sqrt(delta))");
    const KElement inv = k.inverse();
    return SurdElement(delta_, x_ * inv, y_ * inv, Unchecked{});
}

std::optional<SurdElement> SurdElement::rebase(const KElement& target) const {
    if (target == delta_) return *this;
    auto mu = is_square_in_k(target / delta_);
    if (!mu) return std::nullopt;
    // sqrt(target) = |mu| sqrt(delta)
    if (sign_of(*mu) == Sign::negative) mu = -*mu;
    return SurdElement(target, x_, y_ / *mu, Unchecked{});
}

Interval SurdElement::evaluate(mpfr_prec_t prec, bool conj_radical) const {
    Interval r = x_.evaluate(prec);
    if (y_.is_zero()) return r;
    Interval root = delta_.evaluate(prec).sqrt();
    Interval term = y_.evaluate(prec) * root;
    return conj_radical ? r - term : r + term;
}

std::string SurdElement::to_string() const {
    return "(" + x_.to_string() + ") + (" + y_.to_string() + ")*sqrt(" + delta_.to_string() + ")";
}

SurdElement surd_ops(const SurdElement& u, const SurdElement& v, ArithOp op) {
    switch (op) {
        case ArithOp::add: return u + v;
        case ArithOp::sub: return u - v;
        case ArithOp::mul: return u * v;
        case ArithOp::div: return u / v;
    }
    throw PreconditionError("unknown arithmetic operation");
}

Sign sign_of(const SurdElement& u) {
    if (u.y().is_zero()) return sign_of(u.x());
    if (u.x().is_zero()) return sign_of(u.y());
    // x + y sqrt(delta) = 0 forces x^2 = y^2 delta with opposite signs; since
    // delta is not a square in K that only happens for x = y = 0.
    return refine_sign([&](mpfr_prec_t prec) { return u.evaluate(prec); });
}

MixedSurd::MixedSurd(KElement delta1, KElement delta2, KElement r0, KElement r1, KElement r2)
    : delta1_(std::move(delta1)),
      delta2_(std::move(delta2)),
      r0_(std::move(r0)),
      r1_(std::move(r1)),
      r2_(std::move(r2)) {
    validate_radicand(delta1_);
    validate_radicand(delta2_);
}

MixedSurd MixedSurd::sum(const SurdElement& u, const SurdElement& v) {
    return MixedSurd(u.delta(), v.delta(), u.x() + v.x(), u.y(), v.y());
}

void MixedSurd::require_same_family(const MixedSurd& o) const {
    if (delta1_ != o.delta1_ || delta2_ != o.delta2_) throw PreconditionError("mixed radicand families differ");
}

MixedSurd MixedSurd::operator+(const KElement& k) const {
    MixedSurd m = *this;
    m.r0_ += k;
    return m;
}

MixedSurd MixedSurd::operator-(const KElement& k) const {
    MixedSurd m = *this;
    m.r0_ -= k;
    return m;
}

MixedSurd MixedSurd::operator*(const KElement& k) const {
    MixedSurd m = *this;
    m.r0_ *= k;
    m.r1_ *= k;
    m.r2_ *= k;
    return m;
}

MixedSurd MixedSurd::operator/(const KElement& k) const {
    if (k.is_zero()) throw PreconditionError("division by zero");
    return *this * k.inverse();
}

MixedSurd MixedSurd::operator+(const MixedSurd& o) const {
    require_same_family(o);
    MixedSurd m = *this;
    m.r0_ += o.r0_;
    m.r1_ += o.r1_;
    m.r2_ += o.r2_;
    return m;
}

MixedSurd MixedSurd::operator-(const MixedSurd& o) const {
    require_same_family(o);
    MixedSurd m = *this;
    m.r0_ -= o.r0_;
    m.r1_ -= o.r1_;
    m.r2_ -= o.r2_;
    return m;
}

bool MixedSurd::is_zero() const {
    // r0 + r1 s1 = -r2 s2. Squaring and splitting along {1, s1} (s1 not in K):
    //   r0^2 + r1^2 delta1 = r2^2 delta2  and  r0 r1 = 0,
    // which fixes the value up to sign; the sign check decides.
    if (!(r0_ * r1_).is_zero()) return false;
    if (r0_ * r0_ + r1_ * r1_ * delta1_ != r2_ * r2_ * delta2_) return false;
    const SurdElement left = SurdElement::unchecked(delta1_, r0_, r1_);
    const Sign sl = sign_of(left);
    const Sign sr = sign_of(r2_);
    return to_int(sl) == -to_int(sr);
}

Interval MixedSurd::evaluate(mpfr_prec_t prec) const {
    Interval r = r0_.evaluate(prec);
    if (!r1_.is_zero()) r = r + r1_.evaluate(prec) * delta1_.evaluate(prec).sqrt();
    if (!r2_.is_zero()) r = r + r2_.evaluate(prec) * delta2_.evaluate(prec).sqrt();
    return r;
}

std::string MixedSurd::to_string() const {
    return "(" + r0_.to_string() + ") + (" + r1_.to_string() + ")*sqrt(" + delta1_.to_string() + ") + (" +
           r2_.to_string() + ")*sqrt(" + delta2_.to_string() + ")";
}

Sign sign_of(const MixedSurd& m) {
    if (m.is_zero()) return Sign::zero;
    return refine_sign([&](mpfr_prec_t prec) { return m.evaluate(prec); });
}

FloorCeil floor_ceil(const MixedSurd& m) {
    const Rational quarter(1, 4);
    for (mpfr_prec_t prec = RefinementPolicy::kInitialBits; prec <= RefinementPolicy::kMaxBits; prec *= 2) {
        const Interval iv = m.evaluate(prec);
        if (iv.width() >= quarter) continue;
        // Nearest integer to the midpoint is the only one the value can equal.
        const Rational mid = (iv.lower() + iv.upper()) / 2;
        Integer nearest;
        mpz_fdiv_q(nearest.get_mpz_t(), Rational(mid + Rational(1, 2)).get_num_mpz_t(),
                   Rational(mid + Rational(1, 2)).get_den_mpz_t());
        const KElement as_k(m.r0().spec(), Rational(nearest));
        if ((m - as_k).is_zero()) return {nearest, nearest};
        for (mpfr_prec_t p = prec; p <= RefinementPolicy::kMaxBits; p *= 2) {
            const Interval fine = m.evaluate(p);
            if (!fine.contains(Rational(nearest)) && fine.floor_lower() == fine.floor_upper()) {
                const Integer f = fine.floor_lower();
                return {f, f + 1};
            }
        }
        break;
    }
    throw InternalError("floor refinement exceeded the precision cap");
}

}  // namespace qcf
