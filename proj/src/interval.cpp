#include "qcf/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "qcf/errors.hpp"

namespace qcf {

void Interval::init(mpfr_prec_t prec) {
    prec_ = std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN);
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
}

Interval::Interval(mpfr_prec_t prec) {
    init(prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const mpq_class& value, mpfr_prec_t prec) {
    init(prec);
    mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec) {
    init(prec);
    mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) {
    init(other.prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other) {}

Interval& Interval::operator=(const Interval& other) {
    if (this != &other) {
        if (prec_ != other.prec_) {
            mpfr_set_prec(lo_, other.prec_);
            mpfr_set_prec(hi_, other.prec_);
            prec_ = other.prec_;
        }
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
    if (this != &other) {
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
        std::swap(prec_, other.prec_);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

mpq_class Interval::lower() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), lo_);
    return q;
}

mpq_class Interval::upper() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), hi_);
    return q;
}

double Interval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

mpq_class Interval::width() const { return upper() - lower(); }

bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_) < 0; }

bool Interval::contains(const Interval& inner) const {
    return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_lessequal_p(inner.hi_, hi_);
}

bool Interval::contains(const mpq_class& x) const {
    return mpfr_cmp_q(lo_, x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, x.get_mpq_t()) >= 0;
}

bool Interval::meets_precision(unsigned bits) const {
    mpq_class scale = ::abs(lower());
    if (scale < 1) scale = 1;
    mpq_class bound = scale;
    mpz_class pow2 = 1;
    if (bits == 0) {
        bound *= 2;
    } else {
        mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), bits - 1);
        bound /= pow2;
    }
    return width() <= bound;
}

mpz_class Interval::floor_lower() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), lo_, MPFR_RNDD);
    return z;
}

mpz_class Interval::floor_upper() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDD);
    return z;
}

Interval Interval::operator-() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::abs() const {
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    Interval r(prec_);
    mpfr_set_zero(r.lo_, 1);
    if (mpfr_cmpabs(lo_, hi_) > 0) {
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    } else {
        mpfr_set(r.hi_, hi_, MPFR_RNDU);
    }
    return r;
}

Interval Interval::square() const {
    Interval a = abs();
    Interval r(prec_);
    mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sqrt() const {
    if (is_negative()) throw PreconditionError("square root of a negative interval");
    Interval r(prec_);
    if (mpfr_sgn(lo_) <= 0) {
        mpfr_set_zero(r.lo_, 1);
    } else {
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    }
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::root4() const { return sqrt().sqrt(); }

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    const mpfr_prec_t prec = std::max(a.prec_, b.prec_);
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    const mpfr_srcptr xs[2] = {a.lo_, a.hi_};
    const mpfr_srcptr ys[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : xs) {
        for (auto y : ys) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw PreconditionError("interval division by an interval containing zero");
    const mpfr_prec_t prec = std::max(a.prec_, b.prec_);
    Interval inv(prec);
    mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
    return a * inv;
}

Interval Interval::max(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_));
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

namespace {

std::string format_mpfr(mpfr_srcptr x, int digits) {
    const int n = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, x);
    std::vector<char> buf(static_cast<std::size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, x);
    return std::string(buf.data());
}

}  // namespace

std::string Interval::to_decimal(int digits) const {
    mpfr_t mid;
    mpfr_init2(mid, prec_ + 2);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    std::string s = format_mpfr(mid, digits);
    mpfr_clear(mid);
    return s;
}

std::string Interval::to_string() const {
    return "[" + format_mpfr(lo_, 17) + ", " + format_mpfr(hi_, 17) + "]";
}

}  // namespace qcf
