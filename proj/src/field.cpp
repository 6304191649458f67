#include "qcf/field.hpp"

#include <cstdlib>
#include <string>

#include "qcf/errors.hpp"

namespace qcf {

FieldSpec::FieldSpec(std::int64_t d) : d_(d) {
    if (d <= 1) throw PreconditionError("field discriminant D must be > 1, got " + std::to_string(d));
    if (!is_squarefree(d)) throw PreconditionError("D = " + std::to_string(d) + " is not squarefree");
}

bool FieldSpec::is_squarefree(std::int64_t d) {
    if (d <= 0) return false;
    for (std::int64_t p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

KElement::KElement(FieldSpec spec, Rational a, Rational b) : spec_(spec), a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
}

bool KElement::is_integral() const {
    return a_.get_den() == 1 && b_.get_den() == 1;
}

KElement KElement::conj() const {
    // sigma(w) = trace - w
    return KElement(spec_, a_ + b_ * spec_.trace(), -b_);
}

Rational KElement::norm() const {
    // (a + b w)(a + b t - b w) = a^2 + a b t - b^2 n
    const Rational t = spec_.trace();
    const Rational n = spec_.norm_term();
    return a_ * a_ + a_ * b_ * t - b_ * b_ * n;
}

Rational KElement::trace() const { return 2 * a_ + b_ * spec_.trace(); }

KElement KElement::inverse() const {
    const Rational n = norm();
    if (sgn(n) == 0) throw PreconditionError("division by zero in K");
    KElement c = conj();
    return KElement(spec_, c.a_ / n, c.b_ / n);
}

Rational KElement::sqrt_d_rational_part() const {
    return spec_.half_integral_basis() ? Rational(a_ + b_ / 2) : a_;
}

Rational KElement::sqrt_d_coefficient() const {
    return spec_.half_integral_basis() ? Rational(b_ / 2) : b_;
}

namespace {

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
    if (a != b) {
        throw PreconditionError("mismatched fields: D = " + std::to_string(a.d()) + " vs D = " +
                                std::to_string(b.d()));
    }
}

}  // namespace

KElement& KElement::operator+=(const KElement& o) {
    require_same_field(spec_, o.spec_);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

KElement& KElement::operator-=(const KElement& o) {
    require_same_field(spec_, o.spec_);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

KElement& KElement::operator*=(const KElement& o) {
    require_same_field(spec_, o.spec_);
    // (a + b w)(c + d w) = ac + bd n + (ad + bc + bd t) w
    const Rational bd = b_ * o.b_;
    Rational na = a_ * o.a_ + bd * spec_.norm_term();
    Rational nb = a_ * o.b_ + b_ * o.a_ + bd * spec_.trace();
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

KElement& KElement::operator/=(const KElement& o) {
    require_same_field(spec_, o.spec_);
    return *this *= o.inverse();
}

int KElement::compare_repr(const KElement& x, const KElement& y) {
    if (x.spec_.d() != y.spec_.d()) return x.spec_.d() < y.spec_.d() ? -1 : 1;
    if (int c = cmp(x.a_, y.a_); c != 0) return c < 0 ? -1 : 1;
    if (int c = cmp(x.b_, y.b_); c != 0) return c < 0 ? -1 : 1;
    return 0;
}

Interval sqrt_d_interval(std::int64_t d, mpfr_prec_t prec) {
    return Interval(Rational(static_cast<long>(d)), prec).sqrt();
}

Interval KElement::evaluate(mpfr_prec_t prec, RealEmbedding which) const {
    const Rational p = sqrt_d_rational_part();
    Rational q = sqrt_d_coefficient();
    if (which == RealEmbedding::sigma) q = -q;
    if (sgn(q) == 0) return Interval(p, prec);
    return Interval(p, prec) + Interval(q, prec) * sqrt_d_interval(spec_.d(), prec);
}

std::string KElement::to_string() const {
    if (sgn(b_) == 0) return a_.get_str();
    std::string out;
    if (sgn(a_) != 0) out = a_.get_str();
    const Rational mag = ::abs(b_);
    if (sgn(b_) < 0) {
        out += "-";
    } else if (!out.empty()) {
        out += "+";
    }
    // a unit coefficient prints as a bare w
    return mag == 1 ? out + "w" : out + mag.get_str() + "*w";
}

KElement k_ops(const KElement& x, const KElement& y, ArithOp op) {
    switch (op) {
        case ArithOp::add: return x + y;
        case ArithOp::sub: return x - y;
        case ArithOp::mul: return x * y;
        case ArithOp::div: return x / y;
    }
    throw PreconditionError("unknown arithmetic operation");
}

Interval k_embed(const KElement& x, RealEmbedding which, unsigned precision_bits) {
    if (precision_bits < 1) throw PreconditionError("precision_bits must be >= 1");
    // The result is the cell of the dyadic grid of spacing 2^(e - bits - 4)
    // containing x, where 2^e bounds max(1, |x|). e depends only on x, so the
    // grid at bits + k refines the grid at bits and the intervals nest.
    const Interval rough = x.evaluate(64, which).abs();
    long e = 0;
    for (Rational bound = 1; bound < rough.upper(); bound *= 2) ++e;
    const long shift = static_cast<long>(precision_bits) + 4 - e;
    Rational scale = 1;
    if (shift >= 0) {
        mpz_mul_2exp(scale.get_num_mpz_t(), scale.get_num_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    } else {
        mpz_mul_2exp(scale.get_den_mpz_t(), scale.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    }

    // Exact floor of x * scale: estimate, then correct with exact signs.
    const KElement scaled = x * scale;
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits) + 64 + std::abs(e);
    Integer c = scaled.evaluate(prec, which).floor_lower();
    while (sign_of(scaled - Rational(c), which) == Sign::negative) --c;
    while (sign_of(scaled - Rational(c + 1), which) != Sign::negative) ++c;

    const Rational lo = Rational(c) / scale;
    if (sign_of(scaled - Rational(c), which) == Sign::zero) return Interval(lo, lo, prec);
    return Interval(lo, Rational(c + 1) / scale, prec);
}

Sign sign_of(const KElement& x, RealEmbedding which) {
    // value = p + q sqrt(D), with D not a square; compare p^2 against q^2 D.
    const Rational p = x.sqrt_d_rational_part();
    Rational q = x.sqrt_d_coefficient();
    if (which == RealEmbedding::sigma) q = -q;
    const int sp = sgn(p);
    const int sq = sgn(q);
    if (sq == 0) return sign_from_int(sp);
    if (sp == 0 || sp == sq) return sign_from_int(sq);
    return cmp(p * p, q * q * x.spec().d()) > 0 ? sign_from_int(sp) : sign_from_int(sq);
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
        return std::nullopt;
    }
    return Rational(sqrt(q.get_num()), sqrt(q.get_den()));
}

std::optional<KElement> is_square_in_k(const KElement& x) {
    const FieldSpec& spec = x.spec();
    const Rational p = x.sqrt_d_rational_part();
    const Rational q = x.sqrt_d_coefficient();
    const Rational d = static_cast<long>(spec.d());

    // Candidate root c + e sqrt(D): c^2 + D e^2 = p and 2 c e = q.
    auto from_power_basis = [&](const Rational& c, const Rational& e) {
        if (spec.half_integral_basis()) {
            // sqrt(D) = 2 w - 1
            return KElement(spec, c - e, 2 * e);
        }
        return KElement(spec, c, e);
    };

    if (sgn(q) == 0) {
        if (auto c = rational_sqrt(p)) return from_power_basis(*c, 0);
        if (auto e = rational_sqrt(p / d)) return from_power_basis(0, *e);
        return std::nullopt;
    }
    const auto n = rational_sqrt(p * p - d * q * q);
    if (!n) return std::nullopt;
    for (const Rational& s : {*n, Rational(-*n)}) {
        const Rational c2 = (p + s) / 2;
        if (sgn(c2) <= 0) continue;
        if (auto c = rational_sqrt(c2)) {
            const Rational e = q / (2 * *c);
            KElement root = from_power_basis(*c, e);
            if (root * root == x) return root;
        }
    }
    return std::nullopt;
}

}  // namespace qcf
