#include "qcf/cf.hpp"

#include "qcf/errors.hpp"

namespace qcf {

CFExpansion::CFExpansion(FieldSpec s, std::vector<KElement> pre, std::vector<KElement> per)
    : spec(s), preperiod(std::move(pre)), period(std::move(per)) {
    for (const auto* list : {&preperiod, &period}) {
        for (const KElement& a : *list) {
            if (a.spec() != spec) throw PreconditionError("partial quotient from a different field");
        }
    }
}

bool CFExpansion::all_integral() const {
    for (const auto* list : {&preperiod, &period}) {
        for (const KElement& a : *list) {
            if (!a.is_integral()) return false;
        }
    }
    return true;
}

const KElement& CFExpansion::at(std::size_t i) const {
    if (i < preperiod.size()) return preperiod[i];
    if (period.empty()) throw PreconditionError("index past the end of a finite continued fraction");
    return period[(i - preperiod.size()) % period.size()];
}

std::vector<KElement> CFExpansion::unrolled(std::size_t n) const {
    std::vector<KElement> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
    return out;
}

CFExpansion CFExpansion::sigma() const {
    CFExpansion out(spec);
    for (const KElement& a : preperiod) out.preperiod.push_back(a.conj());
    for (const KElement& a : period) out.period.push_back(a.conj());
    return out;
}

Mat2 Mat2::identity(FieldSpec spec) {
    return {KElement(spec, 1), KElement(spec, 0), KElement(spec, 0), KElement(spec, 1)};
}

Mat2 Mat2::digit(const KElement& a) {
    const FieldSpec& spec = a.spec();
    return {a, KElement(spec, 1), KElement(spec, 1), KElement(spec, 0)};
}

Mat2 Mat2::inverse() const {
    const KElement d = det();
    if (d.is_zero()) throw PreconditionError("singular matrix");
    const KElement inv = d.inverse();
    return {e22 * inv, -e12 * inv, -e21 * inv, e11 * inv};
}

bool Mat2::is_identity_multiple() const { return e12.is_zero() && e21.is_zero() && e11 == e22; }

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.e11 * y.e11 + x.e12 * y.e21, x.e11 * y.e12 + x.e12 * y.e22, x.e21 * y.e11 + x.e22 * y.e21,
            x.e21 * y.e12 + x.e22 * y.e22};
}

std::string Mat2::to_string() const {
    return "[[" + e11.to_string() + ", " + e12.to_string() + "], [" + e21.to_string() + ", " + e22.to_string() +
           "]]";
}

std::string PolyTriple::to_string() const {
    return "(" + a.to_string() + ")*x^2 + (" + b.to_string() + ")*x + (" + c.to_string() + ")";
}

KElement continuant(std::span<const KElement> ts, const FieldSpec& spec) {
    KElement prev(spec, 0);  // K_{-1}
    KElement cur(spec, 1);   // K_0
    for (const KElement& t : ts) {
        KElement next = t * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<QPairState> convergents(const CFExpansion& cf, std::size_t n) {
    if (!cf.is_periodic() && n >= cf.preperiod.size()) {
        throw PreconditionError("requested convergent " + std::to_string(n) + " of a finite expansion of length " +
                                std::to_string(cf.preperiod.size()));
    }
    const FieldSpec& spec = cf.spec;
    std::vector<QPairState> out;
    out.reserve(n + 1);
    // P_{-1} = 1, P_0 = a_0, Q_{-1} = 0, Q_0 = 1
    out.push_back(QPairState{cf.at(0), KElement(spec, 1), KElement(spec, 1), KElement(spec, 0), 0});
    for (std::size_t i = 1; i <= n; ++i) {
        const KElement& a = cf.at(i);
        if (a.is_zero()) {
            throw PreconditionError("zero partial quotient at index " + std::to_string(i));
        }
        const QPairState& s = out.back();
        out.push_back(QPairState{a * s.p_cur + s.p_prev, s.p_cur, a * s.q_cur + s.q_prev, s.q_cur, i});
    }
    return out;
}

Mat2 cf_matrix(std::span<const KElement> quotients, const FieldSpec& spec) {
    Mat2 m = Mat2::identity(spec);
    for (const KElement& a : quotients) m = m * Mat2::digit(a);
    return m;
}

Mat2 e_matrix(const CFExpansion& cf) {
    if (!cf.is_periodic()) throw PreconditionError("E(P) requires a nonempty period");
    const Mat2 pre = cf_matrix(cf.preperiod, cf.spec);
    return pre * cf_matrix(cf.period, cf.spec) * pre.inverse();
}

PolyTriple associated_poly(const Mat2& e) { return {e.e21, e.e22 - e.e11, -e.e12}; }

std::string to_string(NonexistenceReason r) {
    switch (r) {
        case NonexistenceReason::none: return "none";
        case NonexistenceReason::identity_multiple: return "identity_multiple";
        case NonexistenceReason::negative_discriminant: return "negative_discriminant";
        case NonexistenceReason::unit_modulus: return "unit_modulus";
        case NonexistenceReason::ineq_window: return "ineq_window";
        case NonexistenceReason::limit_at_infinity: return "limit_at_infinity";
    }
    return "unknown";
}

namespace {

/// |z| compared with 1 through the exact sign of z^2 - 1.
Sign modulus_vs_one(const KElement& z) { return sign_of(z * z - KElement(z.spec(), 1)); }
Sign modulus_vs_one(const SurdElement& z) {
    return sign_of(z * z - KElement(z.spec(), 1));
}

PeriodicEvalResult fail(PeriodicEvalResult r, NonexistenceReason why) {
    r.outcome = EvalOutcome::does_not_exist;
    r.value.reset();
    r.value_in_k.reset();
    r.reason = why;
    return r;
}

/// Step 8: a cyclic window of the period whose matrix has M21 = 0 and
/// |M22| > 1 makes the limit fail to exist.
PeriodicEvalResult check_windows(PeriodicEvalResult r, const CFExpansion& cf) {
    const std::size_t k = cf.period.size();
    std::vector<KElement> window;
    window.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        window.clear();
        for (std::size_t i = 0; i < k; ++i) window.push_back(cf.period[(j + i) % k]);
        const Mat2 m = cf_matrix(window, cf.spec);
        if (m.e21.is_zero() && modulus_vs_one(m.e22) == Sign::positive) {
            r.window = j;
            r.window_matrix = m;
            return fail(std::move(r), NonexistenceReason::ineq_window);
        }
    }
    return r;
}

}  // namespace

PeriodicEvalResult eval_periodic(const CFExpansion& cf) {
    // Step 1.
    const Mat2 e = e_matrix(cf);
    const PolyTriple f = associated_poly(e);
    const KElement disc = f.discriminant();
    PeriodicEvalResult r(e, f, disc);
    const FieldSpec& spec = cf.spec;

    // Step 2.
    if (e.is_identity_multiple()) return fail(std::move(r), NonexistenceReason::identity_multiple);

    if (e.e21.is_zero()) {
        // f is linear (or constant): one root, possibly both, at infinity.
        r.linear_branch = true;
        if (f.b.is_zero()) return fail(std::move(r), NonexistenceReason::limit_at_infinity);
        const KElement gamma = e.e12 / (e.e22 - e.e11);
        switch (modulus_vs_one(e.e22)) {
            case Sign::zero: return fail(std::move(r), NonexistenceReason::unit_modulus);
            case Sign::negative: return fail(std::move(r), NonexistenceReason::limit_at_infinity);
            case Sign::positive: break;
        }
        r.outcome = EvalOutcome::value_in_k;
        r.value_in_k = gamma;
        return check_windows(std::move(r), cf);
    }

    const KElement two_e21 = e.e21 * Rational(2);
    const KElement trace_half = (e.e11 + e.e22) * Rational(1, 2);

    // Steps 3-4, double root.
    if (disc.is_zero()) {
        r.outcome = EvalOutcome::value_in_k;
        r.value_in_k = (e.e11 - e.e22) / two_e21;
        return r;
    }
    // Negative discriminant: the two complex roots give |E21 g + E22| = 1.
    if (sign_of(disc) == Sign::negative) return fail(std::move(r), NonexistenceReason::negative_discriminant);

    if (auto root = is_square_in_k(disc)) {
        if (sign_of(*root) == Sign::negative) *root = -*root;
        // gamma takes +sqrt(disc), gamma* takes -sqrt(disc).
        const KElement gamma = (e.e11 - e.e22 + *root) / two_e21;
        const KElement gamma_star = (e.e11 - e.e22 - *root) / two_e21;
        const KElement z = trace_half + *root * Rational(1, 2);
        switch (modulus_vs_one(z)) {
            case Sign::zero: return fail(std::move(r), NonexistenceReason::unit_modulus);
            case Sign::positive: r.value_in_k = gamma; break;
            case Sign::negative: r.value_in_k = gamma_star; break;
        }
        r.outcome = EvalOutcome::value_in_k;
        return check_windows(std::move(r), cf);
    }

    const SurdElement gamma(disc, (e.e11 - e.e22) / two_e21, two_e21.inverse());
    // E21 gamma + E22 = (E11 + E22)/2 + sqrt(disc)/2
    const SurdElement z(disc, trace_half, KElement(spec, Rational(1, 2)));
    switch (modulus_vs_one(z)) {
        case Sign::zero: return fail(std::move(r), NonexistenceReason::unit_modulus);
        case Sign::positive: r.value = gamma; break;
        case Sign::negative: r.value = gamma.surd_conj(); break;
    }
    r.outcome = EvalOutcome::value;
    return check_windows(std::move(r), cf);
}

KElement eval_finite(std::span<const KElement> quotients, const FieldSpec& spec) {
    if (quotients.empty()) throw PreconditionError("empty continued fraction");
    for (const KElement& a : quotients) {
        if (a.spec() != spec) throw PreconditionError("partial quotient " + a.to_string() + " from another field");
    }
    KElement value = quotients.back();
    for (std::size_t i = quotients.size() - 1; i-- > 0;) {
        if (value.is_zero()) throw PreconditionError("finite continued fraction hits a zero denominator");
        value = quotients[i] + value.inverse();
    }
    return value;
}

}  // namespace qcf
