#include "qcf/quartic.hpp"

#include <numeric>

namespace qcf {

QuadraticPolyK::QuadraticPolyK(KElement a, KElement b, KElement c) : t_{std::move(a), std::move(b), std::move(c)} {
    if (t_.a.spec() != t_.b.spec() || t_.a.spec() != t_.c.spec()) {
        throw PreconditionError("polynomial coefficients from different fields");
    }
    if (t_.a.is_zero()) throw PreconditionError("leading coefficient A must be nonzero");
    if (!t_.a.is_integral() || !t_.b.is_integral() || !t_.c.is_integral()) {
        throw PreconditionError("coefficients must lie in O_K: " + t_.to_string());
    }
}

void QuadraticPolyK::require_quartic() const {
    const KElement delta = discriminant();
    if (sign_of(delta) != Sign::positive) {
        throw PreconditionError("discriminant " + delta.to_string() + " is not positive; no real root to track");
    }
    if (is_square_in_k(delta)) {
        throw DegenerateSeedError("discriminant " + delta.to_string() +
                                  " is a square in K: the root is quadratic, use a classical continued fraction");
    }
}

SurdElement QuotientState::value() const {
    const KElement two_a = poly_.a * Rational(2);
    const KElement inv = two_a.inverse();
    return SurdElement::unchecked(delta_, -poly_.b * inv, inv * Rational(branch_));
}

StateKey QuotientState::key() const {
    if (sign_of(poly_.a) == Sign::negative) return StateKey{-poly_.a, -poly_.b, -branch_};
    return StateKey{poly_.a, poly_.b, branch_};
}

QuotientState make_state(const QuadraticPolyK& poly, int branch) {
    if (branch != 1 && branch != -1) throw PreconditionError("branch must be +1 or -1");
    poly.require_quartic();
    return QuotientState(poly.triple(), branch, poly.discriminant());
}

QuotientState step_state(const QuotientState& s, const KElement& a) {
    if (!a.is_integral()) throw PreconditionError("partial quotient " + a.to_string() + " is not in O_K");
    const PolyTriple& f = s.poly();
    // x = y + a:  A y^2 + (2 A a + B) y + f(a);  then y = 1/z swaps A and C.
    KElement shifted_b = f.a * a * Rational(2) + f.b;
    KElement shifted_c = f.evaluate(a);
    if (shifted_c.is_zero()) {
        throw InternalError("complete quotient equals the partial quotient " + a.to_string() +
                            "; the seed root is not quartic");
    }
    QuotientState next(PolyTriple{std::move(shifted_c), std::move(shifted_b), f.a}, -s.branch(), s.delta());
    if (next.poly().discriminant() != s.delta()) {
        throw InternalError("discriminant not conserved at step with a = " + a.to_string());
    }
    return next;
}

PolyTriple triple_recursion(const QuadraticPolyK& seed, const QPairState& qp) {
    const KElement& A = seed.a();
    const KElement& B = seed.b();
    const KElement& C = seed.c();
    const KElement& p = qp.p_cur;
    const KElement& q = qp.q_cur;
    const KElement& pp = qp.p_prev;
    const KElement& qq = qp.q_prev;
    return PolyTriple{
        A * p * p + B * p * q + C * q * q,
        A * p * pp * Rational(2) + B * (p * qq + pp * q) + C * q * qq * Rational(2),
        A * pp * pp + B * pp * qq + C * qq * qq,
    };
}

std::array<Interval, 4> embedding_magnitudes(const SurdElement& u, mpfr_prec_t prec) {
    const Interval id = u.evaluate(prec).abs();
    const Interval tau1 = u.evaluate(prec, true).abs();
    const KElement sx = u.x().conj();
    const KElement sy = u.y().conj();
    const KElement sdelta = u.delta().conj();
    if (sign_of(sdelta) == Sign::positive) {
        const Interval root = sdelta.evaluate(prec).sqrt();
        const Interval base = sx.evaluate(prec);
        const Interval term = sy.evaluate(prec) * root;
        return {id, tau1, (base + term).abs(), (base - term).abs()};
    }
    // sigma(x) + sigma(y) i sqrt(|sigma(delta)|)
    const Interval modulus = (sx * sx - sy * sy * sdelta).evaluate(prec).sqrt();
    return {id, tau1, modulus, modulus};
}

Interval weil_height_pow4(const QuotientState& s, mpfr_prec_t prec) {
    const Interval one(Rational(1), prec);
    Interval product(abs(s.poly().a.norm()), prec);
    for (const Interval& m : embedding_magnitudes(s.value(), prec)) product = product * Interval::max(one, m);
    return product;
}

Interval weil_height(const QuotientState& s, unsigned precision_bits) {
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits) + 16;
    for (;;) {
        Interval h = weil_height_pow4(s, prec).root4();
        if (h.meets_precision(precision_bits) || prec > RefinementPolicy::kMaxBits) return h;
        prec *= 2;
    }
}

Interval weil_height(const KElement& x, unsigned precision_bits) {
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits) + 16;
    if (x.is_rational()) {
        const Rational& q = x.a();
        Integer top = abs(q.get_num());
        if (top < q.get_den()) top = q.get_den();
        return Interval(Rational(top), prec);
    }
    // x^2 - tr x + N, cleared to a primitive integer polynomial; its leading
    // coefficient is the lcm of the denominators.
    const Rational tr = x.trace();
    const Rational nm = x.norm();
    Integer lead;
    mpz_lcm(lead.get_mpz_t(), tr.get_den_mpz_t(), nm.get_den_mpz_t());
    for (;;) {
        const Interval one(Rational(1), prec);
        Interval h2 = Interval(Rational(lead), prec) *
                      Interval::max(one, x.evaluate(prec).abs()) *
                      Interval::max(one, x.evaluate(prec, RealEmbedding::sigma).abs());
        Interval h = h2.sqrt();
        if (h.meets_precision(precision_bits) || prec > RefinementPolicy::kMaxBits) return h;
        prec *= 2;
    }
}

std::array<Integer, 5> integer_minimal_poly(const QuotientState& s) {
    const PolyTriple& f = s.poly();
    const KElement sa = f.a.conj(), sb = f.b.conj(), sc = f.c.conj();
    const std::array<KElement, 5> coeffs = {
        f.a * sa,
        f.a * sb + f.b * sa,
        f.a * sc + f.b * sb + f.c * sa,
        f.b * sc + f.c * sb,
        f.c * sc,
    };
    std::array<Integer, 5> out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const KElement& k = coeffs[i];
        if (!k.is_rational() || k.a().get_den() != 1) {
            throw InternalError("f * sigma(f) has a coefficient outside Z: " + k.to_string());
        }
        out[i] = k.a().get_num();
    }
    return out;
}

Integer naive_height(const QuotientState& s) {
    Integer best = 0;
    for (const Integer& c : integer_minimal_poly(s)) {
        if (abs(c) > best) best = abs(c);
    }
    return best;
}

std::vector<TrajectoryRow> diagnostics(const QuadraticPolyK& seed, int branch, std::span<const KElement> quotients,
                                       unsigned precision_bits, int conj_branch) {
    std::vector<TrajectoryRow> rows;
    if (quotients.empty()) return rows;
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits) + 16;
    const FieldSpec& spec = seed.spec();

    QuotientState state = make_state(seed, branch);
    const SurdElement xi = state.value();
    const KElement delta = state.delta();
    const KElement sdelta = delta.conj();

    std::optional<SurdElement> xi_prime;
    if (sign_of(sdelta) == Sign::positive) {
        xi_prime = make_state(seed.sigma(), conj_branch).value();
    }

    CFExpansion cf(spec, std::vector<KElement>(quotients.begin(), quotients.end()), {});
    const std::vector<QPairState> qps = convergents(cf, quotients.size() - 1);

    // S_{-1} = xi Q_{-1} - P_{-1} = -1
    std::array<Interval, 4> prev_mag;
    prev_mag.fill(Interval(Rational(1), prec));

    // S_n and Q_n shrink in some embeddings while their coordinates grow, so a
    // fixed working precision cancels away; refine until every magnitude
    // carries precision_bits relative bits.
    const auto relative_ok = [&](const Interval& iv) {
        if (iv.contains_zero()) return false;
        const Interval a = iv.abs();
        Rational tol = a.lower();
        mpq_div_2exp(tol.get_mpq_t(), tol.get_mpq_t(), precision_bits);
        return a.width() <= tol;
    };

    rows.reserve(quotients.size());
    for (std::size_t n = 0; n < quotients.size(); ++n) {
        if (n > 0) state = step_state(state, quotients[n - 1]);
        const QPairState& qp = qps[n];
        const SurdElement s_n = xi * qp.q_cur - qp.p_cur;

        std::array<Interval, 4> mag;
        Interval q_abs, q_prev_abs;
        for (mpfr_prec_t p = prec;; p *= 2) {
            mag = embedding_magnitudes(s_n, p);
            q_abs = qp.q_cur.evaluate(p).abs();
            if (n > 0) q_prev_abs = qp.q_prev.evaluate(p).abs();
            bool ok = relative_ok(q_abs) && (n == 0 || relative_ok(q_prev_abs));
            for (const Interval& m : mag) ok = ok && relative_ok(m);
            if (ok) break;
            if (p > RefinementPolicy::kMaxBits) {
                throw InternalError("trajectory row " + std::to_string(n) + " did not resolve within the refinement cap");
            }
        }

        const Interval f1 = Interval::max(mag[0], prev_mag[0]) * Interval::max(mag[1], prev_mag[1]);
        const Interval f2 = Interval::max(mag[2], prev_mag[2]) * Interval::max(mag[3], prev_mag[3]);

        std::optional<Interval> ratio;
        if (n > 0) ratio = q_abs / q_prev_abs;

        std::optional<Interval> sigma_side;
        if (xi_prime) {
            const KElement sq = qp.q_cur.conj();
            const SurdElement s_prime = *xi_prime * sq - qp.p_cur.conj();
            for (mpfr_prec_t p = prec;; p *= 2) {
                sigma_side = sq.evaluate(p).abs() * s_prime.evaluate(p).abs();
                if (relative_ok(*sigma_side) || p > RefinementPolicy::kMaxBits) break;
            }
        }

        rows.push_back(TrajectoryRow{
            n,
            state.poly(),
            qp.p_cur,
            qp.q_cur,
            mag[0],
            f1,
            f2,
            q_abs * mag[0],
            ratio,
            sigma_side,
            weil_height(state, precision_bits),
            naive_height(state),
        });
        prev_mag = mag;
    }
    return rows;
}

std::string to_string(ConjugateClass c) {
    switch (c) {
        case ConjugateClass::all_real: return "all_real";
        case ConjugateClass::complex_indeterminate: return "complex_indeterminate";
        case ConjugateClass::complex_reject: return "complex_reject";
    }
    return "unknown";
}

PreconditionReport periodicity_preconditions(const QuadraticPolyK& seed, const std::optional<KElement>& a0,
                                             const std::optional<KElement>& a1) {
    const FieldSpec& spec = seed.spec();
    const KElement sdelta = seed.discriminant().conj();
    const Sign s = sign_of(sdelta);
    PreconditionReport report{sdelta, s, ConjugateClass::all_real, false, false, std::nullopt, {}};

    if (s == Sign::negative) {
        report.even_period_required = true;
        if (sign_of(sdelta + KElement(spec, 4)) == Sign::negative) {
            report.conjugates = ConjugateClass::complex_reject;
            report.reject = true;
            report.notes.push_back("sigma(delta) = " + sdelta.to_string() +
                                   " < -4: a periodic expansion over K would need an even period, and an "
                                   "even period forces sigma(delta) >= -4, so none exists");
        } else {
            report.conjugates = ConjugateClass::complex_indeterminate;
            report.notes.push_back("-4 <= sigma(delta) < 0: any periodic expansion must have even period; "
                                   "existence is undecided");
        }
    } else if (s == Sign::zero) {
        report.notes.push_back("sigma(delta) = 0");
    }

    if (a0 && a1 && sign_of(*a1, RealEmbedding::sigma) == Sign::positive) {
        const KElement lo = a0->conj();
        const KElement hi = lo + a1->conj().inverse();
        StartWindowCheck check{lo, hi, 0, false};
        if (s == Sign::positive) {
            const QuadraticPolyK sseed = seed.sigma();
            for (int br : {1, -1}) {
                const SurdElement root = make_state(sseed, br).value();
                if (sign_of(root - lo) == Sign::positive && sign_of(SurdElement::from_k(sdelta, hi) - root) ==
                                                                Sign::positive) {
                    ++check.roots_inside;
                }
            }
        }
        check.non_periodic_start = check.roots_inside == 0;
        if (check.non_periodic_start) {
            report.notes.push_back("no root of the sigma-seed lies in (" + lo.to_string() + ", " + hi.to_string() +
                                   "): an expansion starting with these quotients and sigma(a_n) > 0 is not "
                                   "ultimately periodic");
        }
        report.start_window = check;
    }
    return report;
}

}  // namespace qcf
