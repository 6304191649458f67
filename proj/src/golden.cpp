#include "qcf/golden.hpp"

#include <map>
#include <sstream>

#include "qcf/errors.hpp"
#include "qcf/text.hpp"

namespace qcf {

namespace {

constexpr std::int64_t kGoldenD = 5;

/// beta + 1/beta = sqrt(5) = 2 beta - 1
KElement sqrt5(const FieldSpec& spec) { return KElement(spec, -1, 2); }

/// u^2 - bound > 0 for a real surd u, decided exactly.
bool square_exceeds(const SurdElement& u, const Rational& bound) {
    return sign_of(u * u - KElement(u.spec(), bound)) == Sign::positive;
}

}  // namespace

LatticeCoords lattice_coords(const PairState& p) {
    const FieldSpec& spec = p.xi.spec();
    if (spec.d() != kGoldenD) throw PreconditionError("lattice coordinates are defined for K = Q(sqrt 5) only");
    const SurdElement xi = p.xi.value();
    const SurdElement xp = p.xi_prime.value();
    const KElement zero(spec);
    const MixedSurd diff = MixedSurd::sum(xi, -xp);
    const MixedSurd y = diff / sqrt5(spec);
    const MixedSurd xi_only(xi.delta(), xp.delta(), xi.x(), xi.y(), zero);
    const MixedSurd x = xi_only - y * KElement::omega(spec);
    const mpfr_prec_t prec = RefinementPolicy::kInitialBits;
    return LatticeCoords{x, y, x.evaluate(prec), y.evaluate(prec)};
}

ChosenQuotient choose_quotient(const PairState& p) {
    const LatticeCoords c = lattice_coords(p);
    const FloorCeil fx = floor_ceil(c.x_tilde);
    const FloorCeil fy = floor_ceil(c.y_tilde);
    const FieldSpec& spec = p.xi.spec();
    const SurdElement xi = p.xi.value();
    const SurdElement xp = p.xi_prime.value();

    const std::pair<Integer, Integer> order[4] = {
        {fx.floor, fy.floor}, {fx.floor, fy.ceil}, {fx.ceil, fy.floor}, {fx.ceil, fy.ceil}};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& [x, y] = order[i];
        bool repeated = false;
        for (std::size_t j = 0; j < i; ++j) repeated = repeated || order[j] == order[i];
        if (repeated) continue;

        const KElement a(spec, Rational(x), Rational(y));
        const SurdElement u = xi - a;
        const SurdElement v = xp - a.conj();
        const MixedSurd dist = MixedSurd::sum(u * u, v * v);
        if (sign_of(dist - KElement(spec, kDistanceBoundSq)) == Sign::negative) {
            return ChosenQuotient{a, dist.evaluate(RefinementPolicy::kInitialBits), i};
        }
    }
    std::ostringstream msg;
    msg << "NoCandidate: no lattice corner within sqrt(9/10) of (" << xi.to_string() << ", " << xp.to_string()
        << ")";
    throw InternalError(msg.str());
}

ExpansionResult expand_pair(const QuadraticPolyK& seed, int branch, int conj_branch, const ExpansionConfig& cfg) {
    const FieldSpec& spec = seed.spec();
    if (spec.d() != kGoldenD) {
        throw PreconditionError("the lattice expansion needs a covering radius below 1, which among real quadratic "
                                "fields holds only for D = 5 (D = " +
                                std::to_string(spec.d()) + " given)");
    }
    if (cfg.max_steps < 1) throw PreconditionError("max_steps must be >= 1");
    seed.require_quartic();
    const PreconditionReport pre = periodicity_preconditions(seed);
    if (pre.conjugates != ConjugateClass::all_real) {
        std::string msg = "the expansion requires all conjugates real, but sigma(delta) = " +
                          pre.sigma_delta.to_string() + " < 0";
        for (const std::string& note : pre.notes) msg += "; " + note;
        throw PreconditionError(msg);
    }

    PairState state{make_state(seed, branch), make_state(seed.sigma(), conj_branch), 0};
    ExpansionResult result{seed, branch, conj_branch, CFExpansion(spec), {}, 0, 0, {}, false};
    std::map<PairState::Key, std::size_t> first_seen;
    std::vector<KElement> quotients;

    for (std::size_t n = 0;; ++n) {
        PairState::Key key = state.key();
        if (auto it = first_seen.find(key); it != first_seen.end()) {
            const std::size_t start = it->second;
            result.cycle_start = start;
            result.steps = n;
            result.expansion.preperiod.assign(quotients.begin(), quotients.begin() + static_cast<long>(start));
            result.expansion.period.assign(quotients.begin() + static_cast<long>(start), quotients.end());
            result.states.push_back(std::move(key));
            return result;
        }
        if (n >= cfg.max_steps) {
            std::ostringstream msg;
            msg << "no cycle within " << cfg.max_steps << " steps for seed " << seed.to_string() << "; quotients "
                << format_expansion(CFExpansion(spec, quotients, {})) << "; last state xi = "
                << state.xi.value().to_string() << ", xi' = " << state.xi_prime.value().to_string();
            throw MaxStepsExceeded(msg.str());
        }
        first_seen.emplace(key, n);
        result.states.push_back(std::move(key));

        StepCheck check{KElement(spec), Interval(), false, true, true};
        if (n >= 1) {
            check.xi_bound_ok = square_exceeds(state.xi.value(), kQuotientBoundSq);
            check.xi_prime_bound_ok = square_exceeds(state.xi_prime.value(), kQuotientBoundSq);
            if (!check.xi_bound_ok || !check.xi_prime_bound_ok) {
                throw InternalError("complete quotient at step " + std::to_string(n) + " is not above sqrt(10/9)");
            }
        }
        const ChosenQuotient chosen = choose_quotient(state);
        check.a = chosen.a;
        check.distance_sq = chosen.distance_sq;
        check.distance_ok = true;
        result.checks.push_back(check);

        quotients.push_back(chosen.a);
        state = PairState{step_state(state.xi, chosen.a), step_state(state.xi_prime, chosen.a.conj()), n + 1};
    }
}

RoundtripReport verify_roundtrip(const ExpansionResult& r, const QuadraticPolyK& seed, int branch) {
    RoundtripReport report;
    auto check = [&](const CFExpansion& cf, const SurdElement& expected, const char* label) {
        const PeriodicEvalResult ev = eval_periodic(cf);
        if (ev.outcome != EvalOutcome::value) {
            report.mismatch = std::string(label) + ": " + format_expansion(cf) +
                              " has no quartic value (reason: " + to_string(ev.reason) + ")";
            return false;
        }
        const auto rebased = ev.value->rebase(expected.delta());
        if (!rebased) {
            report.mismatch = std::string(label) + ": value " + ev.value->to_string() +
                              " lies in a different quadratic extension than " + expected.to_string();
            return false;
        }
        if (*rebased != expected) {
            report.mismatch = std::string(label) + ": evaluates to " + rebased->to_string() + ", expected " +
                              expected.to_string();
            return false;
        }
        return true;
    };
    const SurdElement xi = make_state(seed, branch).value();
    const SurdElement xi_prime = make_state(seed.sigma(), r.conj_branch).value();
    report.ok = check(r.expansion, xi, "expansion") && check(r.expansion.sigma(), xi_prime, "sigma-expansion");
    return report;
}

CoveringRadius covering_radius(std::int64_t d, unsigned precision_bits) {
    const FieldSpec spec(d);
    Rational r2;
    if (spec.half_integral_basis()) {
        // ((sqrt D + 1/sqrt D) / (2 sqrt 2))^2 = (D + 1)^2 / (8 D)
        r2 = Rational((d + 1) * (d + 1), 8 * d);
    } else {
        r2 = Rational(d + 1, 2);
    }
    r2.canonicalize();
    const Interval r = k_embed(KElement(spec, r2), RealEmbedding::identity, precision_bits + 2).sqrt();
    return CoveringRadius{d, r2, r, r2 < 1};
}

}  // namespace qcf
