#include <doctest.h>

#include <random>
#include <vector>

#include "qcf/quartic.hpp"
#include "support.hpp"

using namespace qcf;
using namespace qcf::testing;

namespace {

constexpr int kSamples = 300;

struct Walk {
    QuadraticPolyK seed;
    int branch;
    std::vector<KElement> quotients;
    std::vector<QuotientState> states;  // states[n] is xi_n, one more than quotients
};

/// Random seed stepped through random integral quotients.
Walk random_walk(std::mt19937_64& rng, std::size_t length, bool all_real = false) {
    Walk w{random_seed(rng, 4, all_real), random_branch(rng), {}, {}};
    w.states.push_back(make_state(w.seed, w.branch));
    for (std::size_t i = 0; i < length; ++i) {
        w.quotients.push_back(random_integral(rng, 6));
        w.states.push_back(step_state(w.states.back(), w.quotients.back()));
    }
    return w;
}

}  // namespace

TEST_CASE("the discriminant is conserved and C_{n+1} = A_n") {
    std::mt19937_64 rng(401);
    for (int i = 0; i < kSamples; ++i) {
        const Walk w = random_walk(rng, static_cast<std::size_t>(uniform(rng, 1, 20)));
        for (std::size_t n = 1; n < w.states.size(); ++n) {
            REQUIRE(w.states[n].poly().discriminant() == w.seed.discriminant());
            REQUIRE(w.states[n].poly().c == w.states[n - 1].poly().a);
            REQUIRE(w.states[n].branch() == -w.states[n - 1].branch());
            // xi_{n-1} = a + 1 / xi_n
            const SurdElement one = SurdElement::from_k(w.states[n].delta(), elem("1"));
            REQUIRE(w.states[n - 1].value() == one / w.states[n].value() + w.quotients[n - 1]);
        }
    }
}

TEST_CASE("triple_recursion agrees with iterated steps") {
    std::mt19937_64 rng(402);
    for (int i = 0; i < kSamples; ++i) {
        const std::size_t len = static_cast<std::size_t>(uniform(rng, 1, 30));
        const Walk w = random_walk(rng, len);
        std::vector<KElement> qs = w.quotients;
        // convergents need nonzero a_n for n >= 1
        bool zero = false;
        for (std::size_t k = 1; k < qs.size(); ++k) zero = zero || qs[k].is_zero();
        if (zero) continue;
        const std::vector<QPairState> qps = convergents(CFExpansion(kGolden, qs, {}), len - 1);
        for (std::size_t n = 0; n < len; ++n) {
            REQUIRE(triple_recursion(w.seed, qps[n]) == w.states[n + 1].poly());
        }
    }
}

TEST_CASE("state keys coincide exactly when the values do") {
    std::mt19937_64 rng(403);
    for (int i = 0; i < kSamples; ++i) {
        const Walk w = random_walk(rng, 8);
        std::vector<QuotientState> pool = w.states;
        // the same real numbers written with the triple negated
        for (const QuotientState& s : w.states) {
            const PolyTriple& t = s.poly();
            for (std::size_t k = 0; k < 2; ++k) {
                QuotientState alt = make_state(QuadraticPolyK(-t.a, -t.b, -t.c), k == 0 ? 1 : -1);
                pool.push_back(alt);
            }
        }
        for (std::size_t x = 0; x < pool.size(); ++x) {
            const std::size_t y = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(pool.size()) - 1));
            const bool same_value = pool[x].value() == pool[y].value();
            REQUIRE((pool[x].key() == pool[y].key()) == same_value);
        }
    }
}

TEST_CASE("Weil heights are at least one and submultiplicative on K") {
    std::mt19937_64 rng(404);
    for (int i = 0; i < kSamples; ++i) {
        const KElement x = random_element(rng, 20);
        const KElement y = random_element(rng, 20);
        if (x.is_zero() || y.is_zero()) continue;
        const Interval hx = weil_height(x, 64), hy = weil_height(y, 64);
        REQUIRE(hx.upper() >= 1);
        REQUIRE(weil_height(x * y, 64).lower() <= (hx * hy).upper());
        // H(1/x) = H(x)
        REQUIRE_FALSE((weil_height(x.inverse(), 64) - hx).is_positive());
        REQUIRE_FALSE((weil_height(x.inverse(), 64) - hx).is_negative());
    }
}

TEST_CASE("Mahler-measure comparisons between the Weil and naive heights") {
    // H^4 is the Mahler measure M of the degree-4 integer polynomial f sigma(f),
    // so M <= sqrt(5) h and h <= C(4, 2) M <= 16 M.
    std::mt19937_64 rng(405);
    const Interval sqrt5 = Interval(Rational(5), 64).sqrt();
    for (int i = 0; i < kSamples; ++i) {
        const Walk w = random_walk(rng, static_cast<std::size_t>(uniform(rng, 0, 6)));
        for (const QuotientState& s : w.states) {
            const Interval h4 = weil_height_pow4(s, 128);
            const Rational naive(naive_height(s));
            REQUIRE(weil_height(s, 64).lower() >= 1);
            REQUIRE(h4.lower() <= (sqrt5 * Interval(naive, 64)).upper());
            REQUIRE(naive <= (Interval(Rational(6), 64) * h4).upper());
            REQUIRE(naive <= (Interval(Rational(16), 64) * h4).upper());
        }
    }
}

TEST_CASE("heights do not depend on the branch") {
    std::mt19937_64 rng(406);
    for (int i = 0; i < kSamples; ++i) {
        const QuadraticPolyK seed = random_seed(rng, 5, false);
        const QuotientState plus = make_state(seed, 1), minus = make_state(seed, -1);
        REQUIRE(naive_height(plus) == naive_height(minus));
        const Interval a = weil_height(plus, 64), b = weil_height(minus, 64);
        REQUIRE_FALSE((a - b).is_positive());
        REQUIRE_FALSE((a - b).is_negative());
    }
}

TEST_CASE("the height identity holds along random trajectories") {
    std::mt19937_64 rng(407);
    for (int i = 0; i < 100; ++i) {
        Walk w = random_walk(rng, 12);
        bool zero = false;
        for (std::size_t k = 1; k < w.quotients.size(); ++k) zero = zero || w.quotients[k].is_zero();
        if (zero) continue;
        const std::vector<TrajectoryRow> rows = diagnostics(w.seed, w.branch, w.quotients, 64);
        const Rational norm_a = abs(w.seed.a().norm());
        for (std::size_t n = 0; n + 1 < rows.size(); ++n) {
            const Interval lhs = rows[n + 1].weil.square().square();
            const Interval rhs = Interval(norm_a, 64) * rows[n].f1 * rows[n].f2;
            REQUIRE_FALSE((lhs - rhs).is_positive());
            REQUIRE_FALSE((lhs - rhs).is_negative());
        }
    }
}
