#include <doctest.h>

#include <cmath>
#include <vector>

#include "qcf/cf.hpp"
#include "qcf/errors.hpp"
#include "qcf/text.hpp"
#include "support.hpp"

using namespace qcf;
using namespace qcf::testing;

namespace {

CFExpansion cf(const char* text, const FieldSpec& spec = kGolden) { return parse_expansion(text, spec); }

std::vector<KElement> list(std::initializer_list<const char*> items) {
    std::vector<KElement> out;
    for (const char* s : items) out.push_back(elem(s));
    return out;
}

Mat2 mat(const char* a, const char* b, const char* c, const char* d) { return {elem(a), elem(b), elem(c), elem(d)}; }

}  // namespace

TEST_CASE("continuants") {
    CHECK(continuant({}, kGolden) == elem("1"));
    const KElement a = elem("3-w");
    const KElement b = elem("2+5*w");
    const std::vector<KElement> ab{a, b};
    CHECK(continuant(ab, kGolden) == a * b + elem("1"));
    // beta (1 - beta) + 1 = beta - beta^2 + 1 = 0
    CHECK(continuant(list({"w", "1-w"}), kGolden) == elem("0"));
    CHECK(continuant(list({"1", "1", "1", "1", "1"}), kGolden) == elem("8"));  // Fibonacci
}

TEST_CASE("convergents of a classical expansion") {
    const std::vector<QPairState> qs = convergents(cf("[1, 2, 2]"), 2);
    REQUIRE(qs.size() == 3);
    CHECK(qs[2].p_cur == elem("7"));
    CHECK(qs[2].q_cur == elem("5"));
    // hand recursion: 1/1, 3/2, 7/5
    CHECK(qs[1].p_cur == elem("3"));
    CHECK(qs[1].q_cur == elem("2"));

    const std::vector<QPairState> single = convergents(cf("[4-2*w]"), 0);
    CHECK(single[0].p_cur == elem("4-2*w"));
    CHECK(single[0].q_cur == elem("1"));
    CHECK(single[0].p_prev == elem("1"));
    CHECK(single[0].q_prev == elem("0"));

    for (const QPairState& s : qs) {
        CHECK(s.determinant() == elem(s.index % 2 == 0 ? "1" : "-1"));
    }

    CHECK_THROWS_AS(convergents(cf("[1, 0, 2]"), 2), PreconditionError);
    CHECK_NOTHROW(convergents(cf("[0, 1, 2]"), 2));  // a_0 may vanish
    CHECK_THROWS_AS(convergents(cf("[1, 2]"), 5), PreconditionError);
    CHECK(convergents(cf("[1; 2]"), 10).size() == 11);
    CHECK(eval_finite(list({"1", "2", "2"}), kGolden) == elem("7/5"));
}

TEST_CASE("cf_matrix") {
    CHECK(cf_matrix({}, kGolden) == Mat2::identity(kGolden));
    CHECK(cf_matrix(list({"0", "0"}), kGolden) == Mat2::identity(kGolden));
    CHECK(cf_matrix(list({"1", "2"}), kGolden) == mat("3", "1", "2", "1"));
    const Mat2 m = cf_matrix(list({"1", "2", "2"}), kGolden);
    CHECK(m.e11 == elem("7"));  // P_2
    CHECK(m.e21 == elem("5"));  // Q_2
    CHECK(m.det() == elem("-1"));
}

TEST_CASE("e_matrix and associated polynomial") {
    const KElement a = elem("2-3*w");
    CHECK(e_matrix(CFExpansion(kGolden, {}, {a})) == Mat2::digit(a));

    // M([1]) M([2]) M([1])^-1 by hand:
    //   [[3,1],[2,1]] * [[0,1],[1,-1]] = [[1,2],[1,1]]
    const Mat2 e = e_matrix(cf("[1; 2]"));
    CHECK(e == mat("1", "2", "1", "1"));
    const PolyTriple f = associated_poly(e);
    CHECK(f == PolyTriple{elem("1"), elem("0"), elem("-2")});
    // (E22 - E11)^2 + 4 E21 E12 = 0 + 8
    CHECK(f.discriminant() == elem("8"));

    CHECK(associated_poly(Mat2::digit(a)) == PolyTriple{elem("1"), -a, elem("-1")});
    CHECK(associated_poly(Mat2::identity(kGolden)).degenerate());
    CHECK_THROWS_AS(e_matrix(cf("[1, 2]")), PreconditionError);
}

TEST_CASE("eval_periodic: sqrt 2") {
    const PeriodicEvalResult r = eval_periodic(cf("[1; 2]"));
    REQUIRE(r.outcome == EvalOutcome::value);
    CHECK(r.poly == PolyTriple{elem("1"), elem("0"), elem("-2")});
    const SurdElement v = *r.value;
    CHECK(v * v == SurdElement::from_k(v.delta(), elem("2")));
    CHECK(sign_of(v) == Sign::positive);

    // Oracle: convergents iterated numerically.
    double p_prev = 1, p = 1, q_prev = 0, q = 1;
    for (int i = 0; i < 40; ++i) {
        const double pn = 2 * p + p_prev, qn = 2 * q + q_prev;
        p_prev = p, q_prev = q, p = pn, q = qn;
    }
    const Interval iv = v.evaluate(128);
    CHECK(std::abs(iv.lower_double() - p / q) < 1e-12);
    CHECK(std::abs(std::sqrt(2.0) - p / q) < 1e-12);
    CHECK_FALSE(r.linear_branch);
}

TEST_CASE("eval_periodic: negative discriminant") {
    const PeriodicEvalResult r = eval_periodic(cf("[; 1, -1]"));
    CHECK(r.outcome == EvalOutcome::does_not_exist);
    CHECK(r.reason == NonexistenceReason::negative_discriminant);
    // D(1) D(-1) = [[0,1],[-1,1]], f = -x^2 + x - 1, discriminant -3
    CHECK(r.e_matrix == mat("0", "1", "-1", "1"));
    CHECK(r.poly == PolyTriple{elem("-1"), elem("1"), elem("-1")});
    CHECK(r.discriminant == elem("-3"));
}

TEST_CASE("eval_periodic: identity multiple") {
    const PeriodicEvalResult r = eval_periodic(cf("[; 0, 0]"));
    CHECK(r.outcome == EvalOutcome::does_not_exist);
    CHECK(r.reason == NonexistenceReason::identity_multiple);
    CHECK(r.poly.degenerate());
}

TEST_CASE("eval_periodic: a window with M21 = 0 and |M22| > 1") {
    const PeriodicEvalResult r = eval_periodic(cf("[; 1, w, 1-w]"));
    CHECK(r.outcome == EvalOutcome::does_not_exist);
    CHECK(r.reason == NonexistenceReason::ineq_window);
    REQUIRE(r.window_matrix.has_value());
    CHECK(r.window == 0);
    CHECK(r.window_matrix->e21 == elem("0"));
    CHECK(r.window_matrix->e22 == elem("w"));
    // Oracle: the window matrix by direct product.
    CHECK(*r.window_matrix == Mat2::digit(elem("1")) * Mat2::digit(elem("w")) * Mat2::digit(elem("1-w")));
}

TEST_CASE("eval_periodic: the worked-example expansion evaluates to 1 + sqrt(beta^2 + 1)") {
    const PeriodicEvalResult r = eval_periodic(cf("[; 2, 4-2*w]"));
    REQUIRE(r.outcome == EvalOutcome::value);
    const SurdElement expected(elem("2+w"), elem("1"), elem("1"));
    REQUIRE(r.value->rebase(expected.delta()).has_value());
    CHECK(*r.value->rebase(expected.delta()) == expected);
    CHECK(r.poly.evaluate(*r.value).is_zero());
    CHECK(r.e_matrix.det() == elem("1"));

    const PeriodicEvalResult r2 = eval_periodic(cf("[1+w; 2*w]"));
    REQUIRE(r2.outcome == EvalOutcome::value);
    CHECK(*r2.value->rebase(expected.delta()) == expected);
}

TEST_CASE("eval_periodic: values inside K") {
    // [; 1] is the golden ratio, a root of x^2 - x - 1, which splits in K.
    const PeriodicEvalResult r = eval_periodic(cf("[; 1]"));
    REQUIRE(r.outcome == EvalOutcome::value_in_k);
    CHECK(*r.value_in_k == elem("w"));

    // Over Q(sqrt 2) the same expansion [1; 2] is sqrt 2 = w itself.
    const FieldSpec q2(2);
    const PeriodicEvalResult s = eval_periodic(cf("[1; 2]", q2));
    REQUIRE(s.outcome == EvalOutcome::value_in_k);
    CHECK(*s.value_in_k == KElement::omega(q2));
}

TEST_CASE("eval_periodic: degenerate branches") {
    SUBCASE("E21 = 0 is flagged as the linear branch") {
        const PeriodicEvalResult r = eval_periodic(cf("[; 1, w, 1-w]"));
        CHECK(r.linear_branch);
        CHECK(r.e_matrix.e21 == elem("0"));
    }
    SUBCASE("unit modulus") {
        // D(1) D(2) D(-1) = [[-2,3],[-1,2]]: f = -x^2 + 4x - 3 with roots 1, 3,
        // and E21 gamma + E22 = +-1 for both.
        const PeriodicEvalResult r = eval_periodic(cf("[; 1, 2, -1]"));
        CHECK(r.e_matrix == mat("-2", "3", "-1", "2"));
        CHECK(r.discriminant == elem("4"));
        CHECK(r.outcome == EvalOutcome::does_not_exist);
        CHECK(r.reason == NonexistenceReason::unit_modulus);
    }
    SUBCASE("double root") {
        // D(2) D(-2) = [[-3,2],[-2,1]]: f = -2x^2 + 4x - 2, double root 1
        const PeriodicEvalResult r = eval_periodic(cf("[; 2, -2]"));
        CHECK(r.discriminant == elem("0"));
        CHECK(r.outcome == EvalOutcome::value_in_k);
        CHECK(*r.value_in_k == elem("1"));
    }
    CHECK_THROWS_AS(eval_periodic(cf("[1, 2]")), PreconditionError);
}

TEST_CASE("NonexistenceReason names") {
    CHECK(to_string(NonexistenceReason::ineq_window) == "ineq_window");
    CHECK(to_string(NonexistenceReason::negative_discriminant) == "negative_discriminant");
    CHECK(to_string(NonexistenceReason::identity_multiple) == "identity_multiple");
    CHECK(to_string(NonexistenceReason::unit_modulus) == "unit_modulus");
}
