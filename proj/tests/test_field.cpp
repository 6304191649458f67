#include <doctest.h>

#include <cmath>

#include "qcf/errors.hpp"
#include "qcf/field.hpp"
#include "qcf/surd.hpp"
#include "support.hpp"

using namespace qcf;
using namespace qcf::testing;

namespace {

bool encloses(const Interval& iv, double v, double slack = 1e-12) {
    return iv.lower_double() <= v + slack && iv.upper_double() >= v - slack;
}

bool is_perfect_square(const Rational& q) {
    return sgn(q) >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

const double kBeta = (1.0 + std::sqrt(5.0)) / 2.0;

}  // namespace

TEST_CASE("FieldSpec validates D and picks the integral basis") {
    CHECK(FieldSpec(5).half_integral_basis());
    CHECK(FieldSpec(13).half_integral_basis());
    CHECK_FALSE(FieldSpec(2).half_integral_basis());
    CHECK_FALSE(FieldSpec(3).half_integral_basis());
    CHECK(FieldSpec(5).norm_term() == 1);  // w^2 = w + 1
    CHECK(FieldSpec(2).norm_term() == 2);  // w^2 = 2
    CHECK_THROWS_AS(FieldSpec(1), PreconditionError);
    CHECK_THROWS_AS(FieldSpec(0), PreconditionError);
    CHECK_THROWS_AS(FieldSpec(-3), PreconditionError);
    CHECK_THROWS_AS(FieldSpec(4), PreconditionError);
    CHECK_THROWS_AS(FieldSpec(18), PreconditionError);
}

TEST_CASE("k_ops on Q(sqrt 5)") {
    const KElement beta = KElement::omega(kGolden);
    CHECK(k_ops(beta, beta, ArithOp::mul) == elem("1+w"));
    CHECK(k_ops(beta, beta - Rational(1), ArithOp::mul) == elem("1"));
    CHECK(k_ops(elem("4-2*w"), elem("2+2*w"), ArithOp::add) == elem("6"));
    CHECK(k_ops(elem("1"), beta, ArithOp::div) == elem("-1+w"));
    CHECK(k_ops(elem("3"), elem("1+w"), ArithOp::sub) == elem("2-w"));
    CHECK_THROWS_AS(k_ops(beta, KElement(kGolden), ArithOp::div), PreconditionError);
    CHECK_THROWS_AS(k_ops(beta, KElement::omega(FieldSpec(2)), ArithOp::add), PreconditionError);
}

TEST_CASE("arithmetic with the sqrt(D) basis") {
    const FieldSpec q2(2);
    const KElement r2 = KElement::omega(q2);
    CHECK(r2 * r2 == KElement(q2, 2));
    CHECK(r2.conj() == -r2);
    CHECK((KElement(q2, 1, 1) * KElement(q2, -1, 1)) == KElement(q2, 1));
    CHECK(KElement(q2, 3, 2).norm() == Rational(1));
}

TEST_CASE("k_conj") {
    const KElement beta = KElement::omega(kGolden);
    CHECK(k_conj(beta) == elem("1-w"));
    CHECK(k_conj(beta) == -beta.inverse());
    CHECK(k_conj(elem("7")) == elem("7"));
    CHECK(k_conj(elem("4-2*w")) == elem("2+2*w"));
}

TEST_CASE("integrality, norm and trace") {
    CHECK(elem("4-2*w").is_integral());
    CHECK_FALSE(elem("1/2+1/2*w").is_integral());
    CHECK(elem("w").norm() == -1);
    CHECK(elem("w").trace() == 1);
    CHECK(elem("1/2").norm() == Rational(1, 4));
}

TEST_CASE("k_embed encloses the real embeddings") {
    const KElement beta = KElement::omega(kGolden);
    const Interval id = k_embed(beta, RealEmbedding::identity, 20);
    CHECK(encloses(id, kBeta, 1e-6));
    CHECK(id.meets_precision(20));
    CHECK(id.lower() <= Rational(16180339, 10000000));
    const Interval sg = k_embed(beta, RealEmbedding::sigma, 20);
    CHECK(encloses(sg, 1.0 - kBeta, 1e-6));
    CHECK(sg.upper() >= Rational(-6180340, 10000000));

    const Interval exact = k_embed(elem("3/2"), RealEmbedding::identity, 4);
    CHECK(exact.lower() == Rational(3, 2));
    CHECK(exact.upper() == Rational(3, 2));

    const Interval third = k_embed(elem("1/3"), RealEmbedding::identity, 30);
    CHECK(third.contains(Rational(1, 3)));
    CHECK(third.meets_precision(30));

    const Interval big = k_embed(elem("1000000+3*w"), RealEmbedding::identity, 50);
    CHECK(big.meets_precision(50));
    CHECK(encloses(big, 1000000 + 3 * kBeta, 1e-6));

    CHECK_THROWS_AS(k_embed(beta, RealEmbedding::identity, 0), PreconditionError);
}

TEST_CASE("is_square_in_k") {
    const auto r = is_square_in_k(elem("1+w"));
    REQUIRE(r.has_value());
    CHECK((*r == elem("w") || *r == elem("-w")));

    // Oracle: in the power basis (c + e sqrt 5)^2 = 2 forces c e = 0, so
    // either c^2 = 2 or e^2 = 2/5; neither is a rational square.
    CHECK_FALSE(is_perfect_square(Rational(2)));
    CHECK_FALSE(is_perfect_square(Rational(2, 5)));
    CHECK_FALSE(is_square_in_k(elem("2")).has_value());

    const auto h = is_square_in_k(elem("9/4"));
    REQUIRE(h.has_value());
    CHECK((*h == elem("3/2") || *h == elem("-3/2")));

    // 5 = (2w - 1)^2 in Q(sqrt 5)
    const auto five = is_square_in_k(elem("5"));
    REQUIRE(five.has_value());
    CHECK(*five * *five == elem("5"));
    CHECK_FALSE(is_square_in_k(elem("-1")).has_value());
    CHECK_FALSE(is_square_in_k(elem("w")).has_value());
    CHECK(is_square_in_k(KElement(kGolden)).has_value());
}

TEST_CASE("exact sign of K-elements") {
    CHECK(sign_of(elem("w")) == Sign::positive);
    CHECK(sign_of(elem("w"), RealEmbedding::sigma) == Sign::negative);
    CHECK(sign_of(elem("0")) == Sign::zero);
    CHECK(sign_of(elem("-2+w")) == Sign::negative);  // beta < 2
    CHECK(sign_of(elem("-1+w")) == Sign::positive);
    // consecutive Fibonacci ratios 144/89 < beta < 233/144
    CHECK(sign_of(elem("-144+89*w")) == Sign::positive);
    CHECK(sign_of(elem("-233+144*w")) == Sign::negative);
}

TEST_CASE("surd arithmetic") {
    const KElement delta = elem("2+w");  // beta^2 + 1
    const SurdElement root(delta, elem("0"), elem("1"));
    const SurdElement u(delta, elem("3-w"), elem("1/2"));
    const SurdElement ubar(delta, elem("3-w"), elem("-1/2"));

    CHECK(surd_ops(u, ubar, ArithOp::add) == SurdElement::from_k(delta, elem("6-2*w")));
    CHECK(surd_ops(root, root, ArithOp::mul) == SurdElement::from_k(delta, delta));

    SUBCASE("1/(sqrt(delta) - 1) = (1 + sqrt(delta))/beta^2") {
        const SurdElement one = SurdElement::from_k(delta, elem("1"));
        const SurdElement got = surd_ops(one, root - elem("1"), ArithOp::div);
        const KElement beta2 = elem("1+w");
        const SurdElement expected(delta, beta2.inverse(), beta2.inverse());
        CHECK(got == expected);
        // Oracle by cross-multiplication: (1 + s)(s - 1) = delta - 1 = beta^2.
        CHECK(delta - elem("1") == beta2);
        const double s = std::sqrt(kBeta * kBeta + 1.0);
        CHECK(encloses(got.evaluate(96), 1.0 / (s - 1.0)));
    }

    CHECK_THROWS_AS(surd_ops(u, SurdElement::from_k(delta, elem("0")), ArithOp::div), PreconditionError);
    const SurdElement other(elem("3"), elem("1"), elem("1"));
    CHECK_THROWS_AS(surd_ops(u, other, ArithOp::add), PreconditionError);
    CHECK_THROWS_AS(SurdElement(elem("1+w"), elem("1"), elem("1")), PreconditionError);  // square radicand
    CHECK_THROWS_AS(SurdElement(elem("-3"), elem("1"), elem("1")), PreconditionError);
    CHECK(root.surd_conj().y() == elem("-1"));
    CHECK(u.relative_norm() == u.x() * u.x() - u.y() * u.y() * delta);
    CHECK(u.in_k() == false);
}

TEST_CASE("exact sign of surds") {
    const SurdElement r2m1(elem("2"), elem("-1"), elem("1"));
    CHECK(sign_of(r2m1) == Sign::positive);
    CHECK(sign_of(SurdElement::from_k(elem("2"), elem("0"))) == Sign::zero);

    const SurdElement d(elem("2+w"), elem("-w"), elem("1"));  // sqrt(beta^2 + 1) - beta
    CHECK(sign_of(d) == Sign::positive);
    // Oracle: delta - beta^2 = 1 > 0, and the interval at 64 bits excludes 0.
    CHECK(elem("2+w") - elem("w") * elem("w") == elem("1"));
    CHECK(d.evaluate(64).is_positive());

    CHECK(sign_of(SurdElement(elem("2"), elem("3/2"), elem("-1"))) == Sign::positive);   // 1.5 > sqrt 2
    CHECK(sign_of(SurdElement(elem("2"), elem("7/5"), elem("-1"))) == Sign::negative);   // 1.4 < sqrt 2
}

TEST_CASE("rebase across proportional radicands") {
    const SurdElement u(elem("2+w"), elem("1"), elem("1"));
    const KElement target = elem("8+4*w");  // 4 (beta^2 + 1)
    const auto r = u.rebase(target);
    REQUIRE(r.has_value());
    CHECK(r->y() == elem("1/2"));
    CHECK(r->rebase(u.delta()).value() == u);
    CHECK_FALSE(u.rebase(elem("3")).has_value());
}

TEST_CASE("mixed surds: exact zero test, sign and floor") {
    const KElement d1 = elem("2");
    const KElement d2 = elem("8");
    // sqrt 8 - 2 sqrt 2 = 0
    const MixedSurd z(d1, d2, elem("0"), elem("2"), elem("-1"));
    CHECK(z.is_zero());
    CHECK(sign_of(z) == Sign::zero);
    // sqrt 8 + 2 sqrt 2 != 0
    CHECK_FALSE(MixedSurd(d1, d2, elem("0"), elem("2"), elem("1")).is_zero());
    // 3 + sqrt 2 - sqrt 3 > 0
    const MixedSurd p(d1, elem("3"), elem("3"), elem("1"), elem("-1"));
    CHECK(sign_of(p) == Sign::positive);

    const FloorCeil fc = floor_ceil(p);
    const double v = 3 + std::sqrt(2.0) - std::sqrt(3.0);
    CHECK(fc.floor == static_cast<long>(std::floor(v)));
    CHECK(fc.ceil == fc.floor + 1);

    // an exact integer: 5 + sqrt 8 - 2 sqrt 2
    const FloorCeil fi = floor_ceil(MixedSurd(d1, d2, elem("5"), elem("2"), elem("-1")));
    CHECK(fi.floor == 5);
    CHECK(fi.ceil == 5);

    // negative non-integer: -sqrt 3 - sqrt 2
    const FloorCeil fn = floor_ceil(MixedSurd(d1, elem("3"), elem("0"), elem("-1"), elem("-1")));
    CHECK(fn.floor == -4);
    CHECK(fn.ceil == -3);
}

TEST_CASE("interval arithmetic encloses and rejects zero divisors") {
    const Interval a(Rational(1, 3), 64);
    const Interval b(Rational(2), 64);
    CHECK((a + b).contains(Rational(7, 3)));
    CHECK((a * b).contains(Rational(2, 3)));
    CHECK((a - b).contains(Rational(-5, 3)));
    CHECK((a / b).contains(Rational(1, 6)));
    CHECK(b.sqrt().lower_double() <= std::sqrt(2.0));
    CHECK(b.sqrt().upper_double() >= std::sqrt(2.0));
    CHECK(Interval(Rational(16), 64).root4().contains(Rational(2)));
    CHECK_THROWS_AS(a / Interval(Rational(-1), Rational(1), 64), PreconditionError);
    const Interval m = Interval::max(Interval(Rational(-3), Rational(-2), 64), Interval(Rational(1), 64));
    CHECK(m.lower() == Rational(1));
    CHECK(m.upper() == Rational(1));
    CHECK(Interval(Rational(-3), Rational(-2), 64).abs().lower() == Rational(2));
    CHECK(Interval(Rational(-1), Rational(2), 64).square().lower() == 0);
    CHECK(Interval(Rational(-1), Rational(2), 64).square().upper() == 4);
    CHECK(b.to_decimal(5) == "2");
    CHECK(a.to_decimal(5) == "0.33333");
}
