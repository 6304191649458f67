#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcf/field.hpp"
#include "qcf/surd.hpp"

namespace qcf {

/// Ultimately periodic continued fraction [preperiod; period] with partial
/// quotients in O_K. An empty period denotes a finite continued fraction.
struct CFExpansion {
    FieldSpec spec;
    std::vector<KElement> preperiod;
    std::vector<KElement> period;

    explicit CFExpansion(FieldSpec s) : spec(s) {}
    CFExpansion(FieldSpec s, std::vector<KElement> pre, std::vector<KElement> per);

    bool is_periodic() const { return !period.empty(); }
    bool all_integral() const;
    /// Partial quotient a_i with the period unrolled; throws past the end of
    /// a finite expansion.
    const KElement& at(std::size_t i) const;
    /// First n partial quotients.
    std::vector<KElement> unrolled(std::size_t n) const;
    /// sigma applied to every partial quotient.
    CFExpansion sigma() const;

    friend bool operator==(const CFExpansion& a, const CFExpansion& b) {
        return a.spec == b.spec && a.preperiod == b.preperiod && a.period == b.period;
    }
};

/// 2x2 matrix over K, row-major: [[e11, e12], [e21, e22]].
struct Mat2 {
    KElement e11, e12, e21, e22;

    static Mat2 identity(FieldSpec spec);
    /// D(a) = [[a, 1], [1, 0]].
    static Mat2 digit(const KElement& a);

    KElement det() const { return e11 * e22 - e12 * e21; }
    /// Inverse; throws PreconditionError when singular.
    Mat2 inverse() const;
    /// e12 = e21 = 0 and e11 = e22.
    bool is_identity_multiple() const;

    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.e11 == y.e11 && x.e12 == y.e12 && x.e21 == y.e21 && x.e22 == y.e22;
    }
    std::string to_string() const;
};

/// Convergent numerators and denominators at index n, with predecessors.
struct QPairState {
    KElement p_cur, p_prev, q_cur, q_prev;
    std::size_t index = 0;

    /// p_prev q_cur - p_cur q_prev, which equals (-1)^index.
    KElement determinant() const { return p_prev * q_cur - p_cur * q_prev; }
};

/// Coefficients of A x^2 + B x + C.
struct PolyTriple {
    KElement a, b, c;

    /// All three coefficients zero (E a multiple of the identity).
    bool degenerate() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
    KElement discriminant() const { return b * b - a * c * Rational(4); }
    KElement evaluate(const KElement& x) const { return (a * x + b) * x + c; }
    SurdElement evaluate(const SurdElement& x) const { return (x * a + b) * x + c; }
    std::string to_string() const;

    friend bool operator==(const PolyTriple& x, const PolyTriple& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
};

/// Continuant K_n(t_1, ..., t_n); K_0 = 1 for the empty list.
KElement continuant(std::span<const KElement> ts, const FieldSpec& spec);

/// Q-pair states 0..n of the expansion. Throws PreconditionError on a zero
/// partial quotient at index >= 1 or when n runs past a finite expansion.
std::vector<QPairState> convergents(const CFExpansion& cf, std::size_t n);

/// M(F) = D(a_1) ... D(a_n).
Mat2 cf_matrix(std::span<const KElement> quotients, const FieldSpec& spec);

/// E(P) = M(preperiod) M(period) M(preperiod)^-1. Requires a nonempty period.
Mat2 e_matrix(const CFExpansion& cf);

/// (E21, E22 - E11, -E12).
PolyTriple associated_poly(const Mat2& e);

enum class EvalOutcome { value, value_in_k, does_not_exist };

enum class NonexistenceReason {
    none,
    identity_multiple,
    negative_discriminant,
    unit_modulus,
    ineq_window,
    limit_at_infinity,
};

std::string to_string(NonexistenceReason r);

/// Outcome of the convergence decision for a periodic expansion.
struct PeriodicEvalResult {
    PeriodicEvalResult(Mat2 e, PolyTriple f, KElement disc)
        : e_matrix(std::move(e)), poly(std::move(f)), discriminant(std::move(disc)) {}

    EvalOutcome outcome = EvalOutcome::does_not_exist;
    std::optional<SurdElement> value;
    std::optional<KElement> value_in_k;
    NonexistenceReason reason = NonexistenceReason::none;
    /// Offset j of the offending cyclic window when reason == ineq_window.
    std::size_t window = 0;
    /// M(window) for the ineq_window reason.
    std::optional<Mat2> window_matrix;
    Mat2 e_matrix;
    PolyTriple poly;
    KElement discriminant;
    /// E21 = 0: f is linear and one root sits at infinity.
    bool linear_branch = false;

    bool exists() const { return outcome != EvalOutcome::does_not_exist; }
};

/// Decides convergence of a periodic continued fraction and returns its
/// value. Throws PreconditionError for an empty period.
PeriodicEvalResult eval_periodic(const CFExpansion& cf);

/// Value of a finite continued fraction P_n / Q_n.
KElement eval_finite(std::span<const KElement> quotients, const FieldSpec& spec);

}  // namespace qcf
