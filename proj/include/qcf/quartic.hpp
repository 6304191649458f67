#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcf/cf.hpp"
#include "qcf/errors.hpp"
#include "qcf/field.hpp"
#include "qcf/interval.hpp"
#include "qcf/surd.hpp"

namespace qcf {

/// The seed is quadratic over K (its discriminant is a square in K); the
/// classical Lagrange theory applies instead.
class DegenerateSeedError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A x^2 + B x + C with A, B, C in O_K and A != 0.
class QuadraticPolyK {
public:
    /// Throws PreconditionError for A = 0 or non-integral coefficients.
    QuadraticPolyK(KElement a, KElement b, KElement c);
    explicit QuadraticPolyK(const PolyTriple& t) : QuadraticPolyK(t.a, t.b, t.c) {}

    const KElement& a() const noexcept { return t_.a; }
    const KElement& b() const noexcept { return t_.b; }
    const KElement& c() const noexcept { return t_.c; }
    const PolyTriple& triple() const noexcept { return t_; }
    const FieldSpec& spec() const noexcept { return t_.a.spec(); }
    KElement discriminant() const { return t_.discriminant(); }
    /// sigma applied to every coefficient.
    QuadraticPolyK sigma() const { return QuadraticPolyK(t_.a.conj(), t_.b.conj(), t_.c.conj()); }

    /// Throws PreconditionError unless the discriminant is positive, and
    /// DegenerateSeedError when it is a square in K.
    void require_quartic() const;

    std::string to_string() const { return t_.to_string(); }

private:
    PolyTriple t_;
};

/// Hashable identity of a complete quotient: (A, B, branch) after fixing the
/// overall sign of the triple so that A > 0. (A, B, C) and (-A, -B, -C) with
/// opposite branches are the same real number.
struct StateKey {
    KElement a, b;
    int branch;

    friend bool operator==(const StateKey& x, const StateKey& y) {
        return x.branch == y.branch && x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const StateKey& x, const StateKey& y) {
        if (int c = KElement::compare_repr(x.a, y.a)) return c < 0;
        if (int c = KElement::compare_repr(x.b, y.b)) return c < 0;
        return x.branch < y.branch;
    }
};

/// Complete quotient xi_n = (-B_n + branch sqrt(delta)) / (2 A_n), where
/// delta is the seed discriminant, conserved along the trajectory.
class QuotientState {
public:
    const PolyTriple& poly() const noexcept { return poly_; }
    int branch() const noexcept { return branch_; }
    const KElement& delta() const noexcept { return delta_; }
    const FieldSpec& spec() const noexcept { return delta_.spec(); }

    SurdElement value() const;
    StateKey key() const;

    friend bool operator==(const QuotientState& x, const QuotientState& y) { return x.key() == y.key(); }

private:
    friend QuotientState make_state(const QuadraticPolyK& poly, int branch);
    friend QuotientState step_state(const QuotientState& s, const KElement& a);
    QuotientState(PolyTriple poly, int branch, KElement delta)
        : poly_(std::move(poly)), branch_(branch), delta_(std::move(delta)) {}

    PolyTriple poly_;
    int branch_;
    KElement delta_;
};

/// State for the root with the given branch (+1 or -1) of a quartic seed.
QuotientState make_state(const QuadraticPolyK& poly, int branch);

/// State for 1 / (xi_n - a). Throws PreconditionError for non-integral a and
/// InternalError if xi_n = a.
QuotientState step_state(const QuotientState& s, const KElement& a);

/// (A_{n+1}, B_{n+1}, C_{n+1}) from the seed and the Q-pair at index n.
PolyTriple triple_recursion(const QuadraticPolyK& seed, const QPairState& qp);

/// The four embeddings of L = K(sqrt(delta)) into C.
enum class Embedding { id, tau1, sigma_tau2, sigma_tau3 };
inline constexpr std::array<Embedding, 4> kAllEmbeddings = {Embedding::id, Embedding::tau1, Embedding::sigma_tau2,
                                                             Embedding::sigma_tau3};

/// |phi(u)| for every embedding phi, in the order of kAllEmbeddings. When
/// sigma(delta) < 0 the last two are a complex-conjugate pair and share one
/// magnitude, computed from the exact squared modulus in K.
std::array<Interval, 4> embedding_magnitudes(const SurdElement& u, mpfr_prec_t prec);

/// H(xi)^4 = |A sigma(A)| * prod_phi max(1, |phi(xi)|), i.e. the Mahler
/// measure of f * sigma(f).
Interval weil_height_pow4(const QuotientState& s, mpfr_prec_t prec);
Interval weil_height(const QuotientState& s, unsigned precision_bits);
/// Absolute Weil height of an element of K, via its primitive minimal
/// polynomial over Z.
Interval weil_height(const KElement& x, unsigned precision_bits);

/// Coefficients of f * sigma(f) over Z, leading coefficient first.
std::array<Integer, 5> integer_minimal_poly(const QuotientState& s);
/// Max |coefficient| of f * sigma(f).
Integer naive_height(const QuotientState& s);

struct TrajectoryRow {
    std::size_t n = 0;
    PolyTriple triple;
    KElement p, q;
    Interval s_n;             // |xi Q_n - P_n|
    Interval f1, f2;          // products over {id, tau1} and {sigma tau2, sigma tau3}
    Interval q_times_s;       // |Q_n (xi Q_n - P_n)|
    std::optional<Interval> q_ratio;          // |Q_n / Q_{n-1}|, n >= 1
    std::optional<Interval> sigma_q_times_s;  // |sigma(Q_n) (xi' sigma(Q_n) - sigma(P_n))|
    Interval weil;
    Integer naive;
};

/// Rows 0..quotients.size()-1 of the trajectory driven by `quotients` from
/// the seed root with `branch`; xi' is the root of the sigma-seed with
/// `conj_branch` (ignored when sigma(delta) < 0).
std::vector<TrajectoryRow> diagnostics(const QuadraticPolyK& seed, int branch, std::span<const KElement> quotients,
                                       unsigned precision_bits, int conj_branch = 1);

enum class ConjugateClass {
    all_real,                // sigma(delta) > 0
    complex_indeterminate,   // -4 <= sigma(delta) < 0
    complex_reject,          // sigma(delta) < -4: no periodic expansion over K
};

std::string to_string(ConjugateClass c);

/// Root-window test on the first two partial quotients.
struct StartWindowCheck {
    KElement lo, hi;         // (sigma(a0), sigma(a0) + 1/sigma(a1))
    int roots_inside = 0;    // real roots of the sigma-seed inside the window
    bool non_periodic_start = false;
};

struct PreconditionReport {
    KElement sigma_delta;
    Sign sigma_delta_sign;
    ConjugateClass conjugates;
    bool reject = false;
    bool even_period_required = false;
    std::optional<StartWindowCheck> start_window;
    std::vector<std::string> notes;
};

PreconditionReport periodicity_preconditions(const QuadraticPolyK& seed, const std::optional<KElement>& a0 = {},
                                             const std::optional<KElement>& a1 = {});

}  // namespace qcf
