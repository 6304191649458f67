#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcf/cf.hpp"
#include "qcf/quartic.hpp"
#include "qcf/surd.hpp"

namespace qcf {

// Expansion of a real quartic number xi, quadratic over K = Q(sqrt 5) with all
// conjugates real, driven jointly by xi and a chosen real conjugate xi'. Each
// step picks a in O_K = Z[beta] with (a, sigma(a)) within sqrt(9/10) of
// (xi_n, xi'_n); the circumradius of the lattice cell of v(O_K) = {(x, sigma x)}
// is exactly sqrt(9/10) < 1, so both complete quotients stay above sqrt(10/9)
// in absolute value and the expansion is eventually periodic.

/// Squared distance bound for a chosen lattice point.
inline const Rational kDistanceBoundSq{9, 10};
/// Lower bound for |xi_n|^2 and |xi'_n|^2 once n >= 1.
inline const Rational kQuotientBoundSq{10, 9};

struct PairState {
    QuotientState xi;
    QuotientState xi_prime;
    std::size_t index = 0;

    using Key = std::pair<StateKey, StateKey>;
    Key key() const { return {xi.key(), xi_prime.key()}; }
};

struct ExpansionConfig {
    std::size_t max_steps = 10000;
};

/// Solution of x + y beta = xi_n, x - y/beta = xi'_n.
struct LatticeCoords {
    MixedSurd x_tilde;
    MixedSurd y_tilde;
    Interval x_interval;
    Interval y_interval;
};

struct ChosenQuotient {
    KElement a;
    /// |xi_n - a|^2 + |xi'_n - sigma(a)|^2
    Interval distance_sq;
    /// Position in the candidate order (floor,floor), (floor,ceil),
    /// (ceil,floor), (ceil,ceil) of the accepted candidate.
    std::size_t candidate = 0;
};

/// Per-step record of the exact invariant checks.
struct StepCheck {
    KElement a;
    Interval distance_sq;
    bool distance_ok = false;        // distance^2 < 9/10
    bool xi_bound_ok = false;        // |xi_n|^2 > 10/9 (vacuous at n = 0)
    bool xi_prime_bound_ok = false;  // |xi'_n|^2 > 10/9 (vacuous at n = 0)
};

struct ExpansionResult {
    QuadraticPolyK seed;
    int branch = 1;
    int conj_branch = 1;
    CFExpansion expansion;
    std::vector<PairState::Key> states;
    std::size_t cycle_start = 0;
    std::size_t steps = 0;
    std::vector<StepCheck> checks;
    bool verified = false;
};

LatticeCoords lattice_coords(const PairState& p);

/// Throws InternalError (NoCandidate) when none of the four corners works.
ChosenQuotient choose_quotient(const PairState& p);

/// Runs the expansion until the pair state repeats. Throws PreconditionError
/// for seeds outside the algorithm's domain and MaxStepsExceeded on the cap.
/// `verified` is filled by verify_roundtrip.
ExpansionResult expand_pair(const QuadraticPolyK& seed, int branch, int conj_branch,
                            const ExpansionConfig& cfg = {});

struct RoundtripReport {
    bool ok = false;
    std::string mismatch;
};

/// Evaluates the detected expansion back and compares with the seed root,
/// and its sigma-image with the chosen conjugate, by exact surd equality.
RoundtripReport verify_roundtrip(const ExpansionResult& r, const QuadraticPolyK& seed, int branch);

struct CoveringRadius {
    std::int64_t d;
    Rational r_squared;
    Interval r;
    bool usable;  // r < 1
};

/// Covering radius of v(O_K) for K = Q(sqrt D). Throws PreconditionError for
/// non-squarefree D.
CoveringRadius covering_radius(std::int64_t d, unsigned precision_bits = 64);

}  // namespace qcf
