#pragma once

// Random generators shared by the property tests. Every generator draws from
// a caller-owned std::mt19937_64, so each test case is reproducible from its
// fixed seed.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qcf/field.hpp"
#include "qcf/quartic.hpp"
#include "qcf/text.hpp"

namespace qcf::testing {

inline const FieldSpec kGolden{5};

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// a + b*w with integer coordinates in [-height, height].
inline KElement random_integral(std::mt19937_64& rng, std::int64_t height, const FieldSpec& spec = kGolden) {
    return KElement(spec, uniform(rng, -height, height), uniform(rng, -height, height));
}

inline KElement random_nonzero_integral(std::mt19937_64& rng, std::int64_t height,
                                        const FieldSpec& spec = kGolden) {
    for (;;) {
        KElement x = random_integral(rng, height, spec);
        if (!x.is_zero()) return x;
    }
}

/// Rational coordinates p/q with |p| <= height, 1 <= q <= height.
inline KElement random_element(std::mt19937_64& rng, std::int64_t height, const FieldSpec& spec = kGolden) {
    auto coord = [&] { return Rational(uniform(rng, -height, height), uniform(rng, 1, height)); };
    Rational a = coord(), b = coord();
    a.canonicalize();
    b.canonicalize();
    return KElement(spec, a, b);
}

inline std::vector<KElement> random_quotients(std::mt19937_64& rng, std::size_t n, std::int64_t height,
                                              const FieldSpec& spec = kGolden) {
    std::vector<KElement> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(random_nonzero_integral(rng, height, spec));
    return out;
}

/// Seed A x^2 + B x + C whose discriminant is positive and not a square in K;
/// with `all_real`, sigma of the discriminant is as well.
inline QuadraticPolyK random_seed(std::mt19937_64& rng, std::int64_t bound, bool all_real,
                                  const FieldSpec& spec = kGolden) {
    for (;;) {
        const KElement a = random_integral(rng, bound, spec);
        if (a.is_zero()) continue;
        const QuadraticPolyK poly(a, random_integral(rng, bound, spec), random_integral(rng, bound, spec));
        const KElement delta = poly.discriminant();
        if (sign_of(delta) != Sign::positive || is_square_in_k(delta)) continue;
        if (all_real) {
            const KElement sdelta = delta.conj();
            if (sign_of(sdelta) != Sign::positive || is_square_in_k(sdelta)) continue;
        }
        return poly;
    }
}

inline int random_branch(std::mt19937_64& rng) { return uniform(rng, 0, 1) == 0 ? 1 : -1; }

inline KElement elem(const char* text, const FieldSpec& spec = kGolden) { return parse_element(text, spec); }

/// The worked-example seed x^2 - 2x - beta^2 over Q(sqrt 5).
inline QuadraticPolyK golden_seed() { return QuadraticPolyK(elem("1"), elem("-2"), elem("-1-w")); }

}  // namespace qcf::testing
