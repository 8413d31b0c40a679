#pragma once

#include <vector>

#include "jacq/generators.hpp"
#include "jacq/poly.hpp"
#include "jacq/system.hpp"

namespace jacq::testing {

// The running example (z1 + z2^3, z2); inverse (u1 - u2^3, u2).
inline PolySystem cubic_shear() {
    Poly w1(2);
    w1.add_term(Monomial::var(2, 3), rational(-1));
    return PolySystem(2, 3, {w1, Poly(2)});
}

// (z1 - z2^2, z2 - z1^2): nonconstant Jacobian determinant 1 - 4*z1*z2.
inline PolySystem entangled_pair() {
    Poly w1(2), w2(2);
    w1.add_term(Monomial::var(2, 2), rational(1));
    w2.add_term(Monomial::var(1, 2), rational(1));
    return PolySystem(2, 3, {w1, w2});
}

inline Poly var_cube(int nvars, int v) {
    Poly p(nvars);
    p.add_term(Monomial::var(v, 3), rational(1));
    return p;
}

// Deterministic polynomial sampler for property tests. Degrees range over
// [0, maxdeg], so constants and linear terms do occur.
inline Poly sample_poly(SplitRng& rng, int nvars, int maxdeg, int terms) {
    Poly p(nvars);
    for (int t = 0; t < terms; ++t) {
        int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(maxdeg) + 1));
        std::vector<int> indices;
        for (int k = 0; k < deg; ++k) {
            indices.push_back(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(nvars))));
        }
        long num = static_cast<long>(rng.below(7)) - 3;
        long den = 1 + static_cast<long>(rng.below(2));
        if (num == 0) num = 1;
        p.add_term(Monomial::from_indices(indices), rational(num, den));
    }
    return p;
}

inline std::vector<Poly> sample_subs(SplitRng& rng, int count, int nvars, int maxdeg, int terms) {
    std::vector<Poly> subs;
    for (int i = 0; i < count; ++i) subs.push_back(sample_poly(rng, nvars, maxdeg, terms));
    return subs;
}

} // namespace jacq::testing
