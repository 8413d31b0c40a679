#pragma once

#include <cstdint>
#include <vector>

#include "jacq/system.hpp"

namespace jacq {

// Deterministic splitmix64 stream. Hand-rolled on purpose: the standard
// distributions are implementation-defined, and generated corpora must be
// reproducible byte for byte across platforms.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    // Uniform in [0, bound) by rejection; bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    // Bernoulli draw with probability numer/denom.
    bool chance(std::uint64_t numer, std::uint64_t denom);

private:
    std::uint64_t state_;
};

// One triangular step: adds a polynomial in the other coordinates to a
// single target coordinate.
struct Transvection {
    int target = 0; // 1-based
    Poly shift;     // over n variables, must not involve the target
};

// The map that is the identity except F_target = z_target + shift. Its exact
// inverse is the same map with the shift negated.
PolySystem elementary_system(int n, const Transvection& t);

struct TameSystem {
    PolySystem system;
    PolySystem inverse;
    std::vector<Transvection> steps;
};

// Composite of random elementary maps, with the exact inverse maintained
// alongside step by step. Candidate steps that would push the composite or
// its inverse past maxdeg are discarded, so the chain may stop short of the
// requested length.
TameSystem random_tame(int n, int steps, int maxdeg, std::uint64_t seed);

// Independent coefficient draws: every monomial slot of degree 2..d is
// filled with probability `density` with a small nonzero rational. Most
// draws are not polynomially invertible, which makes this the negatives-rich
// corpus. density must lie in (0, 1].
PolySystem random_system(int n, int d, const Rational& density, std::uint64_t seed);

} // namespace jacq
