#pragma once

#include <vector>

#include "jacq/series.hpp"
#include "jacq/system.hpp"

namespace jacq {

// Index multisets for a complex Gaussian moment E[field... conjugate...].
struct MomentSpec {
    std::vector<int> fields;
    std::vector<int> conjugates;
};

// Moment under the unit-covariance complex Gaussian pairing. The pairing
// matrix is a Kronecker delta, so the moment is the permanent of a block
// matrix of ones and collapses to one factorial per index.
Rational complex_gaussian_moment(const MomentSpec& spec);

// E[x^p] under the unit-variance real Gaussian, read off by differentiating
// the truncated exponential series symbolically; 0 for odd p.
Rational real_gaussian_moment_power(unsigned long p);

// E[x^(2k)].
Rational real_gaussian_moment(unsigned long k);

struct WickLimits {
    // Cap on Gaussian moment evaluations charged to any single expansion
    // order of the output series.
    long max_moments_per_coefficient = 2'000'000;
};

// A formal series in the source variables, trusted through total degree
// `order`.
struct CouplingSeries {
    Poly series;
    int order = 0;

    bool operator==(const CouplingSeries&) const = default;
};

// Source expansion of the normalization integral of the field theory whose
// action is built from F: vertices are coupling entries, propagators are unit
// Kronecker deltas, and each closed pairing contributes its product of
// couplings with symmetry factors. sources limits which components carry
// external sources; the default -1 means all of them.
CouplingSeries partition_series(const PolySystem& f, int order, int sources = -1,
                                const WickLimits& limits = {});

// Expansion of the normalized one-point function of component i: the sum
// over pairings with one external field insertion, divided by the partition
// series. Reproduces the i-th component of the compositional inverse.
CouplingSeries one_point_series(const PolySystem& f, int i, int order, int sources = -1,
                                const WickLimits& limits = {});

// Order-by-order comparison of the two expansions of the sextic toy
// integral: the direct one and the one obtained by trading the sextic vertex
// for a cubic coupling to an auxiliary field. Coefficients are reported per
// power of the coupling.
struct SexticIdentityReport {
    int order = 0;
    bool match = false;
    std::vector<Rational> direct;
    std::vector<Rational> rewritten;
};

SexticIdentityReport sextic_intermediate_identity(int order);

} // namespace jacq
