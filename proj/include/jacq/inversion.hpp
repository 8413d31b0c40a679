#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "jacq/series.hpp"
#include "jacq/system.hpp"

namespace jacq {

struct InversionLimits {
    // Cap on the classical degree bound d^(n-1); exceeding it without an
    // explicit override is a resource error.
    long max_inverse_order = 4096;
    // User-requested cap on the search order. Below the classical bound this
    // trades completeness for speed.
    std::optional<int> order_override;
    // Term-pair budget for the exact composition certificates.
    long compose_budget = 40'000'000;
    // Degree cap when eliminating the non-parameter coordinates.
    int partial_cutoff = 64;
};

struct InversionProgress {
    int evaluations = 0;   // coupling evaluations performed so far
    int order_reached = 0; // iterate is exact through this total degree
    long term_count = 0;   // current iterate size across components
};

// Invoked after every coupling evaluation; return false to abort the run,
// which surfaces as CancelledError.
using ProgressHook = std::function<bool(const InversionProgress&)>;

// Order-N truncation of the compositional inverse of F, obtained as the fixed
// point of G = u + W(G). The returned series is exact through the order: each
// iterate is a truncation of the true inverse, never a superset of it.
SeriesVec formal_inverse(const PolySystem& f, int order, const ProgressHook& hook = {});

// Same fixed point with the sources beyond nprime pinned to zero, so the
// result lives over nprime variables. Components keep the full count n.
SeriesVec formal_inverse_restricted(const PolySystem& f, int nprime, int order,
                                    const ProgressHook& hook = {});

enum class InverseKind { polynomial, formal_only };

struct InverseReport {
    InverseKind kind = InverseKind::formal_only;
    SeriesVec inverse;
    int order_used = 0;
    // Whether order_used covers the classical degree bound, making a
    // formal_only verdict a definitive negative.
    bool searched_full_bound = false;
    // Two-sided exact composition certificate F(G) = G(F) = id.
    bool verified = false;
};

// Decides polynomial invertibility by searching up to the classical degree
// bound and certifying candidates by exact composition in both orders.
InverseReport polynomial_inverse(const PolySystem& f, const InversionLimits& limits = {},
                                 const ProgressHook& hook = {});

// Coordinate split: the first nprime variables are parameters, the rest are
// unknowns to eliminate.
struct PartialSplit {
    int nprime = 0;
};

// Solves the non-parameter rows of F = 0 for the tail coordinates as
// polynomials in the parameters. Requires those rows to have no terms linear
// in the tail coordinates. Empty when the elimination does not terminate
// polynomially within the cutoff.
std::optional<std::vector<Poly>> partial_inverse_at_zero(const PolySystem& f, PartialSplit split,
                                                         const InversionLimits& limits = {});

// Whether the Jacobian determinant of F becomes a nonzero constant after
// eliminating the tail coordinates along the zero set of the tail rows.
bool has_constant_jacobian_on_slice(const PolySystem& f, PartialSplit split,
                                    const InversionLimits& limits = {});

enum class TriState { yes, no_at_cutoff, inconclusive };

// Whether the inverse of F restricted to the parameter slice is polynomial.
// yes carries an exact composition certificate; no_at_cutoff certifies that
// no polynomial restriction of degree <= cutoff exists; inconclusive means
// the certificate ran out of budget.
TriState restricted_inverse_polynomial(const PolySystem& f, PartialSplit split, int cutoff,
                                       const InversionLimits& limits = {},
                                       SeriesVec* candidate = nullptr);

} // namespace jacq
