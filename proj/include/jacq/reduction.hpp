#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacq/inversion.hpp"
#include "jacq/system.hpp"

namespace jacq {

// Bookkeeping for one degree-lowering step. The reduced system lives over
// n(n+1) coordinates: the first n keep their meaning, and the pair (i, j)
// with 1 <= i, j <= n owns the auxiliary coordinate n + (i-1)*n + j.
struct ReductionRecord {
    std::optional<PolySystem> original;
    PolySystem reduced;
    int base_dim = 0;

    int aux_coordinate(int i, int j) const { return base_dim + (i - 1) * base_dim + j; }
    PartialSplit split() const { return {base_dim}; }
};

struct ReductionLimits {
    int max_dim = 2000;
};

// Lowers the degree bound from d to d-1 at the price of n(n+1) coordinates.
// Top-degree terms move to the auxiliary rows keyed by their smallest index;
// the base rows pick up one bilinear term per (row, index) pair.
ReductionRecord lower_degree(const PolySystem& f);

// Substitutes the auxiliary rows back into the base rows, undoing the
// coordinate doubling. Inverse of lower_degree on its image up to the degree
// bound, and meaningful on any record whose auxiliary rows only involve base
// coordinates.
PolySystem eliminate_auxiliary(const ReductionRecord& rec);

// Recognizes reduced systems structurally and reconstructs their source.
// Empty when ftilde is not the image of any degree-(d+1) system.
std::optional<PolySystem> reduction_preimage(const PolySystem& ftilde, int n);

// Chain of reductions down to a quadratic system. Throws ResourceLimitError
// when an intermediate dimension would exceed the cap.
std::vector<ReductionRecord> reduce_to_quadratic(const PolySystem& f,
                                                 const ReductionLimits& limits = {});

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool ok = false;
};

// Cross-validates one reduction step against the direct predicates on F:
// constancy of the Jacobian determinant transports along the reduction, and
// the restricted inverse of the reduced system reproduces both the inverse
// of F and the eliminated auxiliary coordinates.
VerificationReport verify_reduction(const PolySystem& f, int cutoff,
                                    const InversionLimits& limits = {});

} // namespace jacq
