#pragma once

#include <vector>

#include "jacq/poly.hpp"

namespace jacq {

// A vector of truncated formal power series, one polynomial per component,
// all trusted up to and including total degree `order` in the source
// variables. Terms above the order are never stored.
struct SeriesVec {
    std::vector<Poly> components;
    int order = 0;

    // The identity series (u_1, ..., u_n) in n variables.
    static SeriesVec identity(int n, int order);

    int nvars() const { return components.empty() ? 0 : components.front().nvars(); }
    bool operator==(const SeriesVec&) const = default;
};

SeriesVec truncate(SeriesVec s, int order);

// Sets the variables above nprime to zero and renumbers the survivors, so the
// result lives over nprime variables. Component count is unchanged.
SeriesVec restrict_sources(const SeriesVec& s, int nprime);

// Coefficient-recursive division of truncated series; the divisor must have a
// nonzero constant term.
Poly series_divide(const Poly& num, const Poly& den, int order);
Poly series_reciprocal(const Poly& den, int order);

} // namespace jacq
