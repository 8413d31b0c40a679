#pragma once

#include "jacq/system.hpp"

namespace jacq {

// Symbolic determinant. Dispatches on size: expansion by minors with shared
// subproblems for small matrices, fraction-free elimination above that.
Poly det(const PolyMatrix& m);

// Expansion by minors over column subsets, memoized. Exponential in the
// dimension; intended for matrices up to about 12 rows.
Poly det_cofactor(const PolyMatrix& m);

// Bareiss fraction-free elimination with exact polynomial divisions.
Poly det_bareiss(const PolyMatrix& m);

} // namespace jacq
