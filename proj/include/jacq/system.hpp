#pragma once

#include <optional>
#include <span>
#include <vector>

#include "jacq/poly.hpp"

namespace jacq {

// A polynomial map F : C^n -> C^n with identity linear part, stored through
// its interaction part W: F_i = z_i - W_i(z) where every W_i collects the
// terms of degree 2..d. The coefficient of a degree-k monomial in W_i is the
// (symmetrized) coupling entry for row i and that index multiset.
class PolySystem {
public:
    // couplings[i-1] = W_i, each over n variables with min degree >= 2 and
    // total degree <= d. d >= 2 may exceed the actual content degree.
    PolySystem(int n, int d, std::vector<Poly> couplings);

    static PolySystem identity(int n, int d = 2);

    int dim() const { return n_; }
    int degree_bound() const { return d_; }

    // Largest total degree present in any W_i; at least 2 by convention.
    int content_degree() const;

    // 1-based row access.
    const Poly& coupling(int i) const { return couplings_.at(i - 1); }
    const std::vector<Poly>& couplings() const { return couplings_; }

    // F_i = z_i - W_i as an explicit polynomial.
    Poly component(int i) const;

    bool operator==(const PolySystem&) const = default;

private:
    int n_;
    int d_;
    std::vector<Poly> couplings_;
};

// Reads a full polynomial tuple back into coupling form, checking that the
// constant term vanishes and the linear part is exactly the identity. An
// explicit degree bound may pad above the content degree.
PolySystem system_from_polys(std::span<const Poly> polys,
                             std::optional<int> declared_degree = std::nullopt);

std::vector<Poly> system_to_polys(const PolySystem& f);

// Entry (i, j) holds dF_j / dz_i.
struct PolyMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Poly> cells;

    PolyMatrix() = default;
    PolyMatrix(int rows, int cols, int nvars);

    Poly& at(int i, int j) { return cells.at(static_cast<std::size_t>(i - 1) * cols + (j - 1)); }
    const Poly& at(int i, int j) const {
        return cells.at(static_cast<std::size_t>(i - 1) * cols + (j - 1));
    }
};

PolyMatrix jacobian_matrix(const PolySystem& f);
Poly jacobian_det(const PolySystem& f);

// Whether det J_F is a (necessarily nonzero) constant.
bool has_constant_jacobian(const PolySystem& f);

// (F o G)_i = F_i(G_1, ..., G_n); both maps must have the same dimension.
// The degree bound of the result is the content degree of the composite.
PolySystem compose_systems(const PolySystem& f, const PolySystem& g);

} // namespace jacq
