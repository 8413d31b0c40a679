#include "jacq/system.hpp"

#include <algorithm>

#include "jacq/errors.hpp"
#include "jacq/matrix_det.hpp"

namespace jacq {

PolySystem::PolySystem(int n, int d, std::vector<Poly> couplings)
    : n_(n), d_(d), couplings_(std::move(couplings)) {
    if (n < 1) throw InputError("system dimension must be >= 1");
    if (d < 2) throw InputError("degree bound must be >= 2");
    if (static_cast<int>(couplings_.size()) != n) {
        throw InputError("coupling row count must equal the dimension");
    }
    for (const auto& w : couplings_) {
        if (w.nvars() != n) throw InputError("coupling row has wrong variable count");
        if (w.is_zero()) continue;
        if (w.min_degree() < 2) throw InputError("coupling row has terms below degree 2");
        if (w.total_degree() > d) throw InputError("coupling row exceeds the degree bound");
    }
}

PolySystem PolySystem::identity(int n, int d) {
    return PolySystem(n, d, std::vector<Poly>(n, Poly(n)));
}

int PolySystem::content_degree() const {
    int deg = 2;
    for (const auto& w : couplings_) {
        if (!w.is_zero()) deg = std::max(deg, w.total_degree());
    }
    return deg;
}

Poly PolySystem::component(int i) const {
    return Poly::variable(n_, i) - coupling(i);
}

PolySystem system_from_polys(std::span<const Poly> polys, std::optional<int> declared_degree) {
    int n = static_cast<int>(polys.size());
    if (n < 1) throw InputError("system dimension must be >= 1");
    std::vector<Poly> couplings;
    couplings.reserve(polys.size());
    for (int i = 1; i <= n; ++i) {
        const Poly& p = polys[i - 1];
        if (p.nvars() != n) throw InputError("component has wrong variable count");
        if (p.constant_term() != 0) throw InputError("component has a nonzero constant term");
        Poly w(n);
        for (const auto& [m, c] : p.terms()) {
            int deg = m.degree();
            if (deg == 1) {
                bool diagonal = m.exponent(i) == 1;
                if (!diagonal || c != 1) {
                    throw InputError("linear part is not the identity");
                }
            } else {
                w.add_term(m, -c);
            }
        }
        couplings.push_back(std::move(w));
    }
    int content = 2;
    for (const auto& w : couplings) {
        if (!w.is_zero()) content = std::max(content, w.total_degree());
    }
    int d = declared_degree.value_or(content);
    if (d < content) throw InputError("declared degree below the content degree");
    return PolySystem(n, d, std::move(couplings));
}

std::vector<Poly> system_to_polys(const PolySystem& f) {
    std::vector<Poly> out;
    out.reserve(f.dim());
    for (int i = 1; i <= f.dim(); ++i) out.push_back(f.component(i));
    return out;
}

PolyMatrix::PolyMatrix(int rows_, int cols_, int nvars)
    : rows(rows_), cols(cols_), cells(static_cast<std::size_t>(rows_) * cols_, Poly(nvars)) {}

PolyMatrix jacobian_matrix(const PolySystem& f) {
    int n = f.dim();
    PolyMatrix jac(n, n, n);
    for (int j = 1; j <= n; ++j) {
        Poly fj = f.component(j);
        for (int i = 1; i <= n; ++i) {
            jac.at(i, j) = derivative(fj, i);
        }
    }
    return jac;
}

Poly jacobian_det(const PolySystem& f) {
    return det(jacobian_matrix(f));
}

bool has_constant_jacobian(const PolySystem& f) {
    Poly d = jacobian_det(f);
    return d.is_constant() && !d.is_zero();
}

PolySystem compose_systems(const PolySystem& f, const PolySystem& g) {
    if (f.dim() != g.dim()) throw InputError("dimension mismatch in composition");
    std::vector<Poly> subs = system_to_polys(g);
    std::vector<Poly> out;
    out.reserve(f.dim());
    for (int i = 1; i <= f.dim(); ++i) {
        out.push_back(compose(f.component(i), subs));
    }
    return system_from_polys(out);
}

} // namespace jacq
