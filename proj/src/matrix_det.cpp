#include "jacq/matrix_det.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "jacq/errors.hpp"

namespace jacq {

namespace {

void require_square(const PolyMatrix& m) {
    if (m.rows != m.cols) throw InputError("determinant of a non-square matrix");
    if (m.rows < 1) throw InputError("determinant of an empty matrix");
}

int matrix_nvars(const PolyMatrix& m) {
    return m.cells.empty() ? 0 : m.cells.front().nvars();
}

} // namespace

Poly det_cofactor(const PolyMatrix& m) {
    require_square(m);
    int n = m.rows;
    if (n > 20) throw InputError("cofactor expansion limited to 20 rows");
    int nvars = matrix_nvars(m);

    // cache[mask] = determinant of the submatrix formed by the last
    // popcount(mask) rows and the column set encoded in mask.
    std::vector<std::optional<Poly>> cache(std::size_t(1) << n);
    cache[0] = Poly::constant(nvars, 1);

    auto solve = [&](auto&& self, std::uint32_t mask) -> const Poly& {
        auto& slot = cache[mask];
        if (slot) return *slot;
        int k = std::popcount(mask);
        int row = n - k + 1;
        Poly acc(nvars);
        int position = 0;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1, ++position) {
            int col = std::countr_zero(rest) + 1;
            const Poly& entry = m.at(row, col);
            if (!entry.is_zero()) {
                Poly minor = entry * self(self, mask & ~(std::uint32_t(1) << (col - 1)));
                if (position % 2 == 0) {
                    acc += minor;
                } else {
                    acc -= minor;
                }
            }
        }
        slot = std::move(acc);
        return *slot;
    };

    return solve(solve, (std::uint32_t(1) << n) - 1);
}

Poly det_bareiss(const PolyMatrix& m) {
    require_square(m);
    int n = m.rows;
    int nvars = matrix_nvars(m);
    PolyMatrix a = m;
    Poly prev = Poly::constant(nvars, 1);
    int sign = 1;

    for (int k = 1; k < n; ++k) {
        // Pick the structurally cheapest nonzero pivot in column k.
        int pivot = 0;
        auto cost = [](const Poly& p) {
            return std::tuple(p.is_constant() ? 0 : 1, p.term_count(), p.total_degree());
        };
        for (int i = k; i <= n; ++i) {
            const Poly& cand = a.at(i, k);
            if (cand.is_zero()) continue;
            if (pivot == 0 || cost(cand) < cost(a.at(pivot, k))) pivot = i;
        }
        if (pivot == 0) return Poly(nvars);
        if (pivot != k) {
            for (int j = k; j <= n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i <= n; ++i) {
            for (int j = k + 1; j <= n; ++j) {
                Poly num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = divexact(num, prev);
            }
            a.at(i, k) = Poly(nvars);
        }
        prev = a.at(k, k);
    }
    Poly result = a.at(n, n);
    return sign < 0 ? -result : result;
}

Poly det(const PolyMatrix& m) {
    require_square(m);
    return m.rows <= 12 ? det_cofactor(m) : det_bareiss(m);
}

} // namespace jacq
