#include "jacq/series.hpp"

#include "jacq/errors.hpp"

namespace jacq {

SeriesVec SeriesVec::identity(int n, int order) {
    SeriesVec s;
    s.order = order;
    s.components.reserve(n);
    for (int i = 1; i <= n; ++i) {
        Poly p(n);
        if (order >= 1) p = Poly::variable(n, i);
        s.components.push_back(std::move(p));
    }
    return s;
}

SeriesVec truncate(SeriesVec s, int order) {
    for (auto& c : s.components) c = truncate(std::move(c), order);
    s.order = order;
    return s;
}

SeriesVec restrict_sources(const SeriesVec& s, int nprime) {
    int n = s.nvars();
    if (nprime < 0 || nprime > n) throw InputError("parameter split out of range");
    std::vector<Poly> subs;
    subs.reserve(n);
    for (int v = 1; v <= n; ++v) {
        subs.push_back(v <= nprime ? Poly::variable(nprime, v) : Poly(nprime));
    }
    SeriesVec out;
    out.order = s.order;
    out.components.reserve(s.components.size());
    for (const auto& c : s.components) {
        out.components.push_back(compose(c, subs));
    }
    return out;
}

Poly series_divide(const Poly& num, const Poly& den, int order) {
    if (num.nvars() != den.nvars()) throw InputError("variable count mismatch");
    Rational c0 = den.constant_term();
    if (c0 == 0) throw InputError("series division requires a unit constant term");
    Poly q(num.nvars());
    for (int m = 0; m <= order; ++m) {
        Poly qm = homogeneous_part(num, m);
        for (int j = 0; j < m; ++j) {
            Poly hj = homogeneous_part(q, j);
            if (hj.is_zero()) continue;
            Poly dj = homogeneous_part(den, m - j);
            if (dj.is_zero()) continue;
            qm -= hj * dj;
        }
        q += qm * (1 / c0);
    }
    return q;
}

Poly series_reciprocal(const Poly& den, int order) {
    return series_divide(Poly::constant(den.nvars(), 1), den, order);
}

} // namespace jacq
