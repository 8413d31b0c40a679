#include "jacq/inversion.hpp"

#include <algorithm>

#include "jacq/errors.hpp"
#include "jacq/matrix_det.hpp"

namespace jacq {

namespace {

long total_terms(const std::vector<Poly>& polys) {
    long t = 0;
    for (const auto& p : polys) t += static_cast<long>(p.term_count());
    return t;
}

std::vector<Poly> truncate_all(std::vector<Poly> polys, int order) {
    for (auto& p : polys) p = truncate(std::move(p), order);
    return polys;
}

// Picard iteration for G = source + W(G), truncated at `order`. The window of
// trusted degrees grows by at least one per coupling evaluation: if the
// iterate matches the true series through degree w, the next evaluation is
// exact through degree w + 1, because every coupling monomial is at least
// quadratic in components of positive valuation. Jumping the window straight
// to the lowest degree where the update differs is therefore sound, and an
// update that changes nothing at any degree <= order is the exact fixed
// point, so the loop can stop early for polynomial inverses.
std::vector<Poly> picard_fixed_point(const PolySystem& f, std::vector<Poly> source, int order,
                                     const ProgressHook& hook) {
    std::vector<Poly> g = truncate_all(source, std::min(order, 1));
    int evaluations = 0;
    int window = std::min(order, 1);
    while (true) {
        std::vector<Poly> update = compose_many(f.couplings(), g, order);
        ++evaluations;
        for (std::size_t i = 0; i < update.size(); ++i) {
            update[i] += source[i];
            update[i] = truncate(std::move(update[i]), order);
        }
        if (update == g) break;
        int lowest_change = order;
        for (std::size_t i = 0; i < update.size(); ++i) {
            Poly diff = update[i] - g[i];
            if (!diff.is_zero()) lowest_change = std::min(lowest_change, diff.min_degree());
        }
        window = lowest_change;
        g = truncate_all(std::move(update), window);
        if (hook && !hook({evaluations, window, total_terms(g)})) {
            throw CancelledError();
        }
    }
    if (hook && !hook({evaluations, order, total_terms(g)})) {
        throw CancelledError();
    }
    return g;
}

std::vector<Poly> inverse_source(const PolySystem& f, int nprime, int order) {
    std::vector<Poly> source;
    source.reserve(f.dim());
    for (int i = 1; i <= f.dim(); ++i) {
        if (i <= nprime && order >= 1) {
            source.push_back(Poly::variable(nprime, i));
        } else {
            source.push_back(Poly(nprime));
        }
    }
    return source;
}

} // namespace

SeriesVec formal_inverse(const PolySystem& f, int order, const ProgressHook& hook) {
    if (order < 0) throw InputError("negative truncation order");
    SeriesVec s;
    s.order = order;
    s.components = picard_fixed_point(f, inverse_source(f, f.dim(), order), order, hook);
    return s;
}

SeriesVec formal_inverse_restricted(const PolySystem& f, int nprime, int order,
                                    const ProgressHook& hook) {
    if (order < 0) throw InputError("negative truncation order");
    if (nprime < 0 || nprime > f.dim()) throw InputError("parameter split out of range");
    SeriesVec s;
    s.order = order;
    s.components = picard_fixed_point(f, inverse_source(f, nprime, order), order, hook);
    return s;
}

namespace {

std::optional<long> classical_bound(const PolySystem& f, long cap) {
    long b = 1;
    for (int i = 1; i < f.dim(); ++i) {
        if (b > cap / f.content_degree()) return std::nullopt;
        b *= f.content_degree();
    }
    return b;
}

// F(P) with F_i = z_i - W_i, evaluated exactly.
std::vector<Poly> apply_system_exact(const PolySystem& f, const std::vector<Poly>& p,
                                     MulBudget* budget) {
    std::vector<Poly> w = compose_many(f.couplings(), p, -1, budget);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = p[i] - w[i];
    return w;
}

bool is_identity_tuple(const std::vector<Poly>& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != Poly::variable(p[i].nvars(), static_cast<int>(i) + 1)) return false;
    }
    return true;
}

} // namespace

InverseReport polynomial_inverse(const PolySystem& f, const InversionLimits& limits,
                                 const ProgressHook& hook) {
    std::optional<long> bound = classical_bound(f, limits.max_inverse_order);
    int order;
    if (limits.order_override) {
        long requested = *limits.order_override;
        if (requested < 1) throw InputError("inverse order cap must be >= 1");
        order = static_cast<int>(bound ? std::min(*bound, requested) : requested);
    } else {
        if (!bound) {
            throw ResourceLimitError("classical degree bound exceeds the configured cap");
        }
        order = static_cast<int>(*bound);
    }

    InverseReport report;
    report.inverse = formal_inverse(f, order, hook);
    report.order_used = order;
    report.searched_full_bound = bound && order >= *bound;

    MulBudget budget{limits.compose_budget};
    try {
        std::vector<Poly> forward = apply_system_exact(f, report.inverse.components, &budget);
        bool ok = is_identity_tuple(forward);
        if (ok) {
            std::vector<Poly> f_polys = system_to_polys(f);
            std::vector<Poly> backward =
                compose_many(report.inverse.components, f_polys, -1, &budget);
            ok = is_identity_tuple(backward);
        }
        report.verified = ok;
        report.kind = ok ? InverseKind::polynomial : InverseKind::formal_only;
    } catch (const ResourceLimitError&) {
        if (report.searched_full_bound) throw;
        report.kind = InverseKind::formal_only;
        report.verified = false;
    }
    return report;
}

namespace {

// Tail rows must have no terms of total tail-degree exactly one, so that the
// tail system is a contraction in the parameter-degree grading.
void check_tail_rows(const PolySystem& f, int nprime) {
    for (int r = nprime + 1; r <= f.dim(); ++r) {
        for (const auto& [m, c] : f.coupling(r).terms()) {
            int tail_degree = 0;
            for (const auto& [v, e] : m.factors()) {
                if (v > nprime) tail_degree += e;
            }
            if (tail_degree == 1) {
                throw InputError("tail rows couple linearly in the tail coordinates");
            }
        }
    }
}

} // namespace

std::optional<std::vector<Poly>> partial_inverse_at_zero(const PolySystem& f, PartialSplit split,
                                                         const InversionLimits& limits) {
    int n = f.dim();
    int nprime = split.nprime;
    if (nprime < 0 || nprime > n) throw InputError("parameter split out of range");
    check_tail_rows(f, nprime);
    int tail = n - nprime;
    if (tail == 0) return std::vector<Poly>{};

    std::vector<Poly> tail_rows(f.couplings().begin() + nprime, f.couplings().end());
    auto substitution = [&](const std::vector<Poly>& x) {
        std::vector<Poly> subs;
        subs.reserve(n);
        for (int v = 1; v <= nprime; ++v) subs.push_back(Poly::variable(nprime, v));
        for (const auto& p : x) subs.push_back(p);
        return subs;
    };

    int cutoff = limits.partial_cutoff;
    std::vector<Poly> x(tail, Poly(nprime));
    for (int step = 0; step <= cutoff + 1; ++step) {
        std::vector<Poly> next = compose_many(tail_rows, substitution(x), cutoff);
        if (next == x) break;
        x = std::move(next);
    }

    // A stalled iterate is the fixed point of the truncated map; whether it
    // solves the untruncated rows decides polynomial termination.
    MulBudget budget{limits.compose_budget};
    std::vector<Poly> residual = compose_many(tail_rows, substitution(x), -1, &budget);
    for (int t = 0; t < tail; ++t) {
        if (residual[t] != x[t]) return std::nullopt;
    }
    return x;
}

bool has_constant_jacobian_on_slice(const PolySystem& f, PartialSplit split, const InversionLimits& limits) {
    auto solution = partial_inverse_at_zero(f, split, limits);
    if (!solution) return false;
    std::vector<Poly> subs;
    subs.reserve(f.dim());
    for (int v = 1; v <= split.nprime; ++v) subs.push_back(Poly::variable(split.nprime, v));
    for (const auto& p : *solution) subs.push_back(p);
    Poly composed = compose(jacobian_det(f), subs);
    return composed.is_constant() && !composed.is_zero();
}

TriState restricted_inverse_polynomial(const PolySystem& f, PartialSplit split, int cutoff,
                    const InversionLimits& limits, SeriesVec* candidate) {
    if (cutoff < 1) throw InputError("cutoff must be >= 1");
    int nprime = split.nprime;
    if (nprime < 0 || nprime > f.dim()) throw InputError("parameter split out of range");
    SeriesVec h = formal_inverse_restricted(f, nprime, cutoff + 1);
    if (candidate) *candidate = h;

    // Exact certificate: F(H) must reproduce the restricted sources. If the
    // candidate fails, any polynomial restricted inverse of degree <= cutoff
    // would have to coincide with the truncation H, so failure is definitive
    // up to the cutoff.
    MulBudget budget{limits.compose_budget};
    try {
        std::vector<Poly> image = apply_system_exact(f, h.components, &budget);
        std::vector<Poly> target = inverse_source(f, nprime, 1);
        if (image == target) return TriState::yes;
        return TriState::no_at_cutoff;
    } catch (const ResourceLimitError&) {
        return TriState::inconclusive;
    }
}

} // namespace jacq
