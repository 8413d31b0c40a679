#include "jacq/reduction.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "jacq/errors.hpp"
#include "jacq/matrix_det.hpp"

namespace jacq {

ReductionRecord lower_degree(const PolySystem& f) {
    int n = f.dim();
    int d = f.degree_bound();
    if (d < 3) throw InputError("degree bound must be >= 3 to lower");
    int big = n * (n + 1);

    std::vector<Poly> rows(big, Poly(big));
    auto aux = [n](int i, int j) { return n + (i - 1) * n + j; };

    for (int i = 1; i <= n; ++i) {
        for (const auto& [m, c] : f.coupling(i).terms()) {
            if (m.degree() == d) {
                // Top-degree terms migrate to the auxiliary row keyed by the
                // smallest index; one factor is peeled off as the key.
                int j = m.min_var();
                rows[aux(i, j) - 1].add_term(m.without_one(j), c);
            } else {
                rows[i - 1].add_term(m, c);
            }
        }
        for (int j = 1; j <= n; ++j) {
            Monomial bilinear = Monomial::from_indices(std::array{j, aux(i, j)});
            rows[i - 1].add_term(bilinear, 1);
        }
    }

    return {f, PolySystem(big, d - 1, std::move(rows)), n};
}

namespace {

void check_record_shape(const ReductionRecord& rec) {
    int n = rec.base_dim;
    if (n < 1) throw InputError("malformed record: base dimension");
    if (rec.reduced.dim() != n * (n + 1)) {
        throw InputError("malformed record: reduced dimension");
    }
    for (int r = n + 1; r <= rec.reduced.dim(); ++r) {
        for (const auto& [m, c] : rec.reduced.coupling(r).terms()) {
            if (m.max_var() > n) {
                throw InputError("malformed record: auxiliary rows must only use base coordinates");
            }
        }
    }
}

} // namespace

PolySystem eliminate_auxiliary(const ReductionRecord& rec) {
    check_record_shape(rec);
    int n = rec.base_dim;
    int big = rec.reduced.dim();

    std::vector<Poly> subs;
    subs.reserve(big);
    for (int v = 1; v <= n; ++v) subs.push_back(Poly::variable(n, v));
    for (int r = n + 1; r <= big; ++r) {
        // Auxiliary rows read z_r - W_r(z_1..z_n) = 0, so their value on the
        // graph is the coupling itself, renumbered down to n variables.
        Poly value(n);
        for (const auto& [m, c] : rec.reduced.coupling(r).terms()) {
            value.add_term(m, c);
        }
        subs.push_back(std::move(value));
    }

    std::vector<Poly> components;
    components.reserve(n);
    for (int i = 1; i <= n; ++i) {
        components.push_back(compose(rec.reduced.component(i), subs));
    }
    return system_from_polys(components, rec.reduced.degree_bound() + 1);
}

namespace {

// Decodes an auxiliary coordinate back to its (row, index) pair; 0 on base
// coordinates.
struct AuxKey {
    int row = 0;
    int index = 0;
};

AuxKey decode_aux(int coordinate, int n) {
    if (coordinate <= n) return {};
    int offset = coordinate - n - 1;
    return {offset / n + 1, offset % n + 1};
}

} // namespace

std::optional<PolySystem> reduction_preimage(const PolySystem& ftilde, int n) {
    if (n < 1 || ftilde.dim() != n * (n + 1)) {
        throw InputError("dimension is not of the form n*(n+1)");
    }
    int d = ftilde.degree_bound() + 1;
    std::vector<Poly> couplings(n, Poly(n));

    for (int i = 1; i <= n; ++i) {
        std::vector<bool> bilinear_seen(n + 1, false);
        for (const auto& [m, c] : ftilde.coupling(i).terms()) {
            if (m.max_var() <= n) {
                couplings[i - 1].add_term(m, c);
                continue;
            }
            // The only allowed mixed terms are the unit bilinear couplings
            // z_j * z_aux(i, j).
            auto factors = m.factors();
            if (m.degree() != 2 || factors.size() != 2) return std::nullopt;
            auto [a, ea] = factors.front();
            auto [b, eb] = factors.back();
            if (ea != 1 || eb != 1 || a > n) return std::nullopt;
            AuxKey key = decode_aux(b, n);
            if (key.row != i || key.index != a || c != 1) return std::nullopt;
            bilinear_seen[a] = true;
        }
        for (int j = 1; j <= n; ++j) {
            if (!bilinear_seen[j]) return std::nullopt;
        }
    }

    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int r = n + (i - 1) * n + j;
            for (const auto& [m, c] : ftilde.coupling(r).terms()) {
                if (m.max_var() > n) return std::nullopt;
                if (m.degree() != d - 1) return std::nullopt;
                if (m.min_var() < j) return std::nullopt;
                couplings[i - 1].add_term(m.times(Monomial::var(j)), c);
            }
        }
    }

    return PolySystem(n, d, std::move(couplings));
}

std::vector<ReductionRecord> reduce_to_quadratic(const PolySystem& f,
                                                 const ReductionLimits& limits) {
    std::vector<ReductionRecord> chain;
    PolySystem current = f;
    while (current.degree_bound() > 2) {
        long next_dim = static_cast<long>(current.dim()) * (current.dim() + 1);
        if (next_dim > limits.max_dim) {
            throw ResourceLimitError("reduction chain exceeds the coordinate cap");
        }
        chain.push_back(lower_degree(current));
        current = chain.back().reduced;
    }
    return chain;
}

namespace {

std::string bool_word(bool b) { return b ? "true" : "false"; }

std::string tri_word(TriState t) {
    switch (t) {
        case TriState::yes: return "yes";
        case TriState::no_at_cutoff: return "no-at-cutoff";
        default: return "inconclusive";
    }
}

} // namespace

VerificationReport verify_reduction(const PolySystem& f, int cutoff,
                                    const InversionLimits& limits) {
    if (cutoff < 1) throw InputError("cutoff must be >= 1");
    ReductionRecord rec = lower_degree(f);
    int n = f.dim();
    VerificationReport report;

    {
        bool direct = has_constant_jacobian(f);
        bool transported = has_constant_jacobian_on_slice(rec.reduced, rec.split(), limits);
        std::ostringstream detail;
        detail << "direct=" << bool_word(direct) << " transported=" << bool_word(transported);
        report.checks.push_back(
            {"constant-jacobian-transport", direct == transported, detail.str()});
    }

    InverseReport inv = polynomial_inverse(f, limits);
    {
        // The eliminated coordinates inherit the degree of the inverse, so a
        // conclusive certificate needs the cutoff pushed to that bound.
        int degree_hint = 1;
        for (const auto& c : inv.inverse.components) {
            degree_hint = std::max(degree_hint, c.total_degree());
        }
        int certificate_cutoff = cutoff;
        if (inv.kind == InverseKind::polynomial) {
            certificate_cutoff = std::max(cutoff, (f.degree_bound() - 1) * degree_hint);
        }
        TriState restricted =
            restricted_inverse_polynomial(rec.reduced, rec.split(), certificate_cutoff, limits);
        bool agree;
        if (restricted == TriState::inconclusive) {
            agree = true;
        } else if (inv.kind == InverseKind::polynomial) {
            agree = restricted == TriState::yes;
        } else {
            agree = restricted == TriState::no_at_cutoff;
        }
        std::ostringstream detail;
        detail << "direct=" << (inv.kind == InverseKind::polynomial ? "polynomial" : "formal-only")
               << " transported=" << tri_word(restricted)
               << " certificate-cutoff=" << certificate_cutoff;
        report.checks.push_back({"polynomial-inverse-transport", agree, detail.str()});
    }

    SeriesVec direct_inverse = formal_inverse(f, cutoff);
    SeriesVec restricted_inverse = formal_inverse_restricted(rec.reduced, n, cutoff);
    {
        bool match = true;
        for (int i = 0; i < n; ++i) {
            if (restricted_inverse.components[i] != direct_inverse.components[i]) match = false;
        }
        report.checks.push_back({"inverse-series-transport", match,
                                 match ? "base components reproduce the inverse"
                                       : "base components disagree with the inverse"});
    }

    {
        bool match = true;
        for (int i = 1; i <= n && match; ++i) {
            for (int j = 1; j <= n && match; ++j) {
                const Poly& row = rec.reduced.coupling(rec.aux_coordinate(i, j));
                Poly expected =
                    compose_truncated(row, restricted_inverse.components, cutoff);
                if (restricted_inverse.components[rec.aux_coordinate(i, j) - 1] != expected) {
                    match = false;
                }
            }
        }
        report.checks.push_back({"auxiliary-series-consistency", match,
                                 match ? "auxiliary components solve their rows"
                                       : "auxiliary components disagree with their rows"});
    }

    report.ok = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckResult& c) { return c.pass; });
    return report;
}

} // namespace jacq
