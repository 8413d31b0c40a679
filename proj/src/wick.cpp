#include "jacq/wick.hpp"

#include <algorithm>
#include <map>

#include "jacq/errors.hpp"

namespace jacq {

Rational complex_gaussian_moment(const MomentSpec& spec) {
    std::map<int, long> balance;
    for (int v : spec.fields) {
        if (v < 1) throw InputError("field index must be >= 1");
        ++balance[v];
    }
    for (int v : spec.conjugates) {
        if (v < 1) throw InputError("field index must be >= 1");
        --balance[v];
    }
    Rational moment = 1;
    for (const auto& [v, net] : balance) {
        if (net != 0) return 0;
    }
    std::map<int, unsigned long> counts;
    for (int v : spec.fields) ++counts[v];
    for (const auto& [v, k] : counts) moment *= factorial(k);
    return moment;
}

Rational real_gaussian_moment_power(unsigned long p) {
    // Truncation of exp(J^2/2) high enough to hold the p-th derivative at 0.
    unsigned long half = p / 2 + 1;
    Poly e(1);
    Rational coeff = 1;
    for (unsigned long m = 0; m <= half; ++m) {
        if (m > 0) coeff /= 2 * static_cast<long>(m);
        e.add_term(Monomial::var(1, static_cast<int>(2 * m)), coeff);
    }
    for (unsigned long k = 0; k < p; ++k) e = derivative(e, 1);
    return e.constant_term();
}

Rational real_gaussian_moment(unsigned long k) {
    return real_gaussian_moment_power(2 * k);
}

namespace {

struct Vertex {
    int row = 0;
    std::vector<std::pair<int, int>> args; // (index, exponent) of the fields
    int weight = 0;                        // degree - 1 = source count it forces
    Rational coupling;
};

std::vector<Vertex> vertex_list(const PolySystem& f) {
    std::vector<Vertex> vertices;
    for (int i = 1; i <= f.dim(); ++i) {
        for (const auto& [m, c] : f.coupling(i).terms()) {
            vertices.push_back({i, m.factors(), m.degree() - 1, c});
        }
    }
    return vertices;
}

// Sums over multisets of vertices with total weight <= budget. Each vertex
// brings one conjugate field on its row and fields on its argument indices;
// source insertions supply the conjugates for whatever fields are left over,
// and the multiset value is the Gaussian moment of the whole collection.
class PairingSum {
public:
    PairingSum(const PolySystem& f, int budget, int sources, const WickLimits& limits,
               int external_index)
        : n_(f.dim()),
          budget_(budget),
          sources_(sources),
          limits_(limits),
          vertices_(vertex_list(f)),
          field_counts_(f.dim() + 1, 0),
          row_counts_(f.dim() + 1, 0),
          moments_(budget + 1, 0),
          result_(f.dim()) {
        if (external_index > 0) ++field_counts_[external_index];
    }

    Poly run() {
        descend(0, budget_, Rational(1));
        return result_;
    }

private:
    void descend(std::size_t t, int budget, const Rational& accumulated) {
        if (t == vertices_.size()) {
            emit(budget, accumulated);
            return;
        }
        const Vertex& v = vertices_[t];
        Rational factor = accumulated;
        for (int m = 0; m * v.weight <= budget; ++m) {
            if (m > 0) {
                factor *= v.coupling;
                factor /= m;
                for (const auto& [idx, exp] : v.args) field_counts_[idx] += exp;
                ++row_counts_[v.row];
            }
            descend(t + 1, budget - m * v.weight, factor);
        }
        int taken = budget / v.weight;
        for (const auto& [idx, exp] : v.args) field_counts_[idx] -= taken * exp;
        row_counts_[v.row] -= taken;
    }

    void emit(int remaining, const Rational& accumulated) {
        int used = budget_ - remaining;
        if (++moments_[used] > limits_.max_moments_per_coefficient) {
            throw ResourceLimitError("moment evaluation budget exhausted");
        }
        MomentSpec spec;
        std::vector<std::pair<int, int>> exponents;
        for (int idx = 1; idx <= n_; ++idx) {
            int surplus = field_counts_[idx] - row_counts_[idx];
            if (surplus < 0) return;
            if (surplus > 0 && idx > sources_) return;
            spec.fields.insert(spec.fields.end(), field_counts_[idx], idx);
            spec.conjugates.insert(spec.conjugates.end(), row_counts_[idx] + surplus, idx);
            if (surplus > 0) exponents.emplace_back(idx, surplus);
        }
        Rational value = accumulated * complex_gaussian_moment(spec);
        for (const auto& [idx, surplus] : exponents) value /= factorial(surplus);
        result_.add_term(Monomial::from_factors(exponents), value);
    }

    int n_;
    int budget_;
    int sources_;
    WickLimits limits_;
    std::vector<Vertex> vertices_;
    std::vector<int> field_counts_;
    std::vector<int> row_counts_;
    std::vector<long> moments_;
    Poly result_;
};

} // namespace

CouplingSeries partition_series(const PolySystem& f, int order, int sources,
                                const WickLimits& limits) {
    if (order < 0) throw InputError("negative truncation order");
    if (sources < 0) sources = f.dim();
    if (sources > f.dim()) throw InputError("source count exceeds the dimension");
    PairingSum sum(f, order, sources, limits, 0);
    return {sum.run(), order};
}

CouplingSeries one_point_series(const PolySystem& f, int i, int order, int sources,
                                const WickLimits& limits) {
    if (order < 0) throw InputError("negative truncation order");
    if (i < 1 || i > f.dim()) throw InputError("component index out of range");
    if (sources < 0) sources = f.dim();
    if (sources > f.dim()) throw InputError("source count exceeds the dimension");
    if (order == 0) return {Poly(f.dim()), 0};
    PairingSum numerator(f, order - 1, sources, limits, i);
    Poly z = partition_series(f, order, sources, limits).series;
    return {series_divide(numerator.run(), z, order), order};
}

SexticIdentityReport sextic_intermediate_identity(int order) {
    if (order < 0) throw InputError("negative truncation order");
    SexticIdentityReport report;
    report.order = order;

    // Direct expansion: exp(-g x^6) against the real Gaussian measure.
    for (int s = 0; s <= order; ++s) {
        Rational c = (s % 2 ? -1 : 1) * real_gaussian_moment_power(6 * s) / factorial(s);
        report.direct.push_back(c);
    }

    // Rewritten expansion: the sextic vertex is traded for a cubic coupling
    // i*sqrt(2g)*x^3 to an auxiliary Gaussian field; odd powers of the
    // auxiliary field average to zero and i^(2s) = (-1)^s keeps every
    // surviving coefficient rational.
    report.rewritten.assign(order + 1, Rational(0));
    for (int t = 0; t <= 2 * order; ++t) {
        Rational aux_moment = real_gaussian_moment_power(t);
        if (aux_moment == 0) continue;
        int s = t / 2;
        Rational c = (s % 2 ? -1 : 1) * Rational(mpz_class(1) << s) / factorial(t) *
                     real_gaussian_moment_power(3 * t) * aux_moment;
        report.rewritten[s] = c;
    }

    report.match = report.direct == report.rewritten;
    return report;
}

} // namespace jacq
