#include "jacq/generators.hpp"

#include <algorithm>
#include <limits>

#include "jacq/errors.hpp"

namespace jacq {

std::uint64_t SplitRng::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitRng::below(std::uint64_t bound) {
    if (bound == 0) throw InputError("below() needs a positive bound");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
}

bool SplitRng::chance(std::uint64_t numer, std::uint64_t denom) {
    if (denom == 0) throw InputError("chance() needs a positive denominator");
    if (numer >= denom) return true;
    return below(denom) < numer;
}

PolySystem elementary_system(int n, const Transvection& t) {
    if (n < 1) throw InputError("dimension must be positive");
    if (t.target < 1 || t.target > n) throw InputError("transvection target out of range");
    if (t.shift.nvars() != n) throw InputError("shift variable count mismatch");
    int d = 2;
    for (const auto& [m, c] : t.shift.terms()) {
        if (m.exponent(t.target) != 0) {
            throw InputError("shift must not involve the target coordinate");
        }
        if (m.degree() < 2) throw InputError("shift terms must be at least quadratic");
        d = std::max(d, m.degree());
    }
    std::vector<Poly> couplings(n, Poly(n));
    couplings[t.target - 1] = -t.shift;
    return PolySystem(n, d, std::move(couplings));
}

namespace {

Rational small_coefficient(SplitRng& rng) {
    long v = static_cast<long>(rng.below(6));
    long num = v < 3 ? v - 3 : v - 2; // {-3,-2,-1,1,2,3}
    long den = 1 + static_cast<long>(rng.below(2));
    return rational(num, den);
}

Poly random_shift(SplitRng& rng, int n, int target, int maxdeg) {
    Poly shift(n);
    int top = std::min(maxdeg, 3);
    int nterms = 1 + static_cast<int>(rng.below(2));
    for (int t = 0; t < nterms; ++t) {
        int k = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(top - 1)));
        std::vector<int> indices;
        for (int j = 0; j < k; ++j) {
            int var = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
            if (var >= target) ++var;
            indices.push_back(var);
        }
        shift.add_term(Monomial::from_indices(indices), small_coefficient(rng));
    }
    return shift;
}

} // namespace

TameSystem random_tame(int n, int steps, int maxdeg, std::uint64_t seed) {
    if (n < 2) throw InputError("tame generation needs dimension >= 2");
    if (steps < 0) throw InputError("negative step count");
    if (maxdeg < 2) throw InputError("degree cap must be at least 2");
    SplitRng rng(seed);
    TameSystem out{PolySystem::identity(n), PolySystem::identity(n), {}};
    for (int s = 0; s < steps; ++s) {
        bool accepted = false;
        for (int attempt = 0; attempt < 64 && !accepted; ++attempt) {
            Transvection t{1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))),
                           Poly(n)};
            t.shift = random_shift(rng, n, t.target, maxdeg);
            if (t.shift.is_zero()) continue;
            PolySystem step = elementary_system(n, t);
            PolySystem inverse_step = elementary_system(n, {t.target, -t.shift});
            PolySystem forward = compose_systems(step, out.system);
            if (forward.content_degree() > maxdeg) continue;
            PolySystem backward = compose_systems(out.inverse, inverse_step);
            if (backward.content_degree() > maxdeg) continue;
            out.system = std::move(forward);
            out.inverse = std::move(backward);
            out.steps.push_back(std::move(t));
            accepted = true;
        }
        if (!accepted) break;
    }
    return out;
}

namespace {

void degree_slots(int nvars, int var, int remaining, std::vector<std::pair<int, int>>& prefix,
                  std::vector<Monomial>& out) {
    if (var == nvars) {
        if (remaining > 0) prefix.emplace_back(var, remaining);
        out.push_back(Monomial::from_factors(prefix));
        if (remaining > 0) prefix.pop_back();
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        if (e > 0) prefix.emplace_back(var, e);
        degree_slots(nvars, var + 1, remaining - e, prefix, out);
        if (e > 0) prefix.pop_back();
    }
}

} // namespace

PolySystem random_system(int n, int d, const Rational& density, std::uint64_t seed) {
    if (n < 1) throw InputError("dimension must be positive");
    if (d < 2) throw InputError("degree bound must be at least 2");
    if (density <= 0 || density > 1) throw InputError("density must lie in (0, 1]");
    mpz_class num = density.get_num();
    mpz_class den = density.get_den();
    if (!num.fits_ulong_p() || !den.fits_ulong_p()) {
        throw InputError("density numerator or denominator is too large");
    }
    SplitRng rng(seed);
    std::vector<Monomial> slots;
    std::vector<std::pair<int, int>> prefix;
    for (int k = 2; k <= d; ++k) degree_slots(n, 1, k, prefix, slots);
    std::vector<Poly> couplings(n, Poly(n));
    for (int i = 0; i < n; ++i) {
        for (const Monomial& m : slots) {
            if (!rng.chance(num.get_ui(), den.get_ui())) continue;
            couplings[i].add_term(m, small_coefficient(rng));
        }
    }
    return PolySystem(n, d, std::move(couplings));
}

} // namespace jacq
