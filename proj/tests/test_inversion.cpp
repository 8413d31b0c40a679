#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <optional>
#include <vector>

#include "jacq/errors.hpp"
#include "jacq/generators.hpp"
#include "jacq/inversion.hpp"
#include "jacq/reduction.hpp"
#include "jacq/system.hpp"

#include "helpers.hpp"

using namespace jacq;
using jacq::testing::cubic_shear;
using jacq::testing::entangled_pair;

namespace {

Poly zvar(int nvars, int index, int exp = 1) {
    Poly p(nvars);
    p.add_term(Monomial::var(index, exp), rational(1));
    return p;
}

// Exact check that g inverts f through the trusted order, in both directions.
void check_inverts(const PolySystem& f, const SeriesVec& g) {
    std::vector<Poly> fp = system_to_polys(f);
    SeriesVec id = SeriesVec::identity(f.dim(), g.order);
    std::vector<Poly> fg = compose_many(fp, g.components, g.order);
    CHECK(fg == id.components);
    std::vector<Poly> gf = compose_many(g.components, fp, g.order);
    CHECK(gf == id.components);
}

PolySystem sparse_wide_system(int n) {
    std::vector<Poly> couplings(n, Poly(n));
    Poly w(n);
    w.add_term(Monomial::var(2, 3), rational(-1));
    couplings[0] = w;
    return PolySystem(n, 3, std::move(couplings));
}

} // namespace

TEST_CASE("formal inverse of the cubic shear") {
    SeriesVec g = formal_inverse(cubic_shear(), 5);
    CHECK(g.order == 5);
    CHECK(g.components[0] == zvar(2, 1) - zvar(2, 2, 3));
    CHECK(g.components[1] == zvar(2, 2));
    check_inverts(cubic_shear(), g);

    CHECK(formal_inverse(PolySystem::identity(3), 4) == SeriesVec::identity(3, 4));
    CHECK(formal_inverse(cubic_shear(), 0).components[0].is_zero());
    CHECK_THROWS_AS(formal_inverse(cubic_shear(), -1), InputError);
}

TEST_CASE("formal inverse of an entangled pair") {
    SeriesVec g = formal_inverse(entangled_pair(), 4);
    const Poly& g1 = g.components[0];
    CHECK(g1.coeff(Monomial::var(1)) == rational(1));
    CHECK(g1.coeff(Monomial::var(2, 2)) == rational(1));
    CHECK(g1.coeff(Monomial::from_factors({{1, 2}, {2, 1}})) == rational(2));
    CHECK(g1.coeff(Monomial::var(1, 4)) == rational(1));
    CHECK(g1.coeff(Monomial::from_factors({{1, 1}, {2, 3}})) == rational(4));
    check_inverts(entangled_pair(), g);

    SUBCASE("higher truncations extend lower ones") {
        SeriesVec g6 = formal_inverse(entangled_pair(), 6);
        CHECK(truncate(g6, 4) == g);
    }
}

TEST_CASE("formal inverse on random draws") {
    for (std::uint64_t seed = 900; seed < 906; ++seed) {
        PolySystem f = random_system(3, 3, rational(1, 2), seed);
        SeriesVec g = formal_inverse(f, 4);
        check_inverts(f, g);
    }
    for (std::uint64_t seed = 910; seed < 914; ++seed) {
        TameSystem t = random_tame(3, 4, 6, seed);
        SeriesVec g = formal_inverse(t.system, 5);
        check_inverts(t.system, g);
        // The maintained exact inverse truncates to the formal one.
        std::vector<Poly> known = system_to_polys(t.inverse);
        for (int i = 0; i < 3; ++i) {
            CHECK(truncate(known[i], 5) == g.components[i]);
        }
    }
}

TEST_CASE("restricted formal inverse") {
    SeriesVec r = formal_inverse_restricted(cubic_shear(), 1, 5);
    CHECK(r.components.size() == 2);
    CHECK(r.components[0] == zvar(1, 1));
    CHECK(r.components[1].is_zero());

    CHECK_THROWS_AS(formal_inverse_restricted(cubic_shear(), 3, 2), InputError);

    SUBCASE("matches source restriction of the full inverse") {
        for (std::uint64_t seed = 920; seed < 924; ++seed) {
            PolySystem f = random_system(3, 3, rational(1, 2), seed);
            SeriesVec full = formal_inverse(f, 4);
            for (int k = 0; k <= 3; ++k) {
                SeriesVec restricted = formal_inverse_restricted(f, k, 4);
                CHECK(restricted.components == restrict_sources(full, k).components);
            }
        }
    }
}

TEST_CASE("progress hooks observe and cancel") {
    int calls = 0;
    int last_order = -1;
    SeriesVec g = formal_inverse(cubic_shear(), 5, [&](const InversionProgress& p) {
        ++calls;
        last_order = p.order_reached;
        CHECK(p.evaluations >= calls);
        CHECK(p.term_count >= 0);
        return true;
    });
    CHECK(calls >= 2);
    CHECK(last_order == 5);
    CHECK(g.components[0] == zvar(2, 1) - zvar(2, 2, 3));

    CHECK_THROWS_AS(formal_inverse(cubic_shear(), 5, [](const InversionProgress&) {
        return false;
    }), CancelledError);
}

TEST_CASE("polynomial inverse decision") {
    SUBCASE("positive on the cubic shear") {
        InverseReport rep = polynomial_inverse(cubic_shear());
        CHECK(rep.kind == InverseKind::polynomial);
        CHECK(rep.verified);
        CHECK(rep.searched_full_bound);
        CHECK(rep.order_used == 3);
        CHECK(rep.inverse.components[0] == zvar(2, 1) - zvar(2, 2, 3));
        CHECK(rep.inverse.components[1] == zvar(2, 2));
    }

    SUBCASE("positive on the identity") {
        InverseReport rep = polynomial_inverse(PolySystem::identity(2));
        CHECK(rep.kind == InverseKind::polynomial);
        CHECK(rep.inverse.components == SeriesVec::identity(2, rep.order_used).components);
    }

    SUBCASE("definitive negative on the entangled pair") {
        InverseReport rep = polynomial_inverse(entangled_pair());
        CHECK(rep.kind == InverseKind::formal_only);
        CHECK_FALSE(rep.verified);
        CHECK(rep.searched_full_bound);
        // Bound comes from the quadratic content, not the declared cap.
        CHECK(rep.order_used == 2);
    }

    SUBCASE("order override caps the search") {
        InversionLimits lim;
        lim.order_override = 1;
        InverseReport rep = polynomial_inverse(cubic_shear(), lim);
        CHECK(rep.kind == InverseKind::formal_only);
        CHECK_FALSE(rep.searched_full_bound);
        CHECK(rep.order_used == 1);

        lim.order_override = 10;
        rep = polynomial_inverse(cubic_shear(), lim);
        CHECK(rep.kind == InverseKind::polynomial);
        CHECK(rep.order_used == 3); // never past the classical bound

        lim.order_override = 0;
        CHECK_THROWS_AS(polynomial_inverse(cubic_shear(), lim), InputError);
    }

    SUBCASE("classical bound overflow needs an override") {
        PolySystem wide = sparse_wide_system(30);
        CHECK_THROWS_AS(polynomial_inverse(wide), ResourceLimitError);

        InversionLimits lim;
        lim.order_override = 5;
        InverseReport rep = polynomial_inverse(wide, lim);
        CHECK(rep.kind == InverseKind::polynomial);
        CHECK_FALSE(rep.searched_full_bound);
        CHECK(rep.inverse.components[0] == zvar(30, 1) - zvar(30, 2, 3));
    }

    SUBCASE("exhausted certificate budget surfaces as a resource error") {
        InversionLimits lim;
        lim.compose_budget = 1;
        CHECK_THROWS_AS(polynomial_inverse(cubic_shear(), lim), ResourceLimitError);
    }

    SUBCASE("agrees with known tame inverses") {
        for (std::uint64_t seed = 930; seed < 934; ++seed) {
            TameSystem t = random_tame(2, 3, 6, seed);
            InverseReport rep = polynomial_inverse(t.system);
            CHECK(rep.kind == InverseKind::polynomial);
            std::vector<Poly> known = system_to_polys(t.inverse);
            CHECK(rep.inverse.components == known);
        }
    }
}

TEST_CASE("partial elimination at the origin") {
    PolySystem reduced = lower_degree(cubic_shear()).reduced;

    SUBCASE("reduced cubic shear") {
        auto sol = partial_inverse_at_zero(reduced, {2});
        REQUIRE(sol.has_value());
        REQUIRE(sol->size() == 4);
        CHECK((*sol)[0].is_zero());
        CHECK((*sol)[1] == -zvar(2, 2, 2));
        CHECK((*sol)[2].is_zero());
        CHECK((*sol)[3].is_zero());
    }

    SUBCASE("trivial splits") {
        auto all_params = partial_inverse_at_zero(cubic_shear(), {2});
        REQUIRE(all_params.has_value());
        CHECK(all_params->empty());
        CHECK_THROWS_AS(partial_inverse_at_zero(cubic_shear(), {5}), InputError);
    }

    SUBCASE("tail rows independent of the tail") {
        Poly w2(2);
        w2.add_term(Monomial::var(1, 2), rational(1));
        PolySystem f(2, 2, {Poly(2), w2});
        auto sol = partial_inverse_at_zero(f, {1});
        REQUIRE(sol.has_value());
        CHECK((*sol)[0] == zvar(1, 1, 2));
    }

    SUBCASE("tail-linear coupling is rejected") {
        Poly w2(2);
        w2.add_term(Monomial::from_factors({{1, 1}, {2, 1}}), rational(1));
        PolySystem f(2, 2, {Poly(2), w2});
        CHECK_THROWS_AS(partial_inverse_at_zero(f, {1}), InputError);
    }

    SUBCASE("non-polynomial elimination comes back empty") {
        Poly w2(2);
        w2.add_term(Monomial::var(1, 2), rational(1));
        w2.add_term(Monomial::from_factors({{1, 1}, {2, 2}}), rational(1));
        PolySystem f(2, 3, {Poly(2), w2});
        CHECK_FALSE(partial_inverse_at_zero(f, {1}).has_value());
    }
}

TEST_CASE("jacobian constancy on the eliminated slice") {
    ReductionRecord shear = lower_degree(cubic_shear());
    CHECK(has_constant_jacobian_on_slice(shear.reduced, shear.split()));

    ReductionRecord pair = lower_degree(entangled_pair());
    CHECK_FALSE(has_constant_jacobian_on_slice(pair.reduced, pair.split()));

    SUBCASE("composed determinant of the reduced pair") {
        auto sol = partial_inverse_at_zero(pair.reduced, pair.split());
        REQUIRE(sol.has_value());
        std::vector<Poly> subs{zvar(2, 1), zvar(2, 2)};
        for (const Poly& p : *sol) subs.push_back(p);
        Poly composed = compose(jacobian_det(pair.reduced), subs);
        Poly expect = Poly::constant(2, rational(1));
        expect.add_term(Monomial::from_factors({{1, 1}, {2, 1}}), rational(-4));
        CHECK(composed == expect);
    }

    SUBCASE("full split reduces to the direct predicate") {
        CHECK(has_constant_jacobian_on_slice(cubic_shear(), {2}) ==
              has_constant_jacobian(cubic_shear()));
        CHECK(has_constant_jacobian_on_slice(entangled_pair(), {2}) ==
              has_constant_jacobian(entangled_pair()));
    }
}

TEST_CASE("restricted inverse polynomiality") {
    ReductionRecord shear = lower_degree(cubic_shear());

    SUBCASE("certified yes with the candidate handed back") {
        SeriesVec candidate;
        TriState verdict =
            restricted_inverse_polynomial(shear.reduced, shear.split(), 9, {}, &candidate);
        CHECK(verdict == TriState::yes);
        REQUIRE(candidate.components.size() == 6);
        CHECK(candidate.components[0] == zvar(2, 1) - zvar(2, 2, 3));
        CHECK(candidate.components[1] == zvar(2, 2));
        CHECK(candidate.components[2].is_zero());
        CHECK(candidate.components[3] == -zvar(2, 2, 2));
        CHECK(candidate.components[4].is_zero());
        CHECK(candidate.components[5].is_zero());
    }

    SUBCASE("definitive no at the cutoff") {
        ReductionRecord pair = lower_degree(entangled_pair());
        CHECK(restricted_inverse_polynomial(pair.reduced, pair.split(), 9) ==
              TriState::no_at_cutoff);
    }

    SUBCASE("budget exhaustion is inconclusive") {
        InversionLimits lim;
        lim.compose_budget = 1;
        CHECK(restricted_inverse_polynomial(shear.reduced, shear.split(), 9, lim) ==
              TriState::inconclusive);
    }

    SUBCASE("full split matches the unrestricted decision") {
        CHECK(restricted_inverse_polynomial(cubic_shear(), {2}, 5) == TriState::yes);
        CHECK(restricted_inverse_polynomial(entangled_pair(), {2}, 5) ==
              TriState::no_at_cutoff);
        for (std::uint64_t seed = 940; seed < 944; ++seed) {
            TameSystem t = random_tame(2, 3, 5, seed);
            int deg = 1;
            for (const Poly& p : system_to_polys(t.inverse)) {
                deg = std::max(deg, p.total_degree());
            }
            CHECK(restricted_inverse_polynomial(t.system, {2}, deg + 1) == TriState::yes);
        }
    }

    CHECK_THROWS_AS(restricted_inverse_polynomial(cubic_shear(), {2}, 0), InputError);
}
