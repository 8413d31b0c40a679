#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "jacq/errors.hpp"
#include "jacq/generators.hpp"
#include "jacq/poly.hpp"
#include "jacq/rational.hpp"
#include "jacq/series.hpp"

#include "helpers.hpp"

using namespace jacq;
using jacq::testing::sample_poly;
using jacq::testing::sample_subs;

namespace {

Poly zvar(int nvars, int index, int exp = 1) {
    Poly p(nvars);
    p.add_term(Monomial::var(index, exp), rational(1));
    return p;
}

} // namespace

TEST_CASE("rational construction and parsing") {
    CHECK(rational(3, 4) == Rational(3, 4));
    CHECK(rational(-6, 8) == rational(-3, 4));
    CHECK(rational(2, -4) == rational(-1, 2));
    CHECK(to_string(rational(-3, 4)) == "-3/4");
    CHECK(to_string(rational(5)) == "5");
    CHECK(to_string(rational(0)) == "0");
    CHECK_THROWS_AS(rational(1, 0), InputError);

    CHECK(parse_rational("3/4") == rational(3, 4));
    CHECK(parse_rational("-6/8") == rational(-3, 4));
    CHECK(parse_rational("-1") == rational(-1));
    CHECK(parse_rational("0/7") == rational(0));
    CHECK(parse_rational("10395/2") == rational(10395, 2));

    for (const char* bad : {"", "/", "1/", "/2", "1/0", "1.5", "2/-3", " 1", "1 ", "a", "1/2/3"}) {
        CHECK_THROWS_AS(parse_rational(bad), InputError);
    }

    SUBCASE("round trip through text") {
        SplitRng rng(7);
        for (int t = 0; t < 50; ++t) {
            long num = static_cast<long>(rng.below(2001)) - 1000;
            long den = 1 + static_cast<long>(rng.below(40));
            Rational r = rational(num, den);
            CHECK(parse_rational(to_string(r)) == r);
        }
    }
}

TEST_CASE("factorials") {
    CHECK(factorial(0) == rational(1));
    CHECK(factorial(1) == rational(1));
    CHECK(factorial(5) == rational(120));
    CHECK(factorial(10) == rational(3628800));

    CHECK(odd_double_factorial(0) == rational(1));
    CHECK(odd_double_factorial(1) == rational(1));
    CHECK(odd_double_factorial(2) == rational(3));
    CHECK(odd_double_factorial(3) == rational(15));
    CHECK(odd_double_factorial(5) == rational(945));
    // (2k)! / (k! 2^k) counts the pairings directly.
    for (unsigned long k = 0; k <= 8; ++k) {
        Rational pairings = factorial(2 * k) / (factorial(k) * rational(1L << k));
        CHECK(odd_double_factorial(k) == pairings);
    }
}

TEST_CASE("monomial basics") {
    Monomial one;
    CHECK(one.is_constant());
    CHECK(one.degree() == 0);
    CHECK(one.min_var() == 0);

    Monomial m = Monomial::from_factors({{2, 1}, {1, 1}, {2, 2}});
    CHECK(m == Monomial::from_factors({{1, 1}, {2, 3}}));
    CHECK(m.degree() == 4);
    CHECK(m.exponent(1) == 1);
    CHECK(m.exponent(2) == 3);
    CHECK(m.exponent(3) == 0);
    CHECK(m.min_var() == 1);
    CHECK(m.max_var() == 2);
    CHECK(m.indices() == std::vector<int>{1, 2, 2, 2});

    std::vector<int> idx{2, 2, 2};
    CHECK(Monomial::from_indices(idx) == Monomial::var(2, 3));
    CHECK(Monomial::from_factors({{1, 0}}) == one);
    CHECK_THROWS_AS(Monomial::from_factors({{0, 1}}), InputError);
    CHECK_THROWS_AS(Monomial::from_factors({{1, -1}}), InputError);

    CHECK(Monomial::var(1).times(Monomial::var(2, 2)) ==
          Monomial::from_factors({{1, 1}, {2, 2}}));
    CHECK(m.divisible_by(Monomial::var(2, 2)));
    CHECK_FALSE(m.divisible_by(Monomial::var(3)));
    CHECK(m.divided_by(Monomial::var(2, 3)) == Monomial::var(1));
    CHECK(m.without_one(2) == Monomial::from_factors({{1, 1}, {2, 2}}));

    CHECK(to_string(m) == "z1*z2^3");
    CHECK(to_string(one) == "1");
}

TEST_CASE("graded lexicographic order") {
    Monomial z1 = Monomial::var(1);
    Monomial z2 = Monomial::var(2);
    Monomial z1z2 = z1.times(z2);
    Monomial z1sq = Monomial::var(1, 2);
    Monomial z2sq = Monomial::var(2, 2);

    CHECK(grlex_less(Monomial(), z1));
    CHECK(grlex_less(z2, z1));
    CHECK(grlex_less(z1, z2sq));      // degree dominates
    CHECK(grlex_less(z2sq, z1z2));
    CHECK(grlex_less(z1z2, z1sq));
    CHECK_FALSE(grlex_less(z1sq, z1sq));

    // Strict weak order on a sampled set: antisymmetry and transitivity.
    SplitRng rng(11);
    std::vector<Monomial> ms;
    for (int t = 0; t < 12; ++t) {
        std::vector<int> idx;
        int deg = static_cast<int>(rng.below(4));
        for (int k = 0; k < deg; ++k) idx.push_back(1 + static_cast<int>(rng.below(3)));
        ms.push_back(Monomial::from_indices(idx));
    }
    for (const auto& a : ms) {
        for (const auto& b : ms) {
            if (grlex_less(a, b)) CHECK_FALSE(grlex_less(b, a));
            if (!grlex_less(a, b) && !grlex_less(b, a)) CHECK(a == b);
            for (const auto& c : ms) {
                if (grlex_less(a, b) && grlex_less(b, c)) CHECK(grlex_less(a, c));
            }
        }
    }
}

TEST_CASE("poly term bookkeeping") {
    Poly p(2);
    CHECK(p.is_zero());
    CHECK(p.total_degree() == 0);
    CHECK(p.min_degree() == 0);

    p.add_term(Monomial::var(1), rational(1));
    p.add_term(Monomial::var(2, 3), rational(2));
    CHECK(p.total_degree() == 3);
    CHECK(p.min_degree() == 1);
    CHECK(p.coeff(Monomial::var(2, 3)) == rational(2));
    CHECK(p.coeff(Monomial::var(2)) == rational(0));

    p.add_term(Monomial::var(1), rational(-1));
    CHECK(p.coeff(Monomial::var(1)) == rational(0));
    CHECK(p.term_count() == 1);

    p.set_coeff(Monomial::var(2, 3), rational(0));
    CHECK(p.is_zero());

    CHECK(Poly::constant(2, rational(5)).constant_term() == rational(5));
    CHECK(Poly::constant(2, rational(0)).is_zero());
    CHECK(Poly::variable(2, 2) == zvar(2, 2));
    CHECK_THROWS_AS(zvar(2, 3), InputError);

    Poly q(2);
    q.add_term(Monomial::var(2, 3), rational(1));
    Poly s = zvar(2, 1);
    s.add_term(Monomial::var(2, 3), rational(1));
    CHECK(s + q == zvar(2, 1) + q + q);
    CHECK((zvar(2, 1) - zvar(2, 1)).is_zero());
    CHECK(to_string(s) == "z1 + z2^3");
    CHECK(to_string(Poly(2)) == "0");
}

TEST_CASE("poly arithmetic identities") {
    Poly z1 = zvar(2, 1);
    Poly z2 = zvar(2, 2);

    CHECK(z2 * zvar(2, 2, 2) == zvar(2, 2, 3));
    CHECK(Poly::constant(2, rational(1)) * (z1 + z2) == z1 + z2);
    CHECK((z1 + z2) * (z1 - z2) == zvar(2, 1, 2) - zvar(2, 2, 2));
    CHECK((z1 * rational(3, 2)).coeff(Monomial::var(1)) == rational(3, 2));

    SplitRng rng(23);
    for (int t = 0; t < 25; ++t) {
        Poly a = sample_poly(rng, 3, 3, 4);
        Poly b = sample_poly(rng, 3, 3, 4);
        Poly c = sample_poly(rng, 3, 3, 4);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(-a == Poly(3) - a);
    }
}

TEST_CASE("truncation and truncated products") {
    Poly s = zvar(2, 1);
    s.add_term(Monomial::var(2, 3), rational(1));
    CHECK(truncate(s, 2) == zvar(2, 1));
    CHECK(truncate(s, 3) == s);
    CHECK(truncate(s, 0).is_zero());

    SplitRng rng(31);
    for (int t = 0; t < 25; ++t) {
        Poly a = sample_poly(rng, 3, 4, 5);
        Poly b = sample_poly(rng, 3, 4, 5);
        int order = static_cast<int>(rng.below(6));
        CHECK(mul_truncated(a, b, order) == truncate(a * b, order));
        CHECK(truncate(truncate(a + b, order), order) == truncate(a, order) + truncate(b, order));
        // Truncating the factors first never changes the truncated product.
        CHECK(truncate(a * b, order) == truncate(truncate(a, order) * truncate(b, order), order));
    }
}

TEST_CASE("derivatives") {
    Poly s = zvar(2, 1);
    s.add_term(Monomial::var(2, 3), rational(1));
    CHECK(derivative(s, 1) == Poly::constant(2, rational(1)));
    CHECK(derivative(s, 2) == zvar(2, 2, 2) * rational(3));

    Poly p = zvar(2, 1, 2) * zvar(2, 2);
    CHECK(derivative(p, 1) == zvar(2, 1) * zvar(2, 2) * rational(2));
    CHECK(derivative(Poly::constant(2, rational(4)), 1).is_zero());

    SplitRng rng(37);
    for (int t = 0; t < 20; ++t) {
        Poly a = sample_poly(rng, 2, 3, 4);
        Poly b = sample_poly(rng, 2, 3, 4);
        // Leibniz rule.
        CHECK(derivative(a * b, 1) == derivative(a, 1) * b + a * derivative(b, 1));
        // Mixed partials commute.
        CHECK(derivative(derivative(a, 1), 2) == derivative(derivative(a, 2), 1));
    }
}

TEST_CASE("homogeneous parts") {
    Poly s = zvar(2, 1);
    s.add_term(Monomial::var(2, 3), rational(1));
    CHECK(homogeneous_part(s, 1) == zvar(2, 1));
    CHECK(homogeneous_part(s, 2).is_zero());
    CHECK(homogeneous_part(s, 3) == zvar(2, 2, 3));

    SplitRng rng(41);
    for (int t = 0; t < 10; ++t) {
        Poly a = sample_poly(rng, 3, 4, 6);
        Poly sum(3);
        for (int k = 0; k <= a.total_degree(); ++k) sum += homogeneous_part(a, k);
        CHECK(sum == a);
    }
}

TEST_CASE("composition") {
    Poly s = zvar(2, 1);
    s.add_term(Monomial::var(2, 3), rational(1));
    std::vector<Poly> inv{zvar(2, 1) - zvar(2, 2, 3), zvar(2, 2)};
    CHECK(compose(s, inv) == zvar(2, 1));

    std::vector<Poly> id{zvar(2, 1), zvar(2, 2)};
    CHECK(compose(s, id) == s);

    // Constant substitution turns evaluation into plain arithmetic.
    std::vector<Poly> consts{Poly::constant(1, rational(2)), Poly::constant(1, rational(-1))};
    CHECK(compose(s, consts) == Poly::constant(1, rational(1)));

    // Substitutions may carry constant offsets: z1^2 at z1+1 expands binomially.
    Poly square = zvar(1, 1, 2);
    Poly shifted = zvar(1, 1) + Poly::constant(1, rational(1));
    Poly expanded = zvar(1, 1, 2) + zvar(1, 1) * rational(2) + Poly::constant(1, rational(1));
    CHECK(compose(square, std::vector<Poly>{shifted}) == expanded);

    SplitRng rng(43);
    for (int t = 0; t < 15; ++t) {
        Poly a = sample_poly(rng, 2, 3, 3);
        Poly b = sample_poly(rng, 2, 3, 3);
        std::vector<Poly> subs = sample_subs(rng, 2, 2, 2, 3);
        // Substitution is a ring homomorphism.
        CHECK(compose(a + b, subs) == compose(a, subs) + compose(b, subs));
        CHECK(compose(a * b, subs) == compose(a, subs) * compose(b, subs));
        // Chain rule for the first variable.
        Poly lhs = derivative(compose(a, subs), 1);
        Poly rhs(2);
        for (int v = 1; v <= 2; ++v) {
            rhs += compose(derivative(a, v), subs) * derivative(subs[v - 1], 1);
        }
        CHECK(lhs == rhs);

        int order = static_cast<int>(rng.below(5));
        CHECK(compose_truncated(a, subs, order) == truncate(compose(a, subs), order));
    }

    SUBCASE("compose_many matches one-at-a-time composition") {
        SplitRng rng2(47);
        std::vector<Poly> ps = sample_subs(rng2, 3, 2, 3, 4);
        std::vector<Poly> subs = sample_subs(rng2, 2, 2, 2, 3);
        std::vector<Poly> many = compose_many(ps, subs, -1);
        REQUIRE(many.size() == ps.size());
        for (std::size_t i = 0; i < ps.size(); ++i) {
            CHECK(many[i] == compose(ps[i], subs));
        }
    }

    SUBCASE("budget exhaustion raises") {
        Poly big(1);
        for (int k = 1; k <= 12; ++k) big.add_term(Monomial::var(1, k), rational(1));
        std::vector<Poly> sub{big};
        MulBudget tiny{5};
        CHECK_THROWS_AS(compose(big, sub, &tiny), ResourceLimitError);
        MulBudget roomy{1'000'000};
        CHECK(compose(big, sub, &roomy) == compose(big, sub));
    }
}

TEST_CASE("exact division") {
    Poly z1 = zvar(2, 1);
    Poly z2 = zvar(2, 2);
    Poly prod = (z1 + z2) * (z1 - z2);
    CHECK(divexact(prod, z1 + z2) == z1 - z2);
    CHECK(divexact(Poly(2), z1 + z2).is_zero());
    CHECK_THROWS_AS(divexact(z1, z2), InputError);
    CHECK_THROWS_AS(divexact(z1 + Poly::constant(2, rational(1)), z1), InputError);

    SplitRng rng(53);
    for (int t = 0; t < 15; ++t) {
        Poly a = sample_poly(rng, 2, 3, 3);
        Poly b = sample_poly(rng, 2, 3, 3);
        if (b.is_zero()) continue;
        CHECK(divexact(a * b, b) == a);
    }
}

TEST_CASE("series vectors") {
    SeriesVec id = SeriesVec::identity(2, 4);
    CHECK(id.nvars() == 2);
    CHECK(id.order == 4);
    CHECK(id.components[0] == zvar(2, 1));
    CHECK(id.components[1] == zvar(2, 2));
    CHECK(SeriesVec::identity(2, 0).components[0].is_zero());

    SeriesVec s = id;
    s.components[0].add_term(Monomial::var(2, 3), rational(5));
    SeriesVec cut = truncate(s, 2);
    CHECK(cut.order == 2);
    CHECK(cut.components[0] == zvar(2, 1));

    SeriesVec r = restrict_sources(s, 1);
    CHECK(r.nvars() == 1);
    CHECK(r.components.size() == 2);
    CHECK(r.components[0] == zvar(1, 1));
    CHECK(r.components[1].is_zero());
    CHECK_THROWS_AS(restrict_sources(s, 3), InputError);
}

TEST_CASE("series division") {
    // 1/(1 - z1) through order 4.
    Poly den = Poly::constant(1, rational(1)) - zvar(1, 1);
    Poly rec = series_reciprocal(den, 4);
    Poly expect(1);
    expect.add_term(Monomial(), rational(1));
    for (int k = 1; k <= 4; ++k) expect.add_term(Monomial::var(1, k), rational(1));
    CHECK(rec == expect);

    CHECK_THROWS_AS(series_reciprocal(zvar(1, 1), 3), InputError);

    SplitRng rng(59);
    for (int t = 0; t < 15; ++t) {
        Poly num = sample_poly(rng, 2, 3, 4);
        Poly d = sample_poly(rng, 2, 3, 4);
        d.set_coeff(Monomial(), rational(1 + static_cast<long>(rng.below(3))));
        int order = 4;
        Poly q = series_divide(num, d, order);
        CHECK(truncate(q * d, order) == truncate(num, order));
        CHECK(truncate(series_reciprocal(d, order) * d, order) ==
              Poly::constant(2, rational(1)));
    }
}
