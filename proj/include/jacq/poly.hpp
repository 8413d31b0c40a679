#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jacq/monomial.hpp"
#include "jacq/rational.hpp"

namespace jacq {

// Sparse multivariate polynomial over Rational. Terms live in a map ordered
// by grlex, which fixes iteration and serialization order once and for all.
// Invariants: no explicit zero coefficients, every variable index <= nvars.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Poly() = default;
    explicit Poly(int nvars);

    static Poly constant(int nvars, const Rational& c);
    static Poly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coeff(const Monomial& m) const;

    // Total degree; 0 for the zero polynomial.
    int total_degree() const;
    // Smallest total degree among terms; 0 for the zero polynomial.
    int min_degree() const;

    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c);
    void set_coeff(const Monomial& m, const Rational& c);

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly operator-() const;

    bool operator==(const Poly&) const = default;

private:
    void check_var_range(const Monomial& m) const;

    int nvars_ = 0;
    TermMap terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Rational& c);

// Product with every term of total degree > order dropped, interleaved with
// the accumulation so intermediate blowup stays bounded.
Poly mul_truncated(const Poly& a, const Poly& b, int order);

// Drops all terms of total degree > order.
Poly truncate(Poly p, int order);

Poly derivative(const Poly& p, int var);

// Charge meter for multiplication-heavy routines. Charges count term pairs;
// exhausting the budget raises ResourceLimitError.
struct MulBudget {
    long remaining = 0;
    void charge(long pairs);
};

// Substitutes subs[v-1] for variable v. All subs must share a common variable
// count, which becomes the variable count of the result.
Poly compose(const Poly& p, std::span<const Poly> subs, MulBudget* budget = nullptr);
Poly compose_truncated(const Poly& p, std::span<const Poly> subs, int order,
                       MulBudget* budget = nullptr);

// Composes several polynomials with one shared power cache for the
// substitutions. order < 0 means exact.
std::vector<Poly> compose_many(std::span<const Poly> ps, std::span<const Poly> subs, int order,
                               MulBudget* budget = nullptr);

// Single-divisor division in grlex order; throws if any reduction step fails,
// so it doubles as an exactness check.
Poly divexact(const Poly& f, const Poly& g);

Poly homogeneous_part(const Poly& p, int k);

std::string to_string(const Poly& p, std::string_view var_prefix = "z");

} // namespace jacq
