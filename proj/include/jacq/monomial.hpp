#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jacq {

// A monomial as a sparse exponent vector: (variable, exponent) pairs sorted by
// variable, with 1-based variables and strictly positive exponents. The empty
// list is the constant monomial 1.
class Monomial {
public:
    using Factor = std::pair<int, int>;

    Monomial() = default;

    // Merges duplicates, drops zero exponents, sorts. Throws on var < 1 or
    // negative exponents.
    static Monomial from_factors(std::vector<Factor> factors);

    // Multiset of variable indices, e.g. {2,2,2} -> z2^3.
    static Monomial from_indices(std::span<const int> indices);

    static Monomial var(int index, int exp = 1);

    int degree() const;
    bool is_constant() const { return factors_.empty(); }
    int exponent(int var) const;
    int min_var() const { return factors_.empty() ? 0 : factors_.front().first; }
    int max_var() const { return factors_.empty() ? 0 : factors_.back().first; }
    const std::vector<Factor>& factors() const { return factors_; }

    // Expanded index list, e.g. z1*z2^2 -> {1,2,2}.
    std::vector<int> indices() const;

    Monomial times(const Monomial& other) const;
    bool divisible_by(const Monomial& other) const;
    Monomial divided_by(const Monomial& other) const;

    // Removes a single power of var; requires exponent(var) >= 1.
    Monomial without_one(int var) const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<Factor> factors_;
};

// Graded lexicographic order: lower total degree first, ties broken by the
// dense exponent vector read left to right (z1 before z2 before ...).
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

std::string to_string(const Monomial& m, std::string_view var_prefix = "z");

} // namespace jacq
