#include "jacq/rational.hpp"

#include <cctype>

#include "jacq/errors.hpp"

namespace jacq {

Rational rational(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw InputError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw InputError("rational with zero denominator '" + std::string(text) + "'");
    if (negative) p = -p;
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational odd_double_factorial(unsigned long k) {
    mpz_class f = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        f *= 2 * i - 1;
    }
    return Rational(f);
}

} // namespace jacq
