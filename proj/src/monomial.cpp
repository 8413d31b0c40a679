#include "jacq/monomial.hpp"

#include <algorithm>

#include "jacq/errors.hpp"

namespace jacq {

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end());
    Monomial m;
    for (const auto& [v, e] : factors) {
        if (v < 1) throw InputError("variable index must be >= 1");
        if (e < 0) throw InputError("negative exponent");
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == v) {
            m.factors_.back().second += e;
        } else {
            m.factors_.emplace_back(v, e);
        }
    }
    return m;
}

Monomial Monomial::from_indices(std::span<const int> indices) {
    std::vector<Factor> factors;
    factors.reserve(indices.size());
    for (int v : indices) factors.emplace_back(v, 1);
    return from_factors(std::move(factors));
}

Monomial Monomial::var(int index, int exp) {
    return from_factors({{index, exp}});
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponent(int var) const {
    for (const auto& [v, e] : factors_) {
        if (v == var) return e;
        if (v > var) break;
    }
    return 0;
}

std::vector<int> Monomial::indices() const {
    std::vector<int> out;
    out.reserve(degree());
    for (const auto& [v, e] : factors_) {
        out.insert(out.end(), e, v);
    }
    return out;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial m;
    auto ia = factors_.begin(), ib = other.factors_.begin();
    while (ia != factors_.end() || ib != other.factors_.end()) {
        if (ib == other.factors_.end() || (ia != factors_.end() && ia->first < ib->first)) {
            m.factors_.push_back(*ia++);
        } else if (ia == factors_.end() || ib->first < ia->first) {
            m.factors_.push_back(*ib++);
        } else {
            m.factors_.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return m;
}

bool Monomial::divisible_by(const Monomial& other) const {
    for (const auto& [v, e] : other.factors_) {
        if (exponent(v) < e) return false;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
    if (!divisible_by(other)) throw InputError("monomial division is not exact");
    Monomial m;
    for (const auto& [v, e] : factors_) {
        int r = e - other.exponent(v);
        if (r > 0) m.factors_.emplace_back(v, r);
    }
    return m;
}

Monomial Monomial::without_one(int var) const {
    return divided_by(Monomial::var(var));
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    auto ia = a.factors().begin(), ib = b.factors().begin();
    while (ia != a.factors().end() && ib != b.factors().end()) {
        // A positive exponent on an earlier variable wins lexicographically.
        if (ia->first != ib->first) return ia->first > ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return false;
}

std::string to_string(const Monomial& m, std::string_view var_prefix) {
    if (m.is_constant()) return "1";
    std::string out;
    for (const auto& [v, e] : m.factors()) {
        if (!out.empty()) out += "*";
        out += var_prefix;
        out += std::to_string(v);
        if (e > 1) {
            out += "^";
            out += std::to_string(e);
        }
    }
    return out;
}

} // namespace jacq
