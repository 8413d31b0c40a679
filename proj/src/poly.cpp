#include "jacq/poly.hpp"

#include <algorithm>
#include <vector>

#include "jacq/errors.hpp"

namespace jacq {

Poly::Poly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw InputError("negative variable count");
}

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(), c);
    return p;
}

Poly Poly::variable(int nvars, int index) {
    Poly p(nvars);
    p.add_term(Monomial::var(index), 1);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational Poly::constant_term() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

int Poly::min_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

void Poly::check_var_range(const Monomial& m) const {
    if (m.max_var() > nvars_) {
        throw InputError("variable index exceeds variable count");
    }
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    check_var_range(m);
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::set_coeff(const Monomial& m, const Rational& c) {
    check_var_range(m);
    if (c == 0) {
        terms_.erase(m);
    } else {
        terms_[m] = c;
    }
}

namespace {

void require_same_vars(const Poly& a, const Poly& b) {
    if (a.nvars() != b.nvars()) {
        throw InputError("variable count mismatch");
    }
}

} // namespace

Poly& Poly::operator+=(const Poly& other) {
    require_same_vars(*this, other);
    for (const auto& [m, c] : other.terms()) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    require_same_vars(*this, other);
    for (const auto& [m, c] : other.terms()) add_term(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly operator+(Poly a, const Poly& b) {
    a += b;
    return a;
}

Poly operator-(Poly a, const Poly& b) {
    a -= b;
    return a;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_vars(a, b);
    Poly out(a.nvars());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            out.add_term(ma.times(mb), ca * cb);
        }
    }
    return out;
}

Poly operator*(const Poly& a, const Rational& c) {
    Poly out(a.nvars());
    if (c == 0) return out;
    for (const auto& [m, k] : a.terms()) out.add_term(m, k * c);
    return out;
}

Poly mul_truncated(const Poly& a, const Poly& b, int order) {
    require_same_vars(a, b);
    Poly out(a.nvars());
    for (const auto& [ma, ca] : a.terms()) {
        int budget = order - ma.degree();
        if (budget < 0) break;
        for (const auto& [mb, cb] : b.terms()) {
            if (mb.degree() > budget) break;
            out.add_term(ma.times(mb), ca * cb);
        }
    }
    return out;
}

namespace {

// Grlex-least monomial of a given degree, used as an erase/search boundary.
Monomial degree_sentinel(int nvars, int degree) {
    if (degree == 0) return Monomial();
    return Monomial::var(std::max(nvars, 1), degree);
}

} // namespace

Poly truncate(Poly p, int order) {
    if (order < 0) return Poly(p.nvars());
    if (p.total_degree() <= order) return p;
    Poly out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() > order) break;
        out.add_term(m, c);
    }
    return out;
}

Poly homogeneous_part(const Poly& p, int k) {
    Poly out(p.nvars());
    if (k < 0) return out;
    const auto& terms = p.terms();
    auto lo = terms.lower_bound(degree_sentinel(p.nvars(), k));
    for (auto it = lo; it != terms.end() && it->first.degree() == k; ++it) {
        out.add_term(it->first, it->second);
    }
    return out;
}

Poly derivative(const Poly& p, int var) {
    if (var < 1 || var > p.nvars()) throw InputError("derivative variable out of range");
    Poly out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(var);
        if (e == 0) continue;
        out.add_term(m.without_one(var), c * e);
    }
    return out;
}

void MulBudget::charge(long pairs) {
    remaining -= pairs;
    if (remaining < 0) {
        throw ResourceLimitError("multiplication budget exhausted");
    }
}

std::vector<Poly> compose_many(std::span<const Poly> ps, std::span<const Poly> subs, int order,
                               MulBudget* budget) {
    int out_vars = 0;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (i == 0) {
            out_vars = subs[i].nvars();
        } else if (subs[i].nvars() != out_vars) {
            throw InputError("substitutions must share a variable count");
        }
    }
    for (const Poly& p : ps) {
        if (static_cast<int>(subs.size()) != p.nvars()) {
            throw InputError("substitution list length must equal variable count");
        }
    }

    // Minimal possible degree contributed by each substituted variable; used
    // to skip source terms that cannot reach the truncation window.
    std::vector<int> min_deg(subs.size(), 0);
    for (std::size_t i = 0; i < subs.size(); ++i) {
        min_deg[i] = subs[i].is_zero() ? 0 : subs[i].min_degree();
    }

    auto bounded_mul = [&](const Poly& a, const Poly& b) {
        if (budget) {
            budget->charge(static_cast<long>(a.term_count()) *
                           static_cast<long>(b.term_count()));
        }
        return order < 0 ? a * b : mul_truncated(a, b, order);
    };

    std::vector<std::vector<Poly>> powers(subs.size());
    auto power_of = [&](int var, int exp) -> const Poly& {
        auto& cache = powers[var - 1];
        if (cache.empty()) {
            cache.push_back(Poly::constant(out_vars, 1));
        }
        while (static_cast<int>(cache.size()) <= exp) {
            cache.push_back(bounded_mul(cache.back(), subs[var - 1]));
        }
        return cache[exp];
    };

    std::vector<Poly> results;
    results.reserve(ps.size());
    for (const Poly& p : ps) {
        Poly out(out_vars);
        for (const auto& [m, c] : p.terms()) {
            bool dead = false;
            long floor = 0;
            for (const auto& [v, e] : m.factors()) {
                if (subs[v - 1].is_zero()) {
                    dead = true;
                    break;
                }
                floor += static_cast<long>(e) * min_deg[v - 1];
            }
            if (dead || (order >= 0 && floor > order)) continue;
            Poly term = Poly::constant(out_vars, c);
            for (const auto& [v, e] : m.factors()) {
                term = bounded_mul(term, power_of(v, e));
                if (term.is_zero()) break;
            }
            out += term;
        }
        results.push_back(order < 0 ? std::move(out) : truncate(std::move(out), order));
    }
    return results;
}

Poly compose(const Poly& p, std::span<const Poly> subs, MulBudget* budget) {
    return compose_many({&p, 1}, subs, -1, budget).front();
}

Poly compose_truncated(const Poly& p, std::span<const Poly> subs, int order, MulBudget* budget) {
    if (order < 0) return Poly(subs.empty() ? 0 : subs[0].nvars());
    return compose_many({&p, 1}, subs, order, budget).front();
}

Poly divexact(const Poly& f, const Poly& g) {
    require_same_vars(f, g);
    if (g.is_zero()) throw InputError("division by the zero polynomial");
    const auto& [lm_g, lc_g] = *g.terms().rbegin();
    Poly q(f.nvars());
    Poly r = f;
    while (!r.is_zero()) {
        const auto& [lm_r, lc_r] = *r.terms().rbegin();
        if (!lm_r.divisible_by(lm_g)) {
            throw InputError("polynomial division is not exact");
        }
        Monomial m = lm_r.divided_by(lm_g);
        Rational c = lc_r / lc_g;
        q.add_term(m, c);
        for (const auto& [mg, cg] : g.terms()) {
            r.add_term(mg.times(m), -cg * c);
        }
    }
    return q;
}

std::string to_string(const Poly& p, std::string_view var_prefix) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        Rational a = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (m.is_constant()) {
            out += to_string(a);
        } else {
            if (a != 1) {
                out += to_string(a);
                out += "*";
            }
            out += to_string(m, var_prefix);
        }
    }
    return out;
}

} // namespace jacq
