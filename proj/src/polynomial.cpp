#include "qmod/polynomial.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qmod {

Polynomial::Polynomial(int n_vars) : n_vars_(n_vars) {
    if (n_vars <= 0)
        throw std::invalid_argument("Polynomial: n_vars must be positive");
}

Polynomial Polynomial::constant(int n_vars, Rational c) {
    Polynomial p(n_vars);
    if (!c.is_zero())
        p.terms_.emplace(Exponents(n_vars, 0), std::move(c));
    return p;
}

Polynomial Polynomial::variable(int n_vars, int i) {
    if (i < 0 || i >= n_vars)
        throw std::out_of_range("Polynomial::variable: index out of range");
    Exponents e(n_vars, 0);
    e[i] = 1;
    return monomial(n_vars, std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(int n_vars, Exponents exps, Rational c) {
    Polynomial p(n_vars);
    if (static_cast<int>(exps.size()) != n_vars)
        throw std::invalid_argument("Polynomial::monomial: exponent length mismatch");
    for (int e : exps)
        if (e < 0)
            throw std::invalid_argument("Polynomial::monomial: negative exponent");
    if (!c.is_zero())
        p.terms_.emplace(std::move(exps), std::move(c));
    return p;
}

void Polynomial::check_same_space(const Polynomial& o) const {
    if (n_vars_ != o.n_vars_)
        throw std::invalid_argument("Polynomial: mismatched n_vars");
}

int Polynomial::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
}

Rational Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != n_vars_)
        throw std::invalid_argument("Polynomial::add_term: exponent length mismatch");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(n_vars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_space(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_space(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_space(b);
    Polynomial r(a.n_vars_);
    Exponents e(a.n_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.n_vars_; ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p.n_vars());
    if (c.is_zero())
        return r;
    for (const auto& [e, pc] : p.terms())
        r.add_term(e, c * pc);
    return r;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0)
        throw std::invalid_argument("Polynomial::pow: negative exponent");
    Polynomial r = constant(n_vars_, Rational(1));
    for (int i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

Polynomial Polynomial::derivative(int i) const {
    if (i < 0 || i >= n_vars_)
        throw std::out_of_range("Polynomial::derivative: index out of range");
    Polynomial r(n_vars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0)
            continue;
        Exponents d = e;
        d[i] -= 1;
        r.add_term(d, Rational(e[i]) * c);
    }
    return r;
}

Polynomial Polynomial::derivative(const Exponents& order) const {
    if (static_cast<int>(order.size()) != n_vars_)
        throw std::invalid_argument("Polynomial::derivative: order length mismatch");
    Polynomial r = *this;
    for (int i = 0; i < n_vars_; ++i)
        for (int k = 0; k < order[i]; ++k)
            r = r.derivative(i);
    return r;
}

Rational Polynomial::evaluate_at_zero() const {
    return coefficient(Exponents(n_vars_, 0));
}

Polynomial Polynomial::homogeneous_part(int d) const {
    Polynomial r(n_vars_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == d)
            r.terms_.emplace(e, c);
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            a = a.abs();
        }
        first = false;
        bool has_vars = false;
        std::ostringstream vars;
        for (int i = 0; i < n_vars_; ++i) {
            if (e[i] == 0)
                continue;
            if (has_vars)
                vars << "*";
            vars << "x" << (i + 1);
            if (e[i] > 1)
                vars << "^" << e[i];
            has_vars = true;
        }
        if (!has_vars) {
            os << a.str();
        } else {
            if (!a.is_one())
                os << a.str() << "*";
            os << vars.str();
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

Polynomial random_polynomial(Prng& rng, int n_vars, int max_degree, int max_terms) {
    Polynomial p(n_vars);
    int terms = rng.uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        int deg = rng.uniform(0, max_degree);
        Exponents e(n_vars, 0);
        for (int d = 0; d < deg; ++d)
            e[rng.uniform(0, n_vars - 1)] += 1;
        p.add_term(e, rng.small_rational());
    }
    return p;
}

} // namespace qmod
