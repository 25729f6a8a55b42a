#pragma once

#include "qmod/prng.hpp"
#include "qmod/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace qmod {

// Exponent multi-index; length equals n_vars, entries >= 0.
using Exponents = std::vector<int>;

// Sparse multivariate polynomial over Q in variables x1..xn.
// Invariants: no stored zero coefficients; every key has length n_vars.
class Polynomial {
public:
    explicit Polynomial(int n_vars);

    static Polynomial zero(int n_vars) { return Polynomial(n_vars); }
    static Polynomial constant(int n_vars, Rational c);
    // 0-based variable index.
    static Polynomial variable(int n_vars, int i);
    static Polynomial monomial(int n_vars, Exponents exps, Rational c);

    int n_vars() const { return n_vars_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const; // -1 for the zero polynomial
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    Rational coefficient(const Exponents& e) const;
    void add_term(const Exponents& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    Polynomial pow(int k) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Formal partial derivative w.r.t. x_{i+1} (0-based i).
    Polynomial derivative(int i) const;
    // Iterated derivative per multi-index.
    Polynomial derivative(const Exponents& order) const;

    // Algebra character ev0: value of the constant term.
    Rational evaluate_at_zero() const;

    // Sum of terms of total degree d.
    Polynomial homogeneous_part(int d) const;

    std::string str() const; // e.g. "2*x1^2*x2 - 1/3"

private:
    void check_same_space(const Polynomial& o) const;

    int n_vars_;
    std::map<Exponents, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Random sparse polynomial for property probes: up to max_terms monomials of
// total degree <= max_degree with small rational coefficients.
Polynomial random_polynomial(Prng& rng, int n_vars, int max_degree, int max_terms);

} // namespace qmod
