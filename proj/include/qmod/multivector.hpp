#pragma once

#include "qmod/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qmod {

// Strictly increasing 0-based variable indices; length = degree.
using IndexTuple = std::vector<int>;

// Polynomial multivector field on R^n of fixed degree p >= 0, stored on
// canonically ordered index tuples. Degree 0 is a plain polynomial (single
// component on the empty tuple). Components that vanish are never stored.
class MultiVector {
public:
    MultiVector(int n_vars, int degree);

    static MultiVector from_polynomial(const Polynomial& p);

    int n_vars() const { return n_vars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return comps_.empty(); }
    const std::map<IndexTuple, Polynomial>& components() const { return comps_; }

    // Adds c on the given tuple; unsorted or repeated indices are handled by
    // antisymmetry (sign / zero).
    void add_component(IndexTuple indices, const Polynomial& c);
    // Component with antisymmetric sign lookup; zero polynomial if absent or
    // if the tuple has a repeated index.
    Polynomial component(IndexTuple indices) const;

    MultiVector operator-() const;
    MultiVector& operator+=(const MultiVector& o);
    MultiVector& operator-=(const MultiVector& o);
    friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
    friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
    friend MultiVector operator*(const Rational& c, const MultiVector& m);
    friend bool operator==(const MultiVector& a, const MultiVector& b) {
        return a.n_vars_ == b.n_vars_ && a.degree_ == b.degree_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const MultiVector& a, const MultiVector& b) { return !(a == b); }

    // True iff every component polynomial has zero constant term.
    bool vanishes_at_origin() const;

    // Part whose coefficient polynomials are homogeneous of degree d.
    MultiVector coefficient_degree_part(int d) const;
    int max_coefficient_degree() const;

    std::string str() const;

private:
    int n_vars_, degree_;
    std::map<IndexTuple, Polynomial> comps_;
};

// Exterior product; degrees add, coefficients multiply.
MultiVector wedge(const MultiVector& a, const MultiVector& b);

// Schouten-Nijenhuis bracket. Sign convention (fixed here, all other signs
// derive from it): writing a p-vector as a polynomial in odd symbols theta_k
// with left Grassmann derivatives, and
//
//   i(a, b) = sum_k (d/d theta_k a) ^ (d/d x_k b),
//
//   [a, b] = (-1)^{p+1} i(a, b) - (-1)^{p(q+1)} i(b, a),   p = deg a, q = deg b.
//
// This is the unique choice (up to global sign) that restricts to the Lie
// bracket on vector fields and is a graded Lie bracket:
//   [a, b] = -(-1)^{(p-1)(q-1)} [b, a]
//   [a, b ^ c] = [a, b] ^ c + (-1)^{(p-1) q} b ^ [a, c]
//   (-1)^{(p-1)(r-1)}[a,[b,c]] + cyclic = 0.
// For a bivector pi it gives
//
//   [pi, pi]^{ijk} = 2 sum_{cyc(i,j,k)} sum_l pi^{il} d_l pi^{jk},
//
// exactly twice the Jacobiator of the induced bracket on coordinates.
MultiVector schouten_serial(const MultiVector& a, const MultiVector& b);
MultiVector schouten_parallel(const MultiVector& a, const MultiVector& b);
MultiVector schouten(const MultiVector& a, const MultiVector& b);

// {f, g} = sum_{i<j} pi^{ij} (d_i f d_j g - d_j f d_i g) for a bivector pi.
Polynomial poisson_bracket(const MultiVector& pi, const Polynomial& f, const Polynomial& g);

// epsilon-truncated series of multivectors, coefficients[k] at eps^k.
class FormalMultiVector {
public:
    FormalMultiVector(int truncation_order, int n_vars, int degree);
    explicit FormalMultiVector(std::vector<MultiVector> coefficients);

    int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }
    int n_vars() const { return coeffs_.front().n_vars(); }
    int degree() const { return coeffs_.front().degree(); }
    const MultiVector& coefficient(int k) const { return coeffs_.at(k); }
    MultiVector& coefficient(int k) { return coeffs_.at(k); }
    const std::vector<MultiVector>& coefficients() const { return coeffs_; }

private:
    std::vector<MultiVector> coeffs_;
};

struct JacobiReport {
    bool holds = false;
    std::optional<int> first_failing_order;
    std::optional<MultiVector> residual; // trivector at the failing order
};

// Computes [pi_eps, pi_eps] mod eps^{order+1}; holds iff every coefficient is
// the zero trivector.
JacobiReport jacobi_check(const FormalMultiVector& pi_eps, int order);

// True iff every eps-coefficient evaluates to the zero bivector at 0.
bool coisotropy_check(const FormalMultiVector& pi_eps);

// Random degree-p multivector for property probes.
MultiVector random_multivector(Prng& rng, int n_vars, int degree, int max_poly_degree,
                               int max_terms);

} // namespace qmod
