#include "qmod/multivector.hpp"

#include "qmod/parallel.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qmod {

namespace {

// Sorts a tuple in place; returns the permutation sign, or 0 on repeats.
int sort_sign(IndexTuple& t) {
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i) {
        for (std::size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
            std::swap(t[j], t[j - 1]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] == t[i - 1])
            return 0;
    return sign;
}

// Merge sign for concatenating two strictly increasing tuples (0 on overlap).
int merge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    long inversions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining entries of a
            inversions += static_cast<long>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size())
        out.push_back(a[i++]);
    while (j < b.size())
        out.push_back(b[j++]);
    return (inversions % 2 == 0) ? 1 : -1;
}

} // namespace

MultiVector::MultiVector(int n_vars, int degree) : n_vars_(n_vars), degree_(degree) {
    if (n_vars <= 0)
        throw std::invalid_argument("MultiVector: n_vars must be positive");
    if (degree < 0)
        throw std::invalid_argument("MultiVector: degree must be >= 0");
}

MultiVector MultiVector::from_polynomial(const Polynomial& p) {
    MultiVector m(p.n_vars(), 0);
    m.add_component({}, p);
    return m;
}

void MultiVector::add_component(IndexTuple indices, const Polynomial& c) {
    if (static_cast<int>(indices.size()) != degree_)
        throw std::invalid_argument("MultiVector::add_component: tuple length != degree");
    if (c.n_vars() != n_vars_)
        throw std::invalid_argument("MultiVector::add_component: mismatched n_vars");
    for (int i : indices)
        if (i < 0 || i >= n_vars_)
            throw std::out_of_range("MultiVector::add_component: index out of range");
    int sign = sort_sign(indices);
    if (sign == 0 || c.is_zero())
        return;
    Polynomial v = sign == 1 ? c : -c;
    auto it = comps_.find(indices);
    if (it == comps_.end()) {
        comps_.emplace(std::move(indices), std::move(v));
    } else {
        it->second += v;
        if (it->second.is_zero())
            comps_.erase(it);
    }
}

Polynomial MultiVector::component(IndexTuple indices) const {
    int sign = sort_sign(indices);
    if (sign == 0)
        return Polynomial::zero(n_vars_);
    auto it = comps_.find(indices);
    if (it == comps_.end())
        return Polynomial::zero(n_vars_);
    return sign == 1 ? it->second : -it->second;
}

MultiVector MultiVector::operator-() const {
    MultiVector r(n_vars_, degree_);
    for (const auto& [t, c] : comps_)
        r.comps_.emplace(t, -c);
    return r;
}

MultiVector& MultiVector::operator+=(const MultiVector& o) {
    if (n_vars_ != o.n_vars_ || degree_ != o.degree_)
        throw std::invalid_argument("MultiVector add: shape mismatch");
    for (const auto& [t, c] : o.comps_)
        add_component(t, c);
    return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& o) {
    if (n_vars_ != o.n_vars_ || degree_ != o.degree_)
        throw std::invalid_argument("MultiVector sub: shape mismatch");
    for (const auto& [t, c] : o.comps_)
        add_component(t, -c);
    return *this;
}

MultiVector operator*(const Rational& c, const MultiVector& m) {
    MultiVector r(m.n_vars_, m.degree_);
    if (c.is_zero())
        return r;
    for (const auto& [t, p] : m.comps_)
        r.comps_.emplace(t, c * p);
    return r;
}

bool MultiVector::vanishes_at_origin() const {
    for (const auto& [t, c] : comps_)
        if (!c.evaluate_at_zero().is_zero())
            return false;
    return true;
}

MultiVector MultiVector::coefficient_degree_part(int d) const {
    MultiVector r(n_vars_, degree_);
    for (const auto& [t, c] : comps_) {
        Polynomial h = c.homogeneous_part(d);
        if (!h.is_zero())
            r.comps_.emplace(t, std::move(h));
    }
    return r;
}

int MultiVector::max_coefficient_degree() const {
    int d = -1;
    for (const auto& [t, c] : comps_)
        d = std::max(d, c.total_degree());
    return d;
}

std::string MultiVector::str() const {
    if (comps_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : comps_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (std::size_t i = 0; i < t.size(); ++i)
            os << (i == 0 ? " d" : "^d") << (t[i] + 1);
    }
    return os.str();
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
    if (a.n_vars() != b.n_vars())
        throw std::invalid_argument("wedge: mismatched n_vars");
    MultiVector r(a.n_vars(), a.degree() + b.degree());
    IndexTuple merged;
    for (const auto& [ta, ca] : a.components()) {
        for (const auto& [tb, cb] : b.components()) {
            int sign = merge_sign(ta, tb, merged);
            if (sign == 0)
                continue;
            Polynomial prod = ca * cb;
            if (sign < 0)
                prod = -prod;
            r.add_component(merged, prod);
        }
    }
    return r;
}

namespace {

// Left Grassmann derivative d/d theta_k.
MultiVector theta_derivative(const MultiVector& a, int k) {
    MultiVector r(a.n_vars(), a.degree() - 1);
    for (const auto& [t, c] : a.components()) {
        auto pos = std::find(t.begin(), t.end(), k);
        if (pos == t.end())
            continue;
        IndexTuple rest;
        rest.reserve(t.size() - 1);
        for (int i : t)
            if (i != k)
                rest.push_back(i);
        int sign = (pos - t.begin()) % 2 == 0 ? 1 : -1;
        r.add_component(std::move(rest), sign == 1 ? c : -c);
    }
    return r;
}

// i(a, b) = sum_k (d/d theta_k a) ^ (d_k b); the k-summands are independent.
MultiVector interior_product_term(const MultiVector& a, const MultiVector& b, int k) {
    MultiVector da = theta_derivative(a, k);
    MultiVector db(b.n_vars(), b.degree());
    for (const auto& [t, c] : b.components()) {
        Polynomial d = c.derivative(k);
        if (!d.is_zero())
            db.add_component(t, d);
    }
    return wedge(da, db);
}

template <bool Parallel>
MultiVector schouten_impl(const MultiVector& a, const MultiVector& b) {
    if (a.n_vars() != b.n_vars())
        throw std::invalid_argument("schouten: mismatched n_vars");
    const int p = a.degree(), q = b.degree();
    if (p + q == 0)
        throw std::invalid_argument("schouten: result degree would be negative");
    const int n = a.n_vars();
    const int deg = p + q - 1;
    std::vector<MultiVector> slots(2 * n, MultiVector(a.n_vars(), deg));
    auto work = [&](std::size_t k) {
        if (k < static_cast<std::size_t>(n)) {
            if (p > 0)
                slots[k] = interior_product_term(a, b, static_cast<int>(k));
        } else {
            if (q > 0)
                slots[k] = interior_product_term(b, a, static_cast<int>(k) - n);
        }
    };
    if constexpr (Parallel)
        par::for_index(slots.size(), work);
    else
        for (std::size_t k = 0; k < slots.size(); ++k)
            work(k);
    // [a,b] = (-1)^{p+1} i(a,b) - (-1)^{p(q+1)} i(b,a)
    int s1 = (p + 1) % 2 == 0 ? 1 : -1;
    int s2 = (p * (q + 1)) % 2 == 0 ? -1 : 1;
    MultiVector out(a.n_vars(), deg);
    for (int k = 0; k < n; ++k) {
        if (s1 == 1)
            out += slots[k];
        else
            out -= slots[k];
        if (s2 == 1)
            out += slots[n + k];
        else
            out -= slots[n + k];
    }
    return out;
}

} // namespace

MultiVector schouten_serial(const MultiVector& a, const MultiVector& b) {
    return schouten_impl<false>(a, b);
}
MultiVector schouten_parallel(const MultiVector& a, const MultiVector& b) {
    return schouten_impl<true>(a, b);
}
MultiVector schouten(const MultiVector& a, const MultiVector& b) {
    return par::enabled() ? schouten_parallel(a, b) : schouten_serial(a, b);
}

Polynomial poisson_bracket(const MultiVector& pi, const Polynomial& f, const Polynomial& g) {
    if (pi.degree() != 2)
        throw std::invalid_argument("poisson_bracket: pi must have degree 2");
    if (pi.n_vars() != f.n_vars() || pi.n_vars() != g.n_vars())
        throw std::invalid_argument("poisson_bracket: mismatched n_vars");
    Polynomial r(f.n_vars());
    for (const auto& [t, c] : pi.components()) {
        int i = t[0], j = t[1];
        r += c * (f.derivative(i) * g.derivative(j) - f.derivative(j) * g.derivative(i));
    }
    return r;
}

FormalMultiVector::FormalMultiVector(int truncation_order, int n_vars, int degree)
    : coeffs_(truncation_order + 1, MultiVector(n_vars, degree)) {
    if (truncation_order < 0)
        throw std::invalid_argument("FormalMultiVector: negative truncation order");
}

FormalMultiVector::FormalMultiVector(std::vector<MultiVector> coefficients)
    : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty())
        throw std::invalid_argument("FormalMultiVector: empty coefficient list");
    for (const auto& c : coeffs_)
        if (c.n_vars() != coeffs_.front().n_vars() || c.degree() != coeffs_.front().degree())
            throw std::invalid_argument("FormalMultiVector: inhomogeneous coefficients");
}

JacobiReport jacobi_check(const FormalMultiVector& pi_eps, int order) {
    if (order > pi_eps.truncation_order())
        throw std::invalid_argument("jacobi_check: order exceeds truncation order");
    JacobiReport report;
    report.holds = true;
    for (int m = 0; m <= order; ++m) {
        MultiVector residual(pi_eps.n_vars(), 2 * pi_eps.degree() - 1);
        for (int s = 0; s <= m; ++s) {
            if (s > pi_eps.truncation_order() || m - s > pi_eps.truncation_order())
                continue;
            residual += schouten(pi_eps.coefficient(s), pi_eps.coefficient(m - s));
        }
        if (!residual.is_zero()) {
            report.holds = false;
            report.first_failing_order = m;
            report.residual = std::move(residual);
            return report;
        }
    }
    return report;
}

bool coisotropy_check(const FormalMultiVector& pi_eps) {
    for (const auto& c : pi_eps.coefficients())
        if (!c.vanishes_at_origin())
            return false;
    return true;
}

MultiVector random_multivector(Prng& rng, int n_vars, int degree, int max_poly_degree,
                               int max_terms) {
    MultiVector m(n_vars, degree);
    if (degree > n_vars)
        return m;
    int n_comps = rng.uniform(1, 3);
    for (int c = 0; c < n_comps; ++c) {
        IndexTuple t;
        while (static_cast<int>(t.size()) < degree) {
            int i = rng.uniform(0, n_vars - 1);
            if (std::find(t.begin(), t.end(), i) == t.end())
                t.push_back(i);
        }
        m.add_component(t, random_polynomial(rng, n_vars, max_poly_degree, max_terms));
    }
    return m;
}

} // namespace qmod
