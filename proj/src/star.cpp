#include "qmod/star.hpp"

#include <stdexcept>

namespace qmod {

PolySeries series_add(const PolySeries& a, const PolySeries& b) {
    PolySeries out = a.size() >= b.size() ? a : b;
    const PolySeries& small = a.size() >= b.size() ? b : a;
    for (std::size_t k = 0; k < small.size(); ++k)
        out[k] += small[k];
    return out;
}

bool series_equal(const PolySeries& a, const PolySeries& b, int order) {
    auto at = [](const PolySeries& s, int k) -> Polynomial {
        if (k < static_cast<int>(s.size()))
            return s[k];
        return Polynomial::zero(s.front().n_vars());
    };
    for (int k = 0; k <= order; ++k)
        if (at(a, k) != at(b, k))
            return false;
    return true;
}

Rational bernoulli(int m) {
    if (m < 0)
        throw std::invalid_argument("bernoulli: negative index");
    // B_j from sum_{j=0}^{m} C(m+1, j) B_j = 0, B_0 = 1 (gives B_1 = -1/2).
    std::vector<Rational> b(m + 1);
    for (int j = 0; j <= m; ++j) {
        if (j == 0) {
            b[0] = Rational(1);
            continue;
        }
        Rational acc(0);
        Rational binom(1); // C(j+1, i) built incrementally
        for (int i = 0; i < j; ++i) {
            acc += binom * b[i];
            binom *= Rational(j + 1 - i, i + 1);
        }
        b[j] = -acc / Rational(j + 1);
    }
    return b[m];
}

Rational factorial(int m) {
    Rational r(1);
    for (int i = 2; i <= m; ++i)
        r *= Rational(i);
    return r;
}

Rational wheel_weight(int n, int sign) {
    if (n <= 0)
        throw std::invalid_argument("wheel_weight: n must be positive");
    Rational magnitude = bernoulli(2 * n).abs() / (Rational(4 * n) * factorial(2 * n));
    return sign >= 0 ? magnitude : -magnitude;
}

WeightTable WeightTable::standard(int wheel_sign) {
    WeightTable wt;
    wt.w_parallel = Rational(1, 8);
    wt.w_left = Rational(1, 12);
    wt.w_right = Rational(-1, 12);
    wt.w_cycle = Rational(2 * wheel_sign) * wheel_weight(1);
    wt.wheel_sign = wheel_sign;
    return wt;
}

KontsevichStar2::KontsevichStar2(MultiVector pi, WeightTable wt)
    : pi_(std::move(pi)), wt_(std::move(wt)) {
    if (pi_.degree() != 2)
        throw std::invalid_argument("KontsevichStar2: pi must be a bivector");
    if (!schouten(pi_, pi_).is_zero())
        throw std::invalid_argument("KontsevichStar2: pi does not satisfy the Jacobi identity");
    for (const auto& [t, c] : pi_.components()) {
        oriented_.push_back({t[0], t[1], c});
        oriented_.push_back({t[1], t[0], -c});
    }
}

PolySeries KontsevichStar2::product(const Polynomial& f, const Polynomial& g) const {
    const int n = pi_.n_vars();
    if (f.n_vars() != n || g.n_vars() != n)
        throw std::invalid_argument("KontsevichStar2: mismatched n_vars");

    Polynomial b2(n);
    // first and second derivatives of f and g, computed once
    std::vector<Polynomial> df, dg;
    df.reserve(n);
    dg.reserve(n);
    for (int i = 0; i < n; ++i) {
        df.push_back(f.derivative(i));
        dg.push_back(g.derivative(i));
    }
    auto second = [n](const std::vector<Polynomial>& d) {
        std::vector<std::vector<Polynomial>> dd(n);
        for (int i = 0; i < n; ++i) {
            dd[i].reserve(n);
            for (int j = 0; j < n; ++j)
                dd[i].push_back(d[i].derivative(j));
        }
        return dd;
    };
    std::vector<std::vector<Polynomial>> ddf = second(df), ddg = second(dg);
    for (const auto& a : oriented_) {
        for (const auto& b : oriented_) {
            // parallel: pi^{ij} pi^{kl} didk f djdl g
            if (!wt_.w_parallel.is_zero() && !ddf[a.i][b.i].is_zero() &&
                !ddg[a.j][b.j].is_zero())
                b2 += wt_.w_parallel * (a.c * b.c * ddf[a.i][b.i] * ddg[a.j][b.j]);
            // left: pi^{ij} dj pi^{kl} didk f dl g
            Polynomial dbc = b.c.derivative(a.j);
            if (!dbc.is_zero()) {
                if (!wt_.w_left.is_zero() && !ddf[a.i][b.i].is_zero())
                    b2 += wt_.w_left * (a.c * dbc * ddf[a.i][b.i] * dg[b.j]);
                // right: pi^{ij} dj pi^{kl} dk f didl g
                if (!wt_.w_right.is_zero() && !ddg[a.i][b.j].is_zero())
                    b2 += wt_.w_right * (a.c * dbc * df[b.i] * ddg[a.i][b.j]);
            }
            // cycle: dk pi^{ij} di pi^{kl} dj f dl g
            if (!wt_.w_cycle.is_zero()) {
                Polynomial dac = a.c.derivative(b.i);
                if (!dac.is_zero()) {
                    Polynomial dbc2 = b.c.derivative(a.i);
                    if (!dbc2.is_zero())
                        b2 += wt_.w_cycle * (dac * dbc2 * df[a.j] * dg[b.j]);
                }
            }
        }
    }
    PolySeries out;
    out.push_back(f * g);
    out.push_back(Rational(1, 2) * poisson_bracket(pi_, f, g));
    out.push_back(std::move(b2));
    return out;
}

PolySeries kontsevich_star2(const MultiVector& pi, const Polynomial& f, const Polynomial& g,
                            const WeightTable& wt) {
    return KontsevichStar2(pi, wt).product(f, g);
}

PolySeries star_series(const StarFn& star, const PolySeries& a, const PolySeries& b, int order) {
    const int n = a.front().n_vars();
    PolySeries out(order + 1, Polynomial::zero(n));
    for (std::size_t u = 0; u < a.size() && static_cast<int>(u) <= order; ++u) {
        if (a[u].is_zero())
            continue;
        for (std::size_t v = 0; v < b.size() && static_cast<int>(u + v) <= order; ++v) {
            if (b[v].is_zero())
                continue;
            PolySeries prod = star(a[u], b[v]);
            for (std::size_t w = 0; w < prod.size(); ++w) {
                int k = static_cast<int>(u + v + w);
                if (k <= order)
                    out[k] += prod[w];
            }
        }
    }
    return out;
}

} // namespace qmod
