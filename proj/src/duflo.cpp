#include "qmod/duflo.hpp"

#include <stdexcept>

namespace qmod {

Polynomial trace_ad_power(const LieAlgebra& g, int m) {
    if (m <= 0)
        throw std::invalid_argument("trace_ad_power: m must be positive");
    const int n = g.dim();
    // (ad_d)^k_l = sum_i c^k_{il} d_i, a matrix of linear polynomials in the
    // derivative symbols (which commute).
    std::vector<std::vector<Polynomial>> ad(n, std::vector<Polynomial>(n, Polynomial::zero(n)));
    for (int i = 0; i < n; ++i) {
        for (int l = 0; l < n; ++l) {
            const RationalVector& c = g.bracket_basis(i, l);
            for (int k = 0; k < n; ++k)
                if (!c[k].is_zero())
                    ad[k][l] += c[k] * Polynomial::variable(n, i);
        }
    }
    std::vector<std::vector<Polynomial>> power = ad;
    for (int step = 1; step < m; ++step) {
        std::vector<std::vector<Polynomial>> next(n, std::vector<Polynomial>(n, Polynomial::zero(n)));
        for (int r = 0; r < n; ++r)
            for (int k = 0; k < n; ++k) {
                if (power[r][k].is_zero())
                    continue;
                for (int c = 0; c < n; ++c)
                    if (!ad[k][c].is_zero())
                        next[r][c] += power[r][k] * ad[k][c];
            }
        power = std::move(next);
    }
    Polynomial tr(n);
    for (int r = 0; r < n; ++r)
        tr += power[r][r];
    return tr;
}

OperatorSeries duflo_series(const LieAlgebra& g, int order, bool invert, int wheel_sign) {
    const int n = g.dim();
    OperatorSeries ops(order + 1, Polynomial::zero(n));
    ops[0] = Polynomial::constant(n, Rational(1));
    // multiply exp(s c_{2m} eps^{2m} T_{2m}) factors, truncated at eps^order
    for (int m = 1; 2 * m <= order; ++m) {
        Rational c = wheel_weight(m, wheel_sign);
        if (invert)
            c = -c;
        Polynomial t = trace_ad_power(g, 2 * m);
        OperatorSeries factor(order + 1, Polynomial::zero(n));
        factor[0] = Polynomial::constant(n, Rational(1));
        Polynomial tpow = Polynomial::constant(n, Rational(1));
        Rational coef(1);
        for (int k = 1; 2 * m * k <= order; ++k) {
            tpow = tpow * t;
            coef *= c / Rational(k);
            factor[2 * m * k] = coef * tpow;
        }
        OperatorSeries next(order + 1, Polynomial::zero(n));
        for (int a = 0; a <= order; ++a) {
            if (ops[a].is_zero())
                continue;
            for (int b = 0; a + b <= order; ++b)
                if (!factor[b].is_zero())
                    next[a + b] += ops[a] * factor[b];
        }
        ops = std::move(next);
    }
    return ops;
}

Polynomial apply_operator(const Polynomial& op, const Polynomial& f) {
    Polynomial out(f.n_vars());
    for (const auto& [e, c] : op.terms())
        out += c * f.derivative(e);
    return out;
}

PolySeries apply_operator_series(const OperatorSeries& ops, const PolySeries& f, int order) {
    const int n = f.front().n_vars();
    PolySeries out(order + 1, Polynomial::zero(n));
    for (int a = 0; a <= order && a < static_cast<int>(ops.size()); ++a) {
        if (ops[a].is_zero())
            continue;
        for (int b = 0; a + b <= order && b < static_cast<int>(f.size()); ++b)
            if (!f[b].is_zero())
                out[a + b] += apply_operator(ops[a], f[b]);
    }
    return out;
}

PolySeries duflo_apply(const LieAlgebra& g, const Polynomial& f, int order, bool invert,
                       int wheel_sign) {
    OperatorSeries ops = duflo_series(g, order, invert, wheel_sign);
    PolySeries fs = {f};
    return apply_operator_series(ops, fs, order);
}

std::vector<Rational> rho_linear(const LieAlgebra& g, const Polynomial& f, int order,
                                 int wheel_sign) {
    return rho_linear_series(g, PolySeries{f}, order, wheel_sign);
}

std::vector<Rational> rho_linear_series(const LieAlgebra& g, const PolySeries& f, int order,
                                        int wheel_sign) {
    OperatorSeries ops = duflo_series(g, order, true, wheel_sign);
    PolySeries applied = apply_operator_series(ops, f, order);
    std::vector<Rational> out(order + 1);
    for (int k = 0; k <= order; ++k)
        out[k] = applied[k].evaluate_at_zero();
    return out;
}

} // namespace qmod
