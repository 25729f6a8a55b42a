#pragma once

#include "qmod/lie.hpp"
#include "qmod/star.hpp"

#include <vector>

namespace qmod {

// Constant-coefficient differential operators encoded as polynomials in the
// derivative symbols d_1..d_n; an OperatorSeries carries one operator per
// eps order.
using OperatorSeries = std::vector<Polynomial>;

// tr(ad_d^m): contract m structure constants in a cycle; a polynomial of
// degree m in the derivative symbols. tr(ad_d^2) = K^{ij} d_i d_j.
Polynomial trace_ad_power(const LieAlgebra& g, int m);

// exp(+/- sum_{2n <= order} c_{2n} eps^{2n} tr(ad_d^{2n})) with
// c_{2n} = wheel_weight(n, wheel_sign), expanded through eps^order.
OperatorSeries duflo_series(const LieAlgebra& g, int order, bool invert, int wheel_sign = +1);

Polynomial apply_operator(const Polynomial& op, const Polynomial& f);
PolySeries apply_operator_series(const OperatorSeries& ops, const PolySeries& f, int order);

// D^{+/-1} f as an eps-series of polynomials.
PolySeries duflo_apply(const LieAlgebra& g, const Polynomial& f, int order, bool invert,
                       int wheel_sign = +1);

// rho = ev_0 . D^{-1}, per eps order.
std::vector<Rational> rho_linear(const LieAlgebra& g, const Polynomial& f, int order,
                                 int wheel_sign = +1);
// rho applied to an eps-series (e.g. a star product output).
std::vector<Rational> rho_linear_series(const LieAlgebra& g, const PolySeries& f, int order,
                                        int wheel_sign = +1);

} // namespace qmod
