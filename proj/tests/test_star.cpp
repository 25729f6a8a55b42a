#include "qmod/duflo.hpp"
#include "qmod/enveloping.hpp"
#include "qmod/lie.hpp"
#include "qmod/prng.hpp"
#include "qmod/star.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qmod;

namespace {

// Independent Bernoulli oracle: Akiyama-Tanigawa algorithm. It produces the
// B1 = +1/2 convention; only the sign of B1 differs from ours.
Rational bernoulli_at(int m) {
    std::vector<Rational> a(m + 1);
    for (int j = 0; j <= m; ++j) {
        a[j] = Rational(1, j + 1);
        for (int i = j; i >= 1; --i)
            a[i - 1] = Rational(i) * (a[i - 1] - a[i]);
    }
    return m == 1 ? -a[0] : a[0];
}

Polynomial x(int n, int i) { return Polynomial::variable(n, i); }

// so(3) (+) R^2 structure built by hand for associativity probes:
// linear so(3) block plus pi^{45} = Psi(x) C^{45}, C^{45} = 1.
MultiVector so3_r2_pi() {
    LieAlgebra so3 = make_so3();
    MultiVector pi(5, 2);
    for (const auto& t : so3.bracket_list()) {
        Exponents e(5, 0);
        e[t.k] = 1;
        pi.add_component({t.i, t.j}, Polynomial::monomial(5, e, t.c));
    }
    Polynomial psi(5);
    psi.add_term({2, 0, 0, 0, 0}, Rational(-1, 2));
    psi.add_term({0, 2, 0, 0, 0}, Rational(-1, 2));
    psi.add_term({0, 0, 2, 0, 0}, Rational(-1, 2));
    pi.add_component({3, 4}, psi);
    return pi;
}

} // namespace

TEST_CASE("bernoulli numbers from the recurrence match the A-T oracle", "[star]") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(6) == Rational(1, 42));
    CHECK(bernoulli(8) == Rational(-1, 30));
    CHECK(bernoulli(10) == Rational(5, 66));
    for (int m = 0; m <= 14; ++m)
        CHECK(bernoulli(m) == bernoulli_at(m));
}

TEST_CASE("wheel weights: magnitudes and nonvanishing", "[star]") {
    CHECK(wheel_weight(1) == Rational(1, 48));
    CHECK(wheel_weight(2) == Rational(1, 5760));
    CHECK(wheel_weight(1, -1) == Rational(-1, 48));
    for (int n = 1; n <= 5; ++n) {
        Rational w = wheel_weight(n);
        CHECK(w != Rational(0));
        CHECK(w == bernoulli_at(2 * n).abs() / (Rational(4 * n) * factorial(2 * n)));
    }
}

TEST_CASE("star product: unit law and constants", "[star]") {
    KontsevichStar2 star(make_so3().linear_poisson());
    Prng rng(61001);
    Polynomial one = Polynomial::constant(3, Rational(1));
    for (int t = 0; t < 30; ++t) {
        Polynomial f = random_polynomial(rng, 3, 3, 4);
        PolySeries l = star.product(one, f);
        PolySeries r = star.product(f, one);
        CHECK(l[0] == f);
        CHECK(r[0] == f);
        CHECK(l[1].is_zero());
        CHECK(r[1].is_zero());
        CHECK(l[2].is_zero());
        CHECK(r[2].is_zero());
        // any constant behaves like a scalar
        Polynomial c = Polynomial::constant(3, rng.small_rational());
        PolySeries s = star.product(c, f);
        CHECK(s[0] == c * f);
        CHECK(s[1].is_zero());
        CHECK(s[2].is_zero());
    }
}

TEST_CASE("star product eps^1 part is half the Poisson bracket", "[star]") {
    MultiVector pi = make_so3().linear_poisson();
    KontsevichStar2 star(pi);
    Prng rng(61002);
    for (int t = 0; t < 50; ++t) {
        Polynomial f = random_polynomial(rng, 3, 3, 4);
        Polynomial g = random_polynomial(rng, 3, 3, 4);
        PolySeries fg = star.product(f, g);
        PolySeries gf = star.product(g, f);
        CHECK(fg[1] == Rational(1, 2) * poisson_bracket(pi, f, g));
        // f*g - g*f = eps {f,g} + O(eps^2)
        CHECK(fg[0] == gf[0]);
        CHECK(fg[1] - gf[1] == poisson_bracket(pi, f, g));
    }
}

TEST_CASE("star product rejects non-Jacobi bivectors", "[star]") {
    MultiVector bad(3, 2);
    bad.add_component({0, 1}, x(3, 1));
    bad.add_component({1, 2}, x(3, 0));
    CHECK_THROWS_AS(KontsevichStar2(bad), std::invalid_argument);
}

TEST_CASE("associativity mod eps^3 over so(3) and the quadratic fixture",
          "[star][property]") {
    for (int fixture = 0; fixture < 2; ++fixture) {
        MultiVector pi = fixture == 0 ? make_so3().linear_poisson() : so3_r2_pi();
        int n = pi.n_vars();
        KontsevichStar2 star(pi);
        StarFn fn = [&](const Polynomial& a, const Polynomial& b) { return star.product(a, b); };
        Prng rng(61003 + fixture);
        for (int t = 0; t < 110; ++t) {
            Polynomial f = random_polynomial(rng, n, 3, 3);
            Polynomial g = random_polynomial(rng, n, 3, 3);
            Polynomial h = random_polynomial(rng, n, 3, 3);
            PolySeries lhs = star_series(fn, star.product(f, g), {h}, 2);
            PolySeries rhs = star_series(fn, {f}, star.product(g, h), 2);
            CHECK(series_equal(lhs, rhs, 2));
        }
    }
}

TEST_CASE("Moyal case: constant coefficients make the product exponential-exact",
          "[star]") {
    MultiVector sympl(2, 2);
    sympl.add_component({0, 1}, Polynomial::constant(2, Rational(1)));
    KontsevichStar2 star(sympl);
    // x1 * x2 = x1 x2 + eps/2, x2 * x1 = x1 x2 - eps/2
    PolySeries s = star.product(x(2, 0), x(2, 1));
    CHECK(s[0] == x(2, 0) * x(2, 1));
    CHECK(s[1] == Polynomial::constant(2, Rational(1, 2)));
    CHECK(s[2].is_zero());
}

TEST_CASE("cbh star basics", "[gutt]") {
    LieAlgebra so3 = make_so3();
    // x * y = xy + (eps/2)[x,y]
    PolySeries s = cbh_star(so3, x(3, 0), x(3, 1), 3);
    CHECK(s[0] == x(3, 0) * x(3, 1));
    CHECK(s[1] == Rational(1, 2) * x(3, 2));
    CHECK(s[2].is_zero());
    CHECK(s[3].is_zero());
    // x * x = x^2 for linear x
    PolySeries s2 = cbh_star(so3, x(3, 0), x(3, 0), 3);
    CHECK(s2[0] == x(3, 0) * x(3, 0));
    CHECK(s2[1].is_zero());
    CHECK(s2[2].is_zero());
    // unit law
    Prng rng(61004);
    Polynomial one = Polynomial::constant(3, Rational(1));
    for (int t = 0; t < 20; ++t) {
        Polynomial f = random_polynomial(rng, 3, 4, 4);
        PolySeries l = cbh_star(so3, one, f, 3);
        PolySeries r = cbh_star(so3, f, one, 3);
        CHECK(l[0] == f);
        CHECK(r[0] == f);
        for (int k = 1; k <= 3; ++k) {
            CHECK(l[k].is_zero());
            CHECK(r[k].is_zero());
        }
    }
}

TEST_CASE("cbh star is associative mod eps^{N+1}", "[gutt][property]") {
    EnvelopingAlgebra ua(make_so3());
    LieAlgebra so3 = make_so3();
    const int order = 3;
    StarFn fn = [&](const Polynomial& a, const Polynomial& b) {
        return cbh_star(ua, a, b, order);
    };
    Prng rng(61005);
    for (int t = 0; t < 40; ++t) {
        // random monomials of total degree <= 4, most trials lighter
        int cap = t < 30 ? 3 : 4;
        auto mono = [&]() {
            Exponents e(3, 0);
            int d = rng.uniform(0, cap);
            for (int i = 0; i < d; ++i)
                e[rng.uniform(0, 2)] += 1;
            return Polynomial::monomial(3, e, rng.small_rational());
        };
        Polynomial f = mono(), g = mono(), h = mono();
        PolySeries lhs = star_series(fn, cbh_star(ua, f, g, order), {h}, order);
        PolySeries rhs = star_series(fn, {f}, cbh_star(ua, g, h, order), order);
        CHECK(series_equal(lhs, rhs, order));
    }
}

TEST_CASE("cbh star eps^1 part matches the linear Poisson bracket", "[gutt][property]") {
    LieAlgebra so3 = make_so3();
    MultiVector pi = so3.linear_poisson();
    Prng rng(61006);
    for (int t = 0; t < 40; ++t) {
        Polynomial f = random_polynomial(rng, 3, 3, 3);
        Polynomial g = random_polynomial(rng, 3, 3, 3);
        PolySeries s = cbh_star(so3, f, g, 2);
        CHECK(s[0] == f * g);
        CHECK(s[1] == Rational(1, 2) * poisson_bracket(pi, f, g));
    }
}

TEST_CASE("trace of ad powers", "[duflo]") {
    LieAlgebra so3 = make_so3();
    // tr(ad_d^2) = K^{ij} d_i d_j = -2 (d1^2 + d2^2 + d3^2)
    Polynomial t2 = trace_ad_power(so3, 2);
    Polynomial expected(3);
    expected.add_term({2, 0, 0}, Rational(-2));
    expected.add_term({0, 2, 0}, Rational(-2));
    expected.add_term({0, 0, 2}, Rational(-2));
    CHECK(t2 == expected);
    // odd traces vanish for so(3)
    CHECK(trace_ad_power(so3, 1).is_zero());
    CHECK(trace_ad_power(so3, 3).is_zero());
    // for k: ad e1 has trace 1, so tr(ad_d) = d_1
    CHECK(trace_ad_power(make_k(), 1) == Polynomial::variable(2, 0));
}

TEST_CASE("duflo operator: degree reasons and inverse composition", "[duflo]") {
    LieAlgebra so3 = make_so3();
    Prng rng(61007);
    // linear f is unchanged (the series needs >= 2 derivatives)
    for (int i = 0; i < 3; ++i) {
        PolySeries d = duflo_apply(so3, x(3, i), 4, false);
        CHECK(d[0] == x(3, i));
        for (int k = 1; k <= 4; ++k)
            CHECK(d[k].is_zero());
    }
    // D^{-1} D f = f mod eps^{N+1}, exercising the eps^4 terms too
    for (int t = 0; t < 30; ++t) {
        Polynomial f = random_polynomial(rng, 3, 5, 5);
        PolySeries df = duflo_apply(so3, f, 4, false);
        PolySeries back = apply_operator_series(duflo_series(so3, 4, true), df, 4);
        CHECK(back[0] == f);
        for (int k = 1; k <= 4; ++k)
            CHECK(back[k].is_zero());
    }
}

TEST_CASE("rho on constants and linear functions", "[duflo]") {
    LieAlgebra so3 = make_so3();
    auto r1 = rho_linear(so3, Polynomial::constant(3, Rational(1)), 3);
    CHECK(r1[0] == Rational(1));
    for (int k = 1; k <= 3; ++k)
        CHECK(r1[k] == Rational(0));
    auto rx = rho_linear(so3, x(3, 1), 3);
    for (int k = 0; k <= 3; ++k)
        CHECK(rx[k] == Rational(0));
}

TEST_CASE("character property of rho over so(3)", "[duflo][property]") {
    LieAlgebra so3 = make_so3();
    KontsevichStar2 star(so3.linear_poisson());
    Prng rng(61008);
    for (int t = 0; t < 110; ++t) {
        Polynomial f = random_polynomial(rng, 3, 3, 3);
        Polynomial g = random_polynomial(rng, 3, 3, 3);
        auto rfg = rho_linear_series(so3, star.product(f, g), 2);
        auto rf = rho_linear(so3, f, 2);
        auto rg = rho_linear(so3, g, 2);
        for (int k = 0; k <= 2; ++k) {
            Rational conv(0);
            for (int a = 0; a <= k; ++a)
                conv += rf[a] * rg[k - a];
            CHECK(rfg[k] == conv);
        }
    }
}

TEST_CASE("Duflo intertwines the CBH and Kontsevich products mod eps^3",
          "[duflo][property]") {
    LieAlgebra so3 = make_so3();
    KontsevichStar2 star(so3.linear_poisson());
    StarFn fn = [&](const Polynomial& a, const Polynomial& b) { return star.product(a, b); };
    Prng rng(61009);
    for (int t = 0; t < 110; ++t) {
        Polynomial f = random_polynomial(rng, 3, 3, 3);
        Polynomial g = random_polynomial(rng, 3, 3, 3);
        PolySeries lhs =
            apply_operator_series(duflo_series(so3, 2, false), cbh_star(so3, f, g, 2), 2);
        PolySeries rhs =
            star_series(fn, duflo_apply(so3, f, 2, false), duflo_apply(so3, g, 2, false), 2);
        CHECK(series_equal(lhs, rhs, 2));
    }
}

TEST_CASE("character and intertwining hold for the opposite wheel sign too",
          "[duflo]") {
    LieAlgebra so3 = make_so3();
    KontsevichStar2 star(so3.linear_poisson(), WeightTable::standard(-1));
    Prng rng(61010);
    for (int t = 0; t < 25; ++t) {
        Polynomial f = random_polynomial(rng, 3, 3, 3);
        Polynomial g = random_polynomial(rng, 3, 3, 3);
        auto rfg = rho_linear_series(so3, star.product(f, g), 2, -1);
        auto rf = rho_linear(so3, f, 2, -1);
        auto rg = rho_linear(so3, g, 2, -1);
        for (int k = 0; k <= 2; ++k) {
            Rational conv(0);
            for (int a = 0; a <= k; ++a)
                conv += rf[a] * rg[k - a];
            CHECK(rfg[k] == conv);
        }
    }
}
