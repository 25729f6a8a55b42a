#include "qmod/polynomial.hpp"
#include "qmod/prng.hpp"
#include "qmod/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qmod;

TEST_CASE("Rational canonical form", "[rational]") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(2, -4).denominator() == 2); // denominator stays positive
    CHECK(Rational("3/6") == Rational(1, 2));
    CHECK(Rational("-7") == Rational(-7));
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(-3).str() == "-3");
    CHECK(Rational(0).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("Rational arithmetic", "[rational]") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
    CHECK(Rational(-5, 7).abs() == Rational(5, 7));
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
}

namespace {

Polynomial x(int n, int i) { return Polynomial::variable(n, i); }

} // namespace

TEST_CASE("poly_arith examples", "[polynomial]") {
    // (x1 + x2)(x1 - x2) = x1^2 - x2^2
    Polynomial lhs = (x(2, 0) + x(2, 1)) * (x(2, 0) - x(2, 1));
    Polynomial rhs = x(2, 0) * x(2, 0) - x(2, 1) * x(2, 1);
    CHECK(lhs == rhs);

    // p * 0 = 0
    Polynomial p = x(2, 0) * x(2, 1) + Polynomial::constant(2, Rational(3));
    CHECK((p * Polynomial::zero(2)).is_zero());

    // x1^2 x2 + (-x1^2 x2) = 0 with empty term map
    Polynomial m = Polynomial::monomial(2, {2, 1}, Rational(1));
    Polynomial sum = m + (-m);
    CHECK(sum.is_zero());
    CHECK(sum.terms().empty());

    CHECK_THROWS_AS(x(2, 0) + x(3, 0), std::invalid_argument);
}

TEST_CASE("partial_derivative examples", "[polynomial]") {
    // d1(x1^2 x2) = 2 x1 x2
    Polynomial p = Polynomial::monomial(2, {2, 1}, Rational(1));
    CHECK(p.derivative(0) == Polynomial::monomial(2, {1, 1}, Rational(2)));
    // d2(x1^3) = 0
    CHECK(Polynomial::monomial(2, {3, 0}, Rational(1)).derivative(1).is_zero());
    CHECK_THROWS_AS(p.derivative(5), std::out_of_range);

    // di dj of K_{ij} x^i x^j gives 2 K_{ij}
    Polynomial psi(2);
    psi.add_term({2, 0}, Rational(3));      // K_11 = 3
    psi.add_term({1, 1}, Rational(2, 7));   // K_12 + K_21 = 2/7, symmetric: K_12 = 1/7
    psi.add_term({0, 2}, Rational(-1));     // K_22 = -1
    CHECK(psi.derivative(0).derivative(0) == Polynomial::constant(2, Rational(6)));
    CHECK(psi.derivative(0).derivative(1) == Polynomial::constant(2, Rational(2, 7)));
    CHECK(psi.derivative(1).derivative(1) == Polynomial::constant(2, Rational(-2)));
}

TEST_CASE("evaluate_at_zero examples", "[polynomial]") {
    Polynomial p = x(2, 0) * x(2, 0) + Polynomial::constant(2, Rational(3));
    CHECK(p.evaluate_at_zero() == Rational(3));
    CHECK((x(2, 0) * x(2, 1)).evaluate_at_zero() == Rational(0));
    // homogeneous quadratic has no constant term
    Polynomial psi = Polynomial::monomial(3, {1, 1, 0}, Rational(-1, 2));
    CHECK(psi.evaluate_at_zero() == Rational(0));
}

TEST_CASE("derivatives commute on random polynomials", "[polynomial][property]") {
    Prng rng(20240901);
    for (int trial = 0; trial < 120; ++trial) {
        int n = rng.uniform(1, 5);
        Polynomial p = random_polynomial(rng, n, 4, 6);
        int i = rng.uniform(0, n - 1), j = rng.uniform(0, n - 1);
        CHECK(p.derivative(i).derivative(j) == p.derivative(j).derivative(i));
    }
}

TEST_CASE("evaluate_at_zero is an algebra character", "[polynomial][property]") {
    Prng rng(20240902);
    for (int trial = 0; trial < 120; ++trial) {
        int n = rng.uniform(1, 5);
        Polynomial f = random_polynomial(rng, n, 3, 5);
        Polynomial g = random_polynomial(rng, n, 3, 5);
        CHECK((f * g).evaluate_at_zero() == f.evaluate_at_zero() * g.evaluate_at_zero());
        CHECK((f + g).evaluate_at_zero() == f.evaluate_at_zero() + g.evaluate_at_zero());
    }
}

TEST_CASE("ring axioms on random polynomials", "[polynomial][property]") {
    Prng rng(20240903);
    for (int trial = 0; trial < 100; ++trial) {
        int n = rng.uniform(1, 4);
        Polynomial f = random_polynomial(rng, n, 3, 4);
        Polynomial g = random_polynomial(rng, n, 3, 4);
        Polynomial h = random_polynomial(rng, n, 3, 4);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f - f).is_zero());
    }
}

TEST_CASE("homogeneous parts sum back", "[polynomial]") {
    Prng rng(20240904);
    for (int trial = 0; trial < 50; ++trial) {
        int n = rng.uniform(1, 4);
        Polynomial f = random_polynomial(rng, n, 4, 6);
        Polynomial sum(n);
        for (int d = 0; d <= f.total_degree(); ++d)
            sum += f.homogeneous_part(d);
        CHECK(sum == f);
    }
}

TEST_CASE("polynomial printing", "[polynomial]") {
    Polynomial p = Polynomial::monomial(3, {2, 1, 0}, Rational(2));
    p.add_term({0, 0, 0}, Rational(-1, 3));
    CHECK(p.str() == "-1/3 + 2*x1^2*x2");
    CHECK(Polynomial::zero(2).str() == "0");
}
