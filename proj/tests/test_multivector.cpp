#include "qmod/lie.hpp"
#include "qmod/multivector.hpp"
#include "qmod/parallel.hpp"
#include "qmod/prng.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qmod;

namespace {

Polynomial x(int n, int i) { return Polynomial::variable(n, i); }

// Independent oracle: the Jacobiator of the induced bracket on coordinates.
// In the fixed convention, [pi,pi]^{ijk} = 2 * Jac(x^i, x^j, x^k).
Polynomial jacobiator(const MultiVector& pi, int i, int j, int k) {
    int n = pi.n_vars();
    auto pb = [&](const Polynomial& f, const Polynomial& g) { return poisson_bracket(pi, f, g); };
    return pb(x(n, i), pb(x(n, j), x(n, k))) + pb(x(n, j), pb(x(n, k), x(n, i))) +
           pb(x(n, k), pb(x(n, i), x(n, j)));
}

} // namespace

TEST_CASE("component storage is canonically ordered and antisymmetric", "[multivector]") {
    MultiVector m(3, 2);
    m.add_component({2, 0}, x(3, 1)); // unsorted: stored as -x2 on (0,2)
    CHECK(m.component({0, 2}) == -x(3, 1));
    CHECK(m.component({2, 0}) == x(3, 1));
    CHECK(m.component({0, 1}).is_zero());
    CHECK(m.component({1, 1}).is_zero()); // repeated index
    m.add_component({0, 2}, x(3, 1));     // cancels
    CHECK(m.is_zero());
}

TEST_CASE("schouten: bivector on R^2 brackets to zero trivector", "[schouten]") {
    Prng rng(31001);
    for (int trial = 0; trial < 20; ++trial) {
        MultiVector pi = random_multivector(rng, 2, 2, 3, 4);
        MultiVector br = schouten(pi, pi);
        CHECK(br.degree() == 3);
        CHECK(br.is_zero());
    }
}

TEST_CASE("schouten: linear so(3) structure is Poisson", "[schouten]") {
    MultiVector pi = make_so3().linear_poisson();
    CHECK(schouten(pi, pi).is_zero());
}

TEST_CASE("schouten: non-Jacobi bivector has the expected residual", "[schouten]") {
    // pi = x2 d1^d2 + x1 d2^d3 violates Jacobi: [pi,pi]^{123} = -2 x1.
    MultiVector pi(3, 2);
    pi.add_component({0, 1}, x(3, 1));
    pi.add_component({1, 2}, x(3, 0));
    MultiVector br = schouten(pi, pi);
    CHECK(br.component({0, 1, 2}) == Rational(-2) * x(3, 0));
    // and it equals twice the Jacobiator oracle
    CHECK(br.component({0, 1, 2}) == Rational(2) * jacobiator(pi, 0, 1, 2));
}

TEST_CASE("schouten matches twice the Jacobiator on random bivectors", "[schouten][property]") {
    Prng rng(31002);
    for (int trial = 0; trial < 100; ++trial) {
        int n = rng.uniform(3, 5);
        MultiVector pi = random_multivector(rng, n, 2, 2, 3);
        MultiVector br = schouten(pi, pi);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    CHECK(br.component({i, j, k}) == Rational(2) * jacobiator(pi, i, j, k));
    }
}

TEST_CASE("schouten graded antisymmetry", "[schouten][property]") {
    Prng rng(31003);
    for (int trial = 0; trial < 120; ++trial) {
        int n = rng.uniform(2, 5);
        int p = rng.uniform(0, std::min(3, n));
        int q = rng.uniform(p == 0 ? 1 : 0, std::min(3, n));
        MultiVector a = random_multivector(rng, n, p, 2, 3);
        MultiVector b = random_multivector(rng, n, q, 2, 3);
        MultiVector lhs = schouten(a, b);
        MultiVector rhs = schouten(b, a);
        int sgn = ((p - 1) * (q - 1)) % 2 == 0 ? 1 : -1;
        CHECK(lhs == Rational(-sgn) * rhs);
    }
}

TEST_CASE("schouten graded Leibniz", "[schouten][property]") {
    Prng rng(31004);
    for (int trial = 0; trial < 120; ++trial) {
        int n = rng.uniform(2, 5);
        int p = rng.uniform(1, std::min(3, n));
        int q = rng.uniform(0, 2);
        int r = rng.uniform(0, 2);
        MultiVector a = random_multivector(rng, n, p, 2, 3);
        MultiVector b = random_multivector(rng, n, q, 2, 3);
        MultiVector c = random_multivector(rng, n, r, 2, 3);
        // [a, b^c] = [a,b]^c + (-1)^{(p-1)q} b^[a,c]
        MultiVector lhs = schouten(a, wedge(b, c));
        MultiVector rhs = wedge(schouten(a, b), c);
        MultiVector second = wedge(b, schouten(a, c));
        if (((p - 1) * q) % 2 == 0)
            rhs += second;
        else
            rhs -= second;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("schouten graded Jacobi identity", "[schouten][property]") {
    Prng rng(31009);
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.uniform(2, 4);
        int p = rng.uniform(1, 2), q = rng.uniform(1, 2), r = rng.uniform(1, 2);
        MultiVector a = random_multivector(rng, n, p, 2, 2);
        MultiVector b = random_multivector(rng, n, q, 2, 2);
        MultiVector c = random_multivector(rng, n, r, 2, 2);
        auto sgn = [](int u, int v) { return Rational(((u - 1) * (v - 1)) % 2 == 0 ? 1 : -1); };
        MultiVector jac = sgn(p, r) * schouten(a, schouten(b, c)) +
                          sgn(q, p) * schouten(b, schouten(c, a)) +
                          sgn(r, q) * schouten(c, schouten(a, b));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("poisson bracket induced by a Jacobi bivector satisfies Jacobi",
          "[schouten][property]") {
    Prng rng(31005);
    MultiVector pi = make_so3().linear_poisson();
    REQUIRE(schouten(pi, pi).is_zero());
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial f = random_polynomial(rng, 3, 3, 3);
        Polynomial g = random_polynomial(rng, 3, 3, 3);
        Polynomial h = random_polynomial(rng, 3, 3, 3);
        Polynomial jac = poisson_bracket(pi, f, poisson_bracket(pi, g, h)) +
                         poisson_bracket(pi, g, poisson_bracket(pi, h, f)) +
                         poisson_bracket(pi, h, poisson_bracket(pi, f, g));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("poisson bracket basics", "[multivector]") {
    MultiVector pi = make_so3().linear_poisson();
    // {x^i, x^j} = pi^{ij} as stored
    CHECK(poisson_bracket(pi, x(3, 0), x(3, 1)) == pi.component({0, 1}));
    CHECK(poisson_bracket(pi, x(3, 1), x(3, 2)) == pi.component({1, 2}));
    // antisymmetry: {f, f} = 0
    Prng rng(31006);
    Polynomial f = random_polynomial(rng, 3, 3, 4);
    CHECK(poisson_bracket(pi, f, f).is_zero());
}

TEST_CASE("schouten parallel kernel matches serial reference", "[schouten][parallel]") {
    Prng rng(31007);
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.uniform(2, 6);
        int p = rng.uniform(0, 3);
        int q = rng.uniform(p == 0 ? 1 : 0, 3);
        MultiVector a = random_multivector(rng, n, p, 3, 4);
        MultiVector b = random_multivector(rng, n, q, 3, 4);
        CHECK(schouten_serial(a, b) == schouten_parallel(a, b));
    }
}

TEST_CASE("schouten rejects degree-0 pairs and mismatched spaces", "[schouten]") {
    Polynomial f = x(2, 0);
    MultiVector mf = MultiVector::from_polynomial(f);
    CHECK_THROWS_AS(schouten(mf, mf), std::invalid_argument);
    MultiVector a(2, 1), b(3, 1);
    CHECK_THROWS_AS(schouten(a, b), std::invalid_argument);
}

TEST_CASE("jacobi_check orders and reports", "[formal]") {
    // order 0 holds for so(3)
    FormalMultiVector lin(0, 3, 2);
    lin.coefficient(0) = make_so3().linear_poisson();
    auto rep = jacobi_check(lin, 0);
    CHECK(rep.holds);
    CHECK(!rep.first_failing_order.has_value());

    // the corrected failing fixture
    MultiVector bad(3, 2);
    bad.add_component({0, 1}, x(3, 1));
    bad.add_component({1, 2}, x(3, 0));
    FormalMultiVector fb(0, 3, 2);
    fb.coefficient(0) = bad;
    auto rep2 = jacobi_check(fb, 0);
    CHECK(!rep2.holds);
    REQUIRE(rep2.first_failing_order.has_value());
    CHECK(*rep2.first_failing_order == 0);
    REQUIRE(rep2.residual.has_value());
    CHECK(rep2.residual->component({0, 1, 2}) == Rational(-2) * x(3, 0));

    // constant coefficients always pass
    MultiVector cst(3, 2);
    cst.add_component({0, 1}, Polynomial::constant(3, Rational(5)));
    FormalMultiVector fc(2, 3, 2);
    fc.coefficient(0) = cst;
    fc.coefficient(2) = cst;
    CHECK(jacobi_check(fc, 2).holds);

    CHECK_THROWS_AS(jacobi_check(fc, 5), std::invalid_argument);
}

TEST_CASE("jacobi_check detects a failure at a positive order", "[formal]") {
    // eps^0: so(3) (Poisson); eps^1: a perturbation with [pi0, pi1] != 0
    FormalMultiVector pe(1, 3, 2);
    pe.coefficient(0) = make_so3().linear_poisson();
    MultiVector pert(3, 2);
    pert.add_component({0, 1}, x(3, 0) * x(3, 0));
    pe.coefficient(1) = pert;
    auto rep = jacobi_check(pe, 1);
    CHECK(!rep.holds);
    REQUIRE(rep.first_failing_order.has_value());
    CHECK(*rep.first_failing_order == 1);
    CHECK(jacobi_check(pe, 0).holds); // truncation below the failure passes
}

TEST_CASE("coisotropy_check", "[formal]") {
    // constant symplectic bivector does not vanish at 0
    MultiVector sympl(2, 2);
    sympl.add_component({0, 1}, Polynomial::constant(2, Rational(1)));
    FormalMultiVector fs(0, 2, 2);
    fs.coefficient(0) = sympl;
    CHECK(!coisotropy_check(fs));

    // pi + eps (x^1 d1^d2): both coefficients vanish at 0
    FormalMultiVector fv(1, 3, 2);
    fv.coefficient(0) = make_so3().linear_poisson();
    MultiVector lin01(3, 2);
    lin01.add_component({0, 1}, x(3, 0));
    fv.coefficient(1) = lin01;
    CHECK(coisotropy_check(fv));
}

TEST_CASE("wedge is graded commutative", "[multivector][property]") {
    Prng rng(31008);
    for (int trial = 0; trial < 80; ++trial) {
        int n = rng.uniform(2, 5);
        int p = rng.uniform(0, 3), q = rng.uniform(0, 3);
        MultiVector a = random_multivector(rng, n, p, 2, 3);
        MultiVector b = random_multivector(rng, n, q, 2, 3);
        MultiVector ab = wedge(a, b);
        MultiVector ba = wedge(b, a);
        CHECK(ab == Rational((p * q) % 2 == 0 ? 1 : -1) * ba);
    }
}
