#include "qmod/counterexample.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qmod;

namespace {

CounterexampleData so3_r2_data() {
    return {make_so3(), make_abelian(2),
            CounterexampleData::cocycle_matrix(2, {{0, 1, Rational(1)}})};
}

CounterexampleData so3_kk_data() {
    // omega: e1 ^ e3 -> 1 on k + k
    return {make_so3(), make_k_plus_k(),
            CounterexampleData::cocycle_matrix(4, {{0, 2, Rational(1)}})};
}

Polynomial so3_casimir_on(int n) {
    Polynomial psi(n);
    for (int i = 0; i < 3; ++i) {
        Exponents e(n, 0);
        e[i] = 2;
        psi.add_term(e, Rational(-1, 2));
    }
    return psi;
}

} // namespace

TEST_CASE("validate_data accepts both canonical fixtures", "[counterexample]") {
    CHECK(validate_data(so3_r2_data()).ok);
    CHECK(validate_data(so3_kk_data()).ok);
}

TEST_CASE("validate_data names the failed hypothesis", "[counterexample]") {
    // non-semisimple g
    CounterexampleData bad1{make_k(), make_abelian(2),
                            CounterexampleData::cocycle_matrix(2, {{0, 1, Rational(1)}})};
    auto rep1 = validate_data(bad1);
    REQUIRE(!rep1.ok);
    CHECK(rep1.issues.size() == 1);
    CHECK(rep1.issues[0].hypothesis == "g-semisimple");

    // a coboundary C on k + k: (e1, e2) -> 1 equals d(e2 -> 1)
    CounterexampleData bad2{make_so3(), make_k_plus_k(),
                            CounterexampleData::cocycle_matrix(4, {{0, 1, Rational(1)}})};
    auto rep2 = validate_data(bad2);
    REQUIRE(!rep2.ok);
    CHECK(rep2.issues[0].hypothesis == "C-noncoboundary");

    // a non-cocycle C on k + k: (e2, e3) -> 1 has d C != 0 (hand-checked on
    // the triple (e1, e2, e3))
    CounterexampleData bad3{make_so3(), make_k_plus_k(),
                            CounterexampleData::cocycle_matrix(4, {{1, 2, Rational(1)}})};
    auto rep3 = validate_data(bad3);
    REQUIRE(!rep3.ok);
    CHECK(rep3.issues[0].hypothesis == "C-cocycle");

    // zero C
    CounterexampleData bad4{make_so3(), make_abelian(2), Matrix(2, 2)};
    auto rep4 = validate_data(bad4);
    REQUIRE(!rep4.ok);
    CHECK(rep4.issues[0].hypothesis == "C-noncoboundary");

    CHECK_THROWS_AS(build(bad1), std::invalid_argument);
}

TEST_CASE("build of so3-r2 matches the explicit blocks", "[counterexample]") {
    BuiltCounterexample b = build(so3_r2_data());
    CHECK(b.n == 5);
    CHECK(b.dim_g == 3);
    CHECK(b.dim_h == 2);

    // g-block equals the linear so(3) structure
    MultiVector lin = make_so3().linear_poisson();
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            Polynomial expected(5);
            Polynomial comp = lin.component({i, j});
            for (const auto& [e, c] : comp.terms()) {
                Exponents ext(5, 0);
                for (int k = 0; k < 3; ++k)
                    ext[k] = e[k];
                expected.add_term(ext, c);
            }
            CHECK(b.pi.component({i, j}) == expected);
        }

    // mixed block vanishes identically
    for (int i = 0; i < 3; ++i)
        for (int a = 3; a < 5; ++a)
            CHECK(b.pi.component({i, a}).is_zero());

    // h-block: pi^{45} = Psi(x) (abelian h, C^{12} = 1)
    CHECK(b.pi.component({3, 4}) == so3_casimir_on(5));
    CHECK(b.casimir == so3_casimir_on(5));

    // Jacobi and coisotropy
    FormalMultiVector pe(0, 5, 2);
    pe.coefficient(0) = b.pi;
    CHECK(jacobi_check(pe, 0).holds);
    CHECK(coisotropy_check(pe));
}

TEST_CASE("build of so3-kk matches the explicit blocks", "[counterexample]") {
    BuiltCounterexample b = build(so3_kk_data());
    CHECK(b.n == 7);
    // first k: [e4, e5] = e5 globally, so pi^{45} = x5 (0-based x index 4)
    CHECK(b.pi.component({3, 4}) == Polynomial::variable(7, 4));
    CHECK(b.pi.component({5, 6}) == Polynomial::variable(7, 6));
    // omega sits on (e4, e6) globally: pi^{46} = Psi(x)
    CHECK(b.pi.component({3, 5}) == so3_casimir_on(7));
    CHECK(b.pi.component({3, 6}).is_zero());
    CHECK(b.pi.component({4, 5}).is_zero());
    CHECK(b.pi.component({4, 6}).is_zero());
    for (int i = 0; i < 3; ++i)
        for (int a = 3; a < 7; ++a)
            CHECK(b.pi.component({i, a}).is_zero());

    FormalMultiVector pe(0, 7, 2);
    pe.coefficient(0) = b.pi;
    CHECK(jacobi_check(pe, 0).holds);
    CHECK(coisotropy_check(pe));
}

TEST_CASE("jacobi_lemma_breakdown: the three graded pieces vanish separately",
          "[counterexample]") {
    for (const auto& data : {so3_r2_data(), so3_kk_data()}) {
        BuiltCounterexample b = build(data);
        GradedJacobiBreakdown br = jacobi_lemma_breakdown(b);
        CHECK(br.linear_ok);
        CHECK(br.mixed_ok);
        CHECK(br.cubic_ok);
        CHECK(br.linear_bracket.is_zero());
        CHECK(br.mixed_bracket.is_zero());
        CHECK(br.quadratic_bracket.is_zero());
    }
}

TEST_CASE("construction is linear in C", "[counterexample]") {
    CounterexampleData d = so3_r2_data();
    BuiltCounterexample b1 = build(d);
    CounterexampleData d3 = d;
    d3.c = Matrix(2, 2);
    d3.c.at(0, 1) = Rational(3);
    d3.c.at(1, 0) = Rational(-3);
    BuiltCounterexample b3 = build(d3);
    // only the Psi C term rescales
    MultiVector diff = b3.pi - b1.pi;
    MultiVector expected(5, 2);
    expected.add_component({3, 4}, Rational(2) * b1.casimir);
    CHECK(diff == expected);
}

TEST_CASE("abelian h: the h-block is exactly Psi C", "[counterexample]") {
    CounterexampleData d{make_so3(), make_abelian(3),
                         CounterexampleData::cocycle_matrix(
                             3, {{0, 1, Rational(1)}, {1, 2, Rational(-2, 3)}})};
    BuiltCounterexample b = build(d);
    for (int a = 0; a < 3; ++a)
        for (int bb = a + 1; bb < 3; ++bb)
            CHECK(b.pi.component({3 + a, 3 + bb}) == d.c.at(a, bb) * b.casimir);
}
