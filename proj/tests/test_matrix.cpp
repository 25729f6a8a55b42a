#include "qmod/matrix.hpp"
#include "qmod/parallel.hpp"
#include "qmod/prng.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qmod;

namespace {

Matrix random_matrix(Prng& rng, int rows, int cols, int zero_chance_den = 2) {
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (!rng.chance(1, zero_chance_den))
                m.at(r, c) = rng.small_rational(5, 3);
    return m;
}

} // namespace

TEST_CASE("rank of simple matrices", "[matrix]") {
    Matrix id3 = Matrix::identity(3);
    CHECK(rank(id3) == 3);
    CHECK(determinant(id3) == Rational(1));

    Matrix singular(2, 2);
    singular.at(0, 0) = Rational(1);
    singular.at(0, 1) = Rational(2);
    singular.at(1, 0) = Rational(2);
    singular.at(1, 1) = Rational(4);
    CHECK(rank(singular) == 1);
    CHECK(determinant(singular) == Rational(0));
    CHECK(!inverse(singular).has_value());

    Matrix zero(3, 4);
    CHECK(rank(zero) == 0);
}

TEST_CASE("rank: parallel matches serial reference exactly", "[matrix][parallel]") {
    Prng rng(77001);
    for (int trial = 0; trial < 60; ++trial) {
        Matrix m = random_matrix(rng, rng.uniform(1, 12), rng.uniform(1, 12));
        CHECK(rank_serial(m) == rank_parallel(m));
    }
}

TEST_CASE("rank against rational rref pivots", "[matrix][property]") {
    Prng rng(77002);
    for (int trial = 0; trial < 60; ++trial) {
        Matrix m = random_matrix(rng, rng.uniform(1, 10), rng.uniform(1, 10));
        Matrix copy = m;
        auto pivots = rref_inplace(copy);
        CHECK(rank(m) == static_cast<int>(pivots.size()));
    }
}

TEST_CASE("inverse round-trips", "[matrix][property]") {
    Prng rng(77003);
    int found = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.uniform(1, 6);
        Matrix m = random_matrix(rng, n, n, 4);
        auto inv = inverse(m);
        if (!inv)
            continue;
        ++found;
        CHECK(*inv * m == Matrix::identity(n));
        CHECK(m * *inv == Matrix::identity(n));
    }
    CHECK(found > 10); // the sample must actually exercise the invertible path
}

TEST_CASE("nullspace vectors are in the kernel and span it", "[matrix][property]") {
    Prng rng(77004);
    for (int trial = 0; trial < 60; ++trial) {
        Matrix m = random_matrix(rng, rng.uniform(1, 8), rng.uniform(1, 8));
        auto basis = nullspace(m);
        CHECK(static_cast<int>(basis.size()) == m.cols() - rank(m)); // rank-nullity
        for (const auto& v : basis)
            CHECK(is_zero(m.apply(v)));
    }
}

TEST_CASE("solve_with_certificate: feasible and infeasible sides", "[matrix][property]") {
    Prng rng(77005);
    int feasible_seen = 0, infeasible_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int rows = rng.uniform(1, 8), cols = rng.uniform(1, 8);
        Matrix a = random_matrix(rng, rows, cols);
        RationalVector b(rows);
        if (rng.chance(1, 2)) {
            // consistent by construction: b = A x0
            RationalVector x0(cols);
            for (auto& v : x0)
                v = rng.small_rational();
            b = a.apply(x0);
        } else {
            for (auto& v : b)
                v = rng.small_rational();
        }
        LinearSolve s = solve_with_certificate(a, b);
        if (s.feasible) {
            ++feasible_seen;
            CHECK(a.apply(s.particular) == b);
            for (const auto& k : s.kernel)
                CHECK(is_zero(a.apply(k)));
        } else {
            ++infeasible_seen;
            // y^T A = 0 and y^T b != 0: checked again here, independently
            RationalVector yta(cols);
            Rational ytb(0);
            for (int r = 0; r < rows; ++r) {
                for (int c = 0; c < cols; ++c)
                    yta[c] += s.dual[r] * a.at(r, c);
                ytb += s.dual[r] * b[r];
            }
            CHECK(is_zero(yta));
            CHECK(ytb != Rational(0));
            CHECK(ytb == s.dual_value);
        }
    }
    CHECK(feasible_seen > 20);
    CHECK(infeasible_seen > 20);
}

TEST_CASE("determinant multiplicative on random pairs", "[matrix][property]") {
    Prng rng(77006);
    for (int trial = 0; trial < 40; ++trial) {
        int n = rng.uniform(1, 5);
        Matrix a = random_matrix(rng, n, n), b = random_matrix(rng, n, n);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}
