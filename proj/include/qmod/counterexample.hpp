#pragma once

#include "qmod/lie.hpp"
#include "qmod/multivector.hpp"

#include <string>
#include <vector>

namespace qmod {

// Input data for the quadratic Poisson structure on (g (+) h)^*:
// a semisimple g, an h with H^2(h, R) != 0, and a non-trivial 2-cocycle C.
struct CounterexampleData {
    LieAlgebra g = make_abelian(1);
    LieAlgebra h = make_abelian(1);
    Matrix c; // dim(h) x dim(h), antisymmetric; C^{ab}

    static Matrix cocycle_matrix(int dim_h, const std::vector<std::tuple<int, int, Rational>>& entries);
};

struct ValidationIssue {
    std::string hypothesis; // "g-semisimple" | "C-antisymmetric" | "C-cocycle" | "C-noncoboundary"
    std::string detail;
};

struct ValidationReport {
    bool ok = false;
    std::vector<ValidationIssue> issues;
};

ValidationReport validate_data(const CounterexampleData& d);

// pi^{ij} = x^k g^{ij}_k, pi^{ai} = 0, pi^{ab} = y^c h^{ab}_c + Psi(x) C^{ab},
// with Psi the quadratic Casimir of g. Coordinates: x-block (g) first.
struct BuiltCounterexample {
    CounterexampleData data;
    int dim_g = 0;
    int dim_h = 0;
    int n = 0;
    MultiVector pi;     // degree-2 on R^n
    Polynomial casimir; // Psi(x), expressed on R^n

    BuiltCounterexample() : pi(1, 2), casimir(1) {}
};

// Validates the data, assembles the three blocks, then runs jacobi_check and
// coisotropy_check and throws std::logic_error if either fails (a defect, not
// an input error). Input errors throw std::invalid_argument with the report.
BuiltCounterexample build(const CounterexampleData& d);

// The three graded pieces of [pi, pi] = [p1,p1] + 2[p1,p2] + [p2,p2], checked
// separately as in the proof's case split.
struct GradedJacobiBreakdown {
    MultiVector linear_bracket;    // [pi1, pi1]
    MultiVector mixed_bracket;     // [pi1, pi2]
    MultiVector quadratic_bracket; // [pi2, pi2]
    bool linear_ok = false;        // Lie Jacobi of g (+) h
    bool mixed_ok = false;         // cocycle property of C + Casimir centrality
    bool cubic_ok = false;         // y-independence of the quadratic block
};

GradedJacobiBreakdown jacobi_lemma_breakdown(const BuiltCounterexample& b);

} // namespace qmod
