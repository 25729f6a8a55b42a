#include "qmod/counterexample.hpp"

#include "qmod/cohomology.hpp"

#include <sstream>

namespace qmod {

Matrix CounterexampleData::cocycle_matrix(
    int dim_h, const std::vector<std::tuple<int, int, Rational>>& entries) {
    Matrix c(dim_h, dim_h);
    for (const auto& [a, b, v] : entries) {
        if (a < 0 || a >= dim_h || b < 0 || b >= dim_h || a == b)
            throw std::invalid_argument("cocycle_matrix: bad index pair");
        c.at(a, b) += v;
        c.at(b, a) -= v;
    }
    return c;
}

ValidationReport validate_data(const CounterexampleData& d) {
    ValidationReport rep;
    if (!d.g.is_semisimple())
        rep.issues.push_back({"g-semisimple", "Killing form of g is degenerate"});
    const int m = d.h.dim();
    if (d.c.rows() != m || d.c.cols() != m) {
        rep.issues.push_back({"C-antisymmetric", "C has the wrong shape"});
        return rep;
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (d.c.at(a, b) != -d.c.at(b, a)) {
                rep.issues.push_back({"C-antisymmetric", "C^{ab} != -C^{ba}"});
                a = m;
                break;
            }
    CochainComplex cx(LieModule::trivial(d.h));
    std::vector<std::pair<IndexTuple, RationalVector>> comps;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (!d.c.at(a, b).is_zero())
                comps.push_back({IndexTuple{a, b}, RationalVector{d.c.at(a, b)}});
    RationalVector cvec = cx.cochain_from_components(2, comps);
    if (is_zero(cvec)) {
        rep.issues.push_back({"C-noncoboundary", "C is zero"});
    } else {
        if (!is_cocycle(cx, cvec, 2))
            rep.issues.push_back({"C-cocycle", "d C != 0 on (h, R)"});
        else if (coboundary_witness(cx, cvec, 2).is_coboundary)
            rep.issues.push_back({"C-noncoboundary", "C is exact in H^2(h, R)"});
    }
    rep.ok = rep.issues.empty();
    return rep;
}

BuiltCounterexample build(const CounterexampleData& d) {
    ValidationReport rep = validate_data(d);
    if (!rep.ok) {
        std::ostringstream os;
        os << "counterexample data rejected:";
        for (const auto& issue : rep.issues)
            os << " [" << issue.hypothesis << "] " << issue.detail << ";";
        throw std::invalid_argument(os.str());
    }

    BuiltCounterexample b;
    b.data = d;
    b.dim_g = d.g.dim();
    b.dim_h = d.h.dim();
    b.n = b.dim_g + b.dim_h;

    // Psi(x) on R^n (variables of the g-block only)
    Polynomial psi_g = d.g.casimir();
    Polynomial psi(b.n);
    for (const auto& [e, c] : psi_g.terms()) {
        Exponents ext(b.n, 0);
        for (int i = 0; i < b.dim_g; ++i)
            ext[i] = e[i];
        psi.add_term(ext, c);
    }
    b.casimir = psi;

    // linear part: the Lie-Poisson structure of g (+) h
    MultiVector pi = direct_sum(d.g, d.h).linear_poisson();
    // quadratic part: Psi(x) C^{ab} on the h-block
    for (int a = 0; a < b.dim_h; ++a)
        for (int bb = a + 1; bb < b.dim_h; ++bb)
            if (!d.c.at(a, bb).is_zero())
                pi.add_component({b.dim_g + a, b.dim_g + bb}, d.c.at(a, bb) * psi);
    b.pi = pi;

    FormalMultiVector pe(0, b.n, 2);
    pe.coefficient(0) = b.pi;
    if (!jacobi_check(pe, 0).holds)
        throw std::logic_error("build: assembled structure violates Jacobi (defect)");
    if (!coisotropy_check(pe))
        throw std::logic_error("build: assembled structure does not vanish at 0 (defect)");
    return b;
}

GradedJacobiBreakdown jacobi_lemma_breakdown(const BuiltCounterexample& b) {
    GradedJacobiBreakdown out{
        MultiVector(b.n, 3), MultiVector(b.n, 3), MultiVector(b.n, 3), false, false, false};
    MultiVector p1 = b.pi.coefficient_degree_part(1);
    MultiVector p2 = b.pi.coefficient_degree_part(2);
    out.linear_bracket = schouten(p1, p1);
    out.mixed_bracket = schouten(p1, p2);
    out.quadratic_bracket = schouten(p2, p2);
    out.linear_ok = out.linear_bracket.is_zero();
    out.mixed_ok = out.mixed_bracket.is_zero();
    out.cubic_ok = out.quadratic_bracket.is_zero();
    return out;
}

} // namespace qmod
