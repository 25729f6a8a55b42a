#pragma once

#include "qmod/lie.hpp"
#include "qmod/matrix.hpp"

#include <array>
#include <map>
#include <vector>

namespace qmod {

// Chevalley-Eilenberg complex C^p = Lambda^p g* (x) V with the fixed basis
// enumeration: lexicographic strictly increasing index tuples, module index
// fastest. The differential sign convention is pinned by the adjoint-valued
// 1-cochain formula
//
//   (dl)(x, y) = l([x,y]) - [l(x), y] - [x, l(y)],
//
// i.e. d = -(standard alternating-sum differential), extended to all degrees
// by the same alternating-sum formula. Kernels, images and cohomology are
// unaffected by the global sign; d.d = 0 is validated on construction.
class CochainComplex {
public:
    explicit CochainComplex(LieModule module);

    const LieAlgebra& algebra() const { return module_.algebra(); }
    const LieModule& module() const { return module_; }
    int top_degree() const { return algebra().dim(); }

    int dim_cochains(int p) const;
    // d_p : C^p -> C^{p+1} for p in [0, top_degree()]; the last one has zero
    // rows.
    const Matrix& differential(int p) const { return d_.at(p); }

    const std::vector<IndexTuple>& basis_tuples(int p) const { return tuples_.at(p); }
    int basis_index(const IndexTuple& sorted_tuple, int p, int v) const;

    // Value of a cochain vector on an arbitrary index tuple (antisymmetric in
    // the arguments); returns a module-coefficient vector.
    RationalVector value_on(const RationalVector& cochain, int p, IndexTuple t) const;

    // Builds a cochain vector from (tuple, module vector) assignments.
    RationalVector cochain_from_components(
        int p, const std::vector<std::pair<IndexTuple, RationalVector>>& entries) const;

private:
    Matrix build_differential_column_space(int p) const;

    LieModule module_;
    std::vector<std::vector<IndexTuple>> tuples_; // per degree
    std::vector<std::map<IndexTuple, int>> tuple_rank_;
    std::vector<Matrix> d_;
};

// Serial reference / OpenMP column-parallel assembly of all differentials;
// bit-identical outputs.
std::vector<Matrix> ce_differentials_serial(const LieModule& module);
std::vector<Matrix> ce_differentials_parallel(const LieModule& module);

struct CohomologyReport {
    std::vector<int> dims;                                  // dim H^p, p = 0..n
    std::vector<int> cocycle_dims;                          // dim Z^p
    std::vector<int> coboundary_dims;                       // dim B^p
    std::vector<std::vector<RationalVector>> representatives; // cocycles spanning H^p
};

CohomologyReport cohomology(const CochainComplex& cx, bool with_representatives = true);

bool is_cocycle(const CochainComplex& cx, const RationalVector& c, int p);

struct CoboundaryWitness {
    bool is_coboundary = false;
    RationalVector primitive; // d(primitive) = c when is_coboundary
};
CoboundaryWitness coboundary_witness(const CochainComplex& cx, const RationalVector& c, int p);

// Invariant vectors {v : rho(x) v = 0 for all x}; equals H^0 computed from
// the complex (cross-checked in tests).
std::vector<RationalVector> invariant_subspace(const LieModule& module);

struct KunnethReport {
    int degree = 0;
    int lhs_dim = 0;                        // dim H^p(g (+) h, Vg (x) Vh), direct
    int rhs_dim = 0;                        // sum of products of factor dims
    std::vector<std::array<int, 4>> terms;  // (a, b, dim H^a(g), dim H^b(h))
    bool ok = false;
};

// Verifies dim H^p(g (+) h, Vg (x) Vh) = sum_{a+b=p} dim H^a(g,Vg) dim H^b(h,Vh)
// by computing both sides independently.
KunnethReport kunneth_check(const LieModule& vg, const LieModule& vh, int p);

// Cochain-level cup product with a coefficient pairing V1 (x) V2 -> V3 given
// as pairing[w][u][v] = coefficient of the w-th basis vector of V3 in
// P(u-th basis of V1, v-th basis of V2). Sum over (p,q)-shuffles with sign.
RationalVector cup_product_cochain(const CochainComplex& cx1, const RationalVector& c1, int p,
                                   const CochainComplex& cx2, const RationalVector& c2, int q,
                                   const std::vector<Matrix>& pairing);

// Spec-facing cup product: validates that both inputs are cocycles (throws
// std::invalid_argument otherwise) and that the output is a cocycle in the
// target complex.
RationalVector cup_product(const CochainComplex& cx1, const RationalVector& c1, int p,
                           const CochainComplex& cx2, const RationalVector& c2, int q,
                           const std::vector<Matrix>& pairing, const CochainComplex& cx_out);

// The canonical evaluation pairing V* (x) V -> R for dim(V) = m.
std::vector<Matrix> evaluation_pairing(int m);

} // namespace qmod
