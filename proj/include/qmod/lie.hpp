#pragma once

#include "qmod/matrix.hpp"
#include "qmod/multivector.hpp"
#include "qmod/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace qmod {

struct LieAlgebraError : std::runtime_error {
    LieAlgebraError(std::string msg, int i, int j, int k)
        : std::runtime_error(std::move(msg)), witness{i, j, k} {}
    // 1-based basis indices of the failing Jacobi triple.
    std::tuple<int, int, int> witness;
};

// Sparse bracket entry: [e_i, e_j] contains c * e_k (0-based indices, i < j).
struct BracketTerm {
    int i, j, k;
    Rational c;
};

// Finite-dimensional Lie algebra over Q given by structure constants.
// Antisymmetry is implicit in the storage; the Jacobi identity is validated
// on construction.
class LieAlgebra {
public:
    // Throws LieAlgebraError with a witness triple if Jacobi fails.
    static LieAlgebra validated(int dim, const std::vector<BracketTerm>& brackets);
    // Returns the first failing (i,j,k), 0-based, or nullopt if Jacobi holds.
    static std::optional<std::tuple<int, int, int>> jacobi_witness(
        int dim, const std::vector<std::vector<RationalVector>>& c);

    int dim() const { return dim_; }

    // Structure constants of [e_i, e_j] as a coefficient vector.
    const RationalVector& bracket_basis(int i, int j) const;
    RationalVector bracket(const RationalVector& x, const RationalVector& y) const;

    Matrix ad(int i) const; // (ad e_i)_{kj} = c^k_{ij}

    // K^{ij} = tr(ad e_i ad e_j).
    Matrix killing_form() const;
    std::optional<Matrix> killing_inverse() const;
    bool is_semisimple() const; // Cartan: Killing form nondegenerate

    // Quadratic Casimir K_{ij} x^i x^j (inverse Killing form, no rescaling).
    // Validated Poisson-central for the linear structure; throws for
    // degenerate Killing form.
    Polynomial casimir() const;

    // pi^{ij} = sum_k c^k_{ij} x^k on R^dim.
    MultiVector linear_poisson() const;

    std::vector<BracketTerm> bracket_list() const; // i<j, sorted, sparse

    friend LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }

private:
    explicit LieAlgebra(int dim);
    int dim_;
    // c_[i][j] = coefficients of [e_i, e_j]; full antisymmetric table.
    std::vector<std::vector<RationalVector>> c_;
};

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

// Standard fixtures.
LieAlgebra make_so3();
LieAlgebra make_k(); // [e1, e2] = e2
LieAlgebra make_k_plus_k();
LieAlgebra make_abelian(int n);

// Finite-dimensional module given by action matrices rho(e_i). The
// homomorphism property rho([x,y]) = [rho(x), rho(y)] is validated on
// construction.
class LieModule {
public:
    static LieModule validated(LieAlgebra algebra, std::vector<Matrix> action);

    static LieModule trivial(const LieAlgebra& g, int dim_v = 1);
    static LieModule adjoint(const LieAlgebra& g);
    static LieModule coadjoint(const LieAlgebra& g); // rho*(x) = -ad(x)^T

    const LieAlgebra& algebra() const { return algebra_; }
    int dim_v() const { return dim_v_; }
    const Matrix& action(int i) const { return action_.at(i); }

    RationalVector act(int i, const RationalVector& v) const { return action_.at(i).apply(v); }

private:
    LieModule(LieAlgebra algebra, int dim_v, std::vector<Matrix> action)
        : algebra_(std::move(algebra)), dim_v_(dim_v), action_(std::move(action)) {}
    LieAlgebra algebra_;
    int dim_v_;
    std::vector<Matrix> action_;
};

// Tensor product module over direct_sum(g, h) with g acting on the left
// factor and h on the right; basis index = (left index) * dim(right) + right.
LieModule outer_module(const LieModule& vg, const LieModule& vh);

} // namespace qmod
