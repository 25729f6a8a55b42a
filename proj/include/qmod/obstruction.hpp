#pragma once

#include "qmod/cohomology.hpp"
#include "qmod/counterexample.hpp"
#include "qmod/matrix.hpp"
#include "qmod/multivector.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qmod {

// A3 = lambda * w with w^{ab} = 2 dim(g) C^{ab} on the h-block (zero
// elsewhere) and lambda = wheel_sign * wheel_weight(1). The scale is carried
// symbolically so verdicts do not depend on the sign ambiguity of the wheel
// series; the concrete magnitude is available for instantiated runs.
struct AnomalyTerm {
    Matrix w;           // n x n antisymmetric constant bivector at the origin
    Rational magnitude; // |wheel_weight(1)| = 1/48
    int wheel_sign = +1;

    Rational lambda() const { return Rational(wheel_sign) * magnitude; }
};

AnomalyTerm anomaly_a3(const BuiltCounterexample& b, int wheel_sign = +1);

// One constraint equation: lin . u + (quadratic in the D1 parameters)
// + rhs0 + lambda * rhs_lambda = 0.
struct ConstraintRow {
    RationalVector lin;
    Rational rhs0;
    Rational rhs_lambda;
    Matrix quad;              // symmetric form over the D1 parameters; 0x0 if absent
    std::string tag;          // "d1con" | "con3" | "con3+pi1-term"
    std::pair<int, int> label; // (i, j), 1-based coordinate pair
};

struct ConstraintSystem {
    int n = 0;                         // ambient dimension
    std::vector<std::string> unknowns; // names, e.g. "a1" (D1 params), "D2[3]"
    std::vector<ConstraintRow> rows;
    std::vector<RationalVector> d1_kernel; // basis of the d1con solution space

    int n_params() const { return static_cast<int>(d1_kernel.size()); }
};

// Rows sum_k D1^k (d_k pi^{ij})(0) = 0 for i < j, unknowns D1[1..n].
// Rejects structures with pi(0) != 0 (std::invalid_argument).
ConstraintSystem assemble_d1con(const MultiVector& pi);

// Basis of the D1 solution space of a d1con system.
std::vector<RationalVector> d1_solution_space(const ConstraintSystem& d1con);

// Substitutes D1 = sum_t alpha_t v_t into
//   D1^k dk pi1^{ij} + (1/2) D1^k D1^l dk dl pi^{ij} + D2^k dk pi^{ij} + 2 A3^{ij} = 0,
// producing a system over (alpha_1..alpha_t, D2[1..n]). Quadratic-in-alpha
// terms are expanded exactly and kept on the rows where they do not vanish.
ConstraintSystem assemble_con3(const MultiVector& pi, const std::optional<MultiVector>& pi1,
                               const AnomalyTerm& a3,
                               const std::vector<RationalVector>& d1_kernel);

struct DecideOptions {
    bool symbolic_lambda = true; // verdict valid for every lambda != 0
    Rational lambda_value = Rational(0);
};

struct Certificate {
    enum class Kind { Feasible, Infeasible, Undecided };
    Kind kind = Kind::Undecided;

    // Feasible: unknown assignment u = witness0 + lambda * witness1
    // (witness1 is all-zero unless the witness has to scale with lambda).
    RationalVector witness0, witness1;
    RationalVector d1_witness0, d1_witness1; // reconstructed D1 = K alpha

    // Infeasible: rational row combination with dual^T lin = 0 and
    // sum dual_r (rhs0_r + lambda rhs_lambda_r) = c0 + c_lambda * lambda != 0.
    RationalVector dual;
    Rational dual_c0, dual_c_lambda;

    // Undecided: labels of rows with surviving quadratic terms.
    std::vector<std::string> surviving_quadratics;
};

Certificate decide(const ConstraintSystem& sys, const DecideOptions& opt = {});

// Exact back-substitution / dual re-checks, independent of the elimination
// path taken inside decide().
bool verify_certificate(const ConstraintSystem& sys, const Certificate& cert,
                        const DecideOptions& opt = {});

// Admissible linear parts of pi_1: kernel of w -> [pi^{(1)}, w] on linear
// bivector fields (pi_1^{(0)} = 0 is built in: only linear parts enter).
std::vector<MultiVector> pi1_cocycle_space(const BuiltCounterexample& b);

// Conversions between linear bivectors on R^n and CE 2-cochains of g (+) h.
// h_cochain: values in h  (module: g acts trivially, h adjointly);
// g_cochain: values in g  (module: g adjoint, h trivial).
RationalVector bivector_to_h_cochain(const BuiltCounterexample& b, const CochainComplex& cx,
                                     const MultiVector& w);
RationalVector bivector_to_g_cochain(const BuiltCounterexample& b, const CochainComplex& cx,
                                     const MultiVector& w);

struct SpecializedStep {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SpecializedReport {
    std::vector<SpecializedStep> steps;
    bool infeasible_for_all_pi1 = false;
    int d1_kernel_dim = 0;
    int pi1_kernel_dim = 0;
    int dim_h2_hh = -1;      // dim H^2(h, h)
    int dim_h2_sum_h = -1;   // dim H^2(g+h, h-valued)
    int dim_h2_h_r = -1;     // dim H^2(h, R)
};

// The cohomological pipeline ruling out every extension pi_1 with
// pi_eps(0) = 0: H^2(h,h) = 0 and the Kunneth identification force
// [pi_1] = 0, so every cup product [D1] u [pi_1] is exact, while solvability
// of the order-3 constraint would require it to hit the non-trivial class of
// C. Each step is verified exactly and reported.
SpecializedReport specialized_verdict(const BuiltCounterexample& b, int wheel_sign = +1);

// Differential operator at the origin: f -> sum c_I (d^I f)(0).
struct LocalOperator {
    int n_vars = 0;
    std::map<Exponents, Rational> coeffs;
    Rational apply(const Polynomial& f) const;
};

struct ProbeRecord {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AnsatzReport {
    std::vector<ProbeRecord> probes;
    bool all_pass = false;
};

// Machine-verifies the order eps^1/eps^2 ansatz reductions on polynomial
// probes: the first-order constraint kills every non-first-order part of
// phi_1, and the symmetric order-2 constraint forces the second-derivative
// block of phi_2 to be (1/2) D1 D1.
AnsatzReport order12_ansatz_report(int n_vars = 3, std::uint64_t seed = 7);

} // namespace qmod
