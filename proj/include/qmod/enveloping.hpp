#pragma once

#include "qmod/lie.hpp"
#include "qmod/polynomial.hpp"
#include "qmod/star.hpp"

#include <map>

namespace qmod {

// Element of U(g) in the PBW basis e_1^{a_1} ... e_n^{a_n} (basis order
// fixed by the algebra), coefficients in Q.
using EnvelopingElement = std::map<Exponents, Rational>;

// PBW arithmetic over a fixed Lie algebra: normal ordering, the
// symmetrization map S(g) -> U(g) and its inverse. Instances memoize the
// letter-insertion rewriting internally, so they are cheap to reuse within
// one computation but must not be shared across threads; construct one per
// call site instead.
class EnvelopingAlgebra {
public:
    explicit EnvelopingAlgebra(LieAlgebra g) : g_(std::move(g)) {}

    const LieAlgebra& algebra() const { return g_; }

    // e^alpha * e_k rewritten in the PBW basis.
    const EnvelopingElement& insert_letter(const Exponents& alpha, int k);

    // Right-multiply by a single basis letter.
    EnvelopingElement times_letter(const EnvelopingElement& a, int k);

    // Normal form of an arbitrary word e_{w_0} e_{w_1} ... (0-based letters).
    EnvelopingElement normal_order(const std::vector<int>& word);

    EnvelopingElement product(const EnvelopingElement& a, const EnvelopingElement& b);

    // sigma(x^alpha) = average over all arrangements of the letters.
    const EnvelopingElement& symmetrize_monomial(const Exponents& alpha);
    EnvelopingElement symmetrize(const Polynomial& p);

    // sigma^{-1}; exact on any element (recursion over the degree).
    Polynomial unsymmetrize(const EnvelopingElement& u);

private:
    const Polynomial& unsymmetrize_pbw(const Exponents& alpha);

    LieAlgebra g_;
    std::map<std::pair<Exponents, int>, EnvelopingElement> insert_memo_;
    std::map<Exponents, EnvelopingElement> symmetrize_memo_;
    std::map<Exponents, Polynomial> unsym_memo_;
};

// Gutt / CBH star product on S(g): identify S(g) with U(g) by symmetrization,
// multiply, re-symmetrize; the eps^k coefficient is the part of the product
// whose polynomial degree dropped by k (one bracket per eps). Truncated at
// eps^order, extended bilinearly from monomials.
PolySeries cbh_star(const LieAlgebra& g, const Polynomial& f, const Polynomial& g2, int order);

// Same, reusing a caller-owned instance (amortizes the rewriting memo across
// many products over the same algebra).
PolySeries cbh_star(EnvelopingAlgebra& ua, const Polynomial& f, const Polynomial& g2, int order);

} // namespace qmod
