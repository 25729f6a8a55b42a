#pragma once

#include "qmod/multivector.hpp"
#include "qmod/polynomial.hpp"

#include <functional>
#include <vector>

namespace qmod {

// Truncated eps-series of polynomials; index = eps order.
using PolySeries = std::vector<Polynomial>;

PolySeries series_add(const PolySeries& a, const PolySeries& b);
bool series_equal(const PolySeries& a, const PolySeries& b, int order);

// Exact Bernoulli number, convention B1 = -1/2.
Rational bernoulli(int m);

Rational factorial(int m);

// Magnitude |B_{2n}| / (4n (2n)!) with the global sign flag; these are the
// wheel-graph constants entering the Duflo-type series and the anomaly scale.
Rational wheel_weight(int n, int sign = +1);

// Order-2 graph weights of the star product. The bidifferential shapes are
// fixed in KontsevichStar2::product; the values are pinned by the oracles:
// the constant-coefficient (Moyal) case forces w_parallel, associativity
// mod eps^3 forces the left/right pair, and the linear-Poisson character /
// CBH-intertwining oracles force w_cycle = 2 * wheel_weight(1).
struct WeightTable {
    Rational w_parallel;
    Rational w_left;
    Rational w_right;
    Rational w_cycle;
    int wheel_sign = +1;

    static WeightTable standard(int wheel_sign = +1);
};

// f * g = fg + eps (1/2){f,g} + eps^2 B2(f,g) for a fixed Poisson bivector.
// B2(f,g) = w_parallel pi^{ij} pi^{kl} didk f djdl g
//         + w_left     pi^{ij} dj pi^{kl} didk f dl g
//         + w_right    pi^{ij} dj pi^{kl} dk f didl g
//         + w_cycle    dk pi^{ij} di pi^{kl} dj f dl g
// (all indices summed over the full antisymmetric extension of pi).
class KontsevichStar2 {
public:
    // Validates [pi, pi] = 0; throws std::invalid_argument otherwise.
    KontsevichStar2(MultiVector pi, WeightTable wt = WeightTable::standard());

    const MultiVector& pi() const { return pi_; }
    const WeightTable& weights() const { return wt_; }

    // eps^0..eps^2 coefficients of f * g.
    PolySeries product(const Polynomial& f, const Polynomial& g) const;

private:
    MultiVector pi_;
    WeightTable wt_;
    struct Oriented {
        int i, j;
        Polynomial c;
    };
    std::vector<Oriented> oriented_; // both orientations of every component
};

PolySeries kontsevich_star2(const MultiVector& pi, const Polynomial& f, const Polynomial& g,
                            const WeightTable& wt = WeightTable::standard());

// Bilinear extension of an eps-truncated product to eps-series operands.
using StarFn = std::function<PolySeries(const Polynomial&, const Polynomial&)>;
PolySeries star_series(const StarFn& star, const PolySeries& a, const PolySeries& b, int order);

} // namespace qmod
