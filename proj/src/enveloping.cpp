#include "qmod/enveloping.hpp"

#include <algorithm>
#include <numeric>

namespace qmod {

namespace {

void add_to(EnvelopingElement& e, const Exponents& k, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = e.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            e.erase(it);
    }
}

void add_scaled(EnvelopingElement& out, const EnvelopingElement& e, const Rational& c) {
    for (const auto& [k, v] : e)
        add_to(out, k, c * v);
}

} // namespace

const EnvelopingElement& EnvelopingAlgebra::insert_letter(const Exponents& alpha, int k) {
    auto key = std::make_pair(alpha, k);
    auto it = insert_memo_.find(key);
    if (it != insert_memo_.end())
        return it->second;

    const int n = g_.dim();
    EnvelopingElement result;
    // last letter m of the ordered word e^alpha
    int m = -1;
    for (int i = n - 1; i >= 0; --i)
        if (alpha[i] > 0) {
            m = i;
            break;
        }
    if (m <= k) {
        // already ordered: e^alpha e_k = e^{alpha + 1_k}
        Exponents out = alpha;
        out[k] += 1;
        result.emplace(std::move(out), Rational(1));
    } else {
        // e^alpha e_k = (e^{alpha'} e_k) e_m + e^{alpha'} [e_m, e_k],
        // alpha' = alpha - 1_m
        Exponents head = alpha;
        head[m] -= 1;
        EnvelopingElement left = insert_letter(head, k);
        result = times_letter(left, m);
        const RationalVector& br = g_.bracket_basis(m, k);
        for (int l = 0; l < n; ++l)
            if (!br[l].is_zero())
                add_scaled(result, insert_letter(head, l), br[l]);
    }
    return insert_memo_.emplace(std::move(key), std::move(result)).first->second;
}

EnvelopingElement EnvelopingAlgebra::times_letter(const EnvelopingElement& a, int k) {
    EnvelopingElement out;
    for (const auto& [alpha, c] : a)
        add_scaled(out, insert_letter(alpha, k), c);
    return out;
}

EnvelopingElement EnvelopingAlgebra::normal_order(const std::vector<int>& word) {
    EnvelopingElement acc;
    acc.emplace(Exponents(g_.dim(), 0), Rational(1));
    for (int letter : word)
        acc = times_letter(acc, letter);
    return acc;
}

EnvelopingElement EnvelopingAlgebra::product(const EnvelopingElement& a,
                                             const EnvelopingElement& b) {
    EnvelopingElement out;
    for (const auto& [eb, cb] : b) {
        // a * e^beta: insert beta's letters left to right (ascending)
        EnvelopingElement cur = a;
        for (int i = 0; i < g_.dim(); ++i)
            for (int rep = 0; rep < eb[i]; ++rep)
                cur = times_letter(cur, i);
        add_scaled(out, cur, cb);
    }
    return out;
}

const EnvelopingElement& EnvelopingAlgebra::symmetrize_monomial(const Exponents& alpha) {
    auto it = symmetrize_memo_.find(alpha);
    if (it != symmetrize_memo_.end())
        return it->second;
    const int n = g_.dim();
    std::vector<int> word;
    for (int i = 0; i < n; ++i)
        word.insert(word.end(), alpha[i], i);
    int d = static_cast<int>(word.size());
    // weight of each distinct arrangement: prod(alpha_i!) / d!
    Rational weight(1);
    for (int i = 0; i < n; ++i)
        weight *= factorial(alpha[i]);
    weight /= factorial(d);
    EnvelopingElement out;
    std::sort(word.begin(), word.end());
    do {
        add_scaled(out, normal_order(word), weight);
    } while (std::next_permutation(word.begin(), word.end()));
    return symmetrize_memo_.emplace(alpha, std::move(out)).first->second;
}

EnvelopingElement EnvelopingAlgebra::symmetrize(const Polynomial& p) {
    EnvelopingElement out;
    for (const auto& [e, c] : p.terms())
        add_scaled(out, symmetrize_monomial(e), c);
    return out;
}

const Polynomial& EnvelopingAlgebra::unsymmetrize_pbw(const Exponents& alpha) {
    auto it = unsym_memo_.find(alpha);
    if (it != unsym_memo_.end())
        return it->second;
    const int n = g_.dim();
    // sigma(x^alpha) = e^alpha + (lower degree PBW terms), so
    // sigma^{-1}(e^alpha) = x^alpha - sigma^{-1}(sigma(x^alpha) - e^alpha).
    Polynomial result = Polynomial::monomial(n, alpha, Rational(1));
    EnvelopingElement rest = symmetrize_monomial(alpha);
    auto self = rest.find(alpha);
    if (self == rest.end() || self->second != Rational(1))
        throw std::logic_error("unsymmetrize: symmetrization lost its leading term");
    rest.erase(self);
    for (const auto& [k, c] : rest)
        result -= c * unsymmetrize_pbw(k);
    return unsym_memo_.emplace(alpha, std::move(result)).first->second;
}

Polynomial EnvelopingAlgebra::unsymmetrize(const EnvelopingElement& u) {
    Polynomial out(g_.dim());
    for (const auto& [k, c] : u)
        out += c * unsymmetrize_pbw(k);
    return out;
}

PolySeries cbh_star(const LieAlgebra& g, const Polynomial& f, const Polynomial& g2, int order) {
    EnvelopingAlgebra ua(g);
    return cbh_star(ua, f, g2, order);
}

PolySeries cbh_star(EnvelopingAlgebra& ua, const Polynomial& f, const Polynomial& g2, int order) {
    const LieAlgebra& g = ua.algebra();
    if (f.n_vars() != g.dim() || g2.n_vars() != g.dim())
        throw std::invalid_argument("cbh_star: polynomials must live on dim(g) variables");
    if (order < 0)
        throw std::invalid_argument("cbh_star: negative order");
    PolySeries out(order + 1, Polynomial::zero(g.dim()));
    for (const auto& [ef, cf] : f.terms()) {
        const EnvelopingElement& uf = ua.symmetrize_monomial(ef);
        int degf = std::accumulate(ef.begin(), ef.end(), 0);
        for (const auto& [eg, cg] : g2.terms()) {
            const EnvelopingElement& ug = ua.symmetrize_monomial(eg);
            int degg = std::accumulate(eg.begin(), eg.end(), 0);
            Polynomial s = ua.unsymmetrize(ua.product(uf, ug));
            int dtot = degf + degg;
            for (int d = dtot; d >= 0; --d) {
                int k = dtot - d; // one eps per degree drop (= one bracket)
                if (k > order)
                    break;
                Polynomial part = s.homogeneous_part(d);
                if (!part.is_zero())
                    out[k] += (cf * cg) * part;
            }
        }
    }
    return out;
}

} // namespace qmod
