#include "qmod/cohomology.hpp"

#include "qmod/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmod {

namespace {

std::vector<IndexTuple> make_tuples(int n, int p) {
    std::vector<IndexTuple> out;
    if (p == 0) {
        out.push_back({});
        return out;
    }
    if (p > n)
        return out;
    IndexTuple t(p);
    for (int i = 0; i < p; ++i)
        t[i] = i;
    while (true) {
        out.push_back(t);
        int i = p - 1;
        while (i >= 0 && t[i] == n - p + i)
            --i;
        if (i < 0)
            break;
        ++t[i];
        for (int j = i + 1; j < p; ++j)
            t[j] = t[j - 1] + 1;
    }
    return out;
}

int sort_sign_tuple(IndexTuple& t) {
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i)
        for (std::size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
            std::swap(t[j], t[j - 1]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] == t[i - 1])
            return 0;
    return sign;
}

// Maintains an echelonized row span; add() reports whether the rank grew.
class IncrementalSpan {
public:
    bool add(RationalVector v) {
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot].is_zero())
                continue;
            Rational f = v[pivot];
            for (std::size_t c = 0; c < v.size(); ++c)
                v[c] -= f * row[c];
        }
        int pivot = -1;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!v[c].is_zero()) {
                pivot = static_cast<int>(c);
                break;
            }
        if (pivot < 0)
            return false;
        Rational inv = v[pivot].inverse();
        for (auto& x : v)
            x *= inv;
        rows_.emplace_back(pivot, std::move(v));
        return true;
    }

private:
    std::vector<std::pair<int, RationalVector>> rows_;
};

} // namespace

CochainComplex::CochainComplex(LieModule module) : module_(std::move(module)) {
    const int n = module_.algebra().dim();
    tuples_.resize(n + 2);
    tuple_rank_.resize(n + 2);
    for (int p = 0; p <= n + 1; ++p) {
        tuples_[p] = make_tuples(n, p);
        for (std::size_t r = 0; r < tuples_[p].size(); ++r)
            tuple_rank_[p].emplace(tuples_[p][r], static_cast<int>(r));
    }
    d_ = par::enabled() ? ce_differentials_parallel(module_) : ce_differentials_serial(module_);
    for (int p = 0; p + 1 <= n; ++p)
        if (!(d_[p + 1] * d_[p]).is_zero())
            throw std::logic_error("CochainComplex: d.d != 0");
}

int CochainComplex::dim_cochains(int p) const {
    if (p < 0 || p > top_degree() + 1)
        return 0;
    return static_cast<int>(tuples_[p].size()) * module_.dim_v();
}

int CochainComplex::basis_index(const IndexTuple& sorted_tuple, int p, int v) const {
    auto it = tuple_rank_[p].find(sorted_tuple);
    if (it == tuple_rank_[p].end())
        throw std::invalid_argument("CochainComplex::basis_index: unknown tuple");
    return it->second * module_.dim_v() + v;
}

RationalVector CochainComplex::value_on(const RationalVector& cochain, int p,
                                        IndexTuple t) const {
    const int m = module_.dim_v();
    RationalVector out(m);
    int sign = sort_sign_tuple(t);
    if (sign == 0)
        return out;
    auto it = tuple_rank_[p].find(t);
    if (it == tuple_rank_[p].end())
        throw std::invalid_argument("CochainComplex::value_on: tuple/degree mismatch");
    for (int v = 0; v < m; ++v) {
        const Rational& x = cochain[static_cast<std::size_t>(it->second) * m + v];
        out[v] = sign == 1 ? x : -x;
    }
    return out;
}

RationalVector CochainComplex::cochain_from_components(
    int p, const std::vector<std::pair<IndexTuple, RationalVector>>& entries) const {
    const int m = module_.dim_v();
    RationalVector out(dim_cochains(p));
    for (auto [t, vec] : entries) {
        int sign = sort_sign_tuple(t);
        if (sign == 0)
            continue;
        auto it = tuple_rank_[p].find(t);
        if (it == tuple_rank_[p].end())
            throw std::invalid_argument("cochain_from_components: tuple/degree mismatch");
        for (int v = 0; v < m; ++v)
            out[static_cast<std::size_t>(it->second) * m + v] += sign == 1 ? vec[v] : -vec[v];
    }
    return out;
}

namespace {

// d(x) for a degree-p cochain vector, with d = -(standard CE differential).
RationalVector apply_ce_differential(const LieModule& module,
                                     const std::vector<std::vector<IndexTuple>>& tuples,
                                     const std::vector<std::map<IndexTuple, int>>& rank,
                                     const RationalVector& x, int p) {
    const LieAlgebra& g = module.algebra();
    const int m = module.dim_v();
    const auto& rows = tuples[p + 1];
    RationalVector out(rows.size() * m);

    auto value = [&](IndexTuple t) {
        RationalVector v(m);
        int sign = sort_sign_tuple(t);
        if (sign == 0)
            return v;
        auto it = rank[p].find(t);
        if (it == rank[p].end())
            return v;
        for (int w = 0; w < m; ++w) {
            const Rational& c = x[static_cast<std::size_t>(it->second) * m + w];
            v[w] = sign == 1 ? c : -c;
        }
        return v;
    };

    for (std::size_t r = 0; r < rows.size(); ++r) {
        const IndexTuple& s = rows[r];
        RationalVector acc(m);
        // module action terms
        for (std::size_t i = 0; i < s.size(); ++i) {
            IndexTuple sub;
            sub.reserve(s.size() - 1);
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i)
                    sub.push_back(s[j]);
            RationalVector v = value(std::move(sub));
            if (is_zero(v))
                continue;
            RationalVector av = module.act(s[i], v);
            int sign = i % 2 == 0 ? 1 : -1;
            for (int w = 0; w < m; ++w)
                acc[w] += sign == 1 ? av[w] : -av[w];
        }
        // bracket insertion terms
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t l = i + 1; l < s.size(); ++l) {
                const RationalVector& c = g.bracket_basis(s[i], s[l]);
                IndexTuple rest;
                rest.reserve(s.size() - 2);
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i && j != l)
                        rest.push_back(s[j]);
                int sign = (i + l) % 2 == 0 ? 1 : -1; // (-1)^{i+l}, 0-based = odd 1-based sum
                for (int e = 0; e < g.dim(); ++e) {
                    if (c[e].is_zero())
                        continue;
                    IndexTuple t;
                    t.reserve(rest.size() + 1);
                    t.push_back(e);
                    for (int j : rest)
                        t.push_back(j);
                    RationalVector v = value(std::move(t));
                    for (int w = 0; w < m; ++w)
                        if (!v[w].is_zero())
                            acc[w] += sign == 1 ? c[e] * v[w] : -(c[e] * v[w]);
                }
            }
        }
        for (int w = 0; w < m; ++w)
            out[r * m + w] = -acc[w]; // global sign: d = -(standard)
    }
    return out;
}

template <bool Parallel>
std::vector<Matrix> ce_differentials_impl(const LieModule& module) {
    const int n = module.algebra().dim();
    const int m = module.dim_v();
    std::vector<std::vector<IndexTuple>> tuples(n + 2);
    std::vector<std::map<IndexTuple, int>> rank(n + 2);
    for (int p = 0; p <= n + 1; ++p) {
        tuples[p] = make_tuples(n, p);
        for (std::size_t r = 0; r < tuples[p].size(); ++r)
            rank[p].emplace(tuples[p][r], static_cast<int>(r));
    }
    std::vector<Matrix> d;
    d.reserve(n + 1);
    for (int p = 0; p <= n; ++p) {
        const int cols = static_cast<int>(tuples[p].size()) * m;
        const int rows = static_cast<int>(tuples[p + 1].size()) * m;
        Matrix dp(rows, cols);
        auto fill_column = [&](std::size_t col) {
            RationalVector unit(cols);
            unit[col] = Rational(1);
            RationalVector img = apply_ce_differential(module, tuples, rank, unit, p);
            for (int r = 0; r < rows; ++r)
                if (!img[r].is_zero())
                    dp.at(r, static_cast<int>(col)) = img[r];
        };
        if constexpr (Parallel)
            par::for_index(static_cast<std::size_t>(cols), fill_column);
        else
            for (std::size_t c = 0; c < static_cast<std::size_t>(cols); ++c)
                fill_column(c);
        d.push_back(std::move(dp));
    }
    return d;
}

} // namespace

std::vector<Matrix> ce_differentials_serial(const LieModule& module) {
    return ce_differentials_impl<false>(module);
}
std::vector<Matrix> ce_differentials_parallel(const LieModule& module) {
    return ce_differentials_impl<true>(module);
}

CohomologyReport cohomology(const CochainComplex& cx, bool with_representatives) {
    const int n = cx.top_degree();
    CohomologyReport rep;
    rep.dims.resize(n + 1);
    rep.cocycle_dims.resize(n + 1);
    rep.coboundary_dims.resize(n + 1);
    rep.representatives.resize(n + 1);
    std::vector<int> ranks(n + 1);
    for (int p = 0; p <= n; ++p)
        ranks[p] = rank(cx.differential(p));
    for (int p = 0; p <= n; ++p) {
        int z = cx.dim_cochains(p) - ranks[p];
        int b = p == 0 ? 0 : ranks[p - 1];
        rep.cocycle_dims[p] = z;
        rep.coboundary_dims[p] = b;
        rep.dims[p] = z - b;
        if (!with_representatives || rep.dims[p] == 0)
            continue;
        IncrementalSpan span;
        if (p > 0) {
            const Matrix& dprev = cx.differential(p - 1);
            for (int c = 0; c < dprev.cols(); ++c) {
                RationalVector col(dprev.rows());
                for (int r = 0; r < dprev.rows(); ++r)
                    col[r] = dprev.at(r, c);
                span.add(std::move(col));
            }
        }
        for (auto& zvec : nullspace(cx.differential(p))) {
            RationalVector candidate = zvec;
            if (span.add(std::move(zvec)))
                rep.representatives[p].push_back(std::move(candidate));
            if (static_cast<int>(rep.representatives[p].size()) == rep.dims[p])
                break;
        }
    }
    return rep;
}

bool is_cocycle(const CochainComplex& cx, const RationalVector& c, int p) {
    if (static_cast<int>(c.size()) != cx.dim_cochains(p))
        throw std::invalid_argument("is_cocycle: dimension mismatch");
    return is_zero(cx.differential(p).apply(c));
}

CoboundaryWitness coboundary_witness(const CochainComplex& cx, const RationalVector& c, int p) {
    if (static_cast<int>(c.size()) != cx.dim_cochains(p))
        throw std::invalid_argument("coboundary_witness: dimension mismatch");
    CoboundaryWitness w;
    if (p == 0) {
        w.is_coboundary = is_zero(c);
        return w;
    }
    LinearSolve s = solve_with_certificate(cx.differential(p - 1), c);
    w.is_coboundary = s.feasible;
    if (s.feasible)
        w.primitive = std::move(s.particular);
    return w;
}

std::vector<RationalVector> invariant_subspace(const LieModule& module) {
    const int n = module.algebra().dim();
    const int m = module.dim_v();
    Matrix stacked(n * m, m);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c)
                stacked.at(i * m + r, c) = module.action(i).at(r, c);
    return nullspace(stacked);
}

KunnethReport kunneth_check(const LieModule& vg, const LieModule& vh, int p) {
    KunnethReport rep;
    rep.degree = p;
    CochainComplex cg(vg), ch(vh);
    auto hg = cohomology(cg, false);
    auto hh = cohomology(ch, false);
    for (int a = 0; a <= p; ++a) {
        int b = p - a;
        int da = a <= vg.algebra().dim() ? hg.dims[a] : 0;
        int db = b <= vh.algebra().dim() ? hh.dims[b] : 0;
        rep.terms.push_back({a, b, da, db});
        rep.rhs_dim += da * db;
    }
    CochainComplex csum(outer_module(vg, vh));
    rep.lhs_dim = cohomology(csum, false).dims[p];
    rep.ok = rep.lhs_dim == rep.rhs_dim;
    return rep;
}

RationalVector cup_product_cochain(const CochainComplex& cx1, const RationalVector& c1, int p,
                                   const CochainComplex& cx2, const RationalVector& c2, int q,
                                   const std::vector<Matrix>& pairing) {
    if (cx1.algebra().dim() != cx2.algebra().dim())
        throw std::invalid_argument("cup_product: different algebras");
    const int n = cx1.algebra().dim();
    const int m1 = cx1.module().dim_v();
    const int m2 = cx2.module().dim_v();
    const int m3 = static_cast<int>(pairing.size());
    for (const auto& mat : pairing)
        if (mat.rows() != m1 || mat.cols() != m2)
            throw std::invalid_argument("cup_product: pairing shape mismatch");

    auto out_tuples = make_tuples(n, p + q);
    RationalVector out(out_tuples.size() * m3);
    // (p,q)-shuffles as p-subsets of positions, with the shuffle sign.
    auto subsets = make_tuples(p + q, p);
    for (std::size_t r = 0; r < out_tuples.size(); ++r) {
        const IndexTuple& s = out_tuples[r];
        for (const auto& chosen : subsets) {
            IndexTuple left, right;
            std::vector<bool> picked(p + q, false);
            for (int pos : chosen)
                picked[pos] = true;
            long inversions = 0;
            for (int pos = 0; pos < p + q; ++pos) {
                if (picked[pos]) {
                    // count unchosen positions before pos
                    for (int u = 0; u < pos; ++u)
                        if (!picked[u])
                            ++inversions;
                    left.push_back(s[pos]);
                } else {
                    right.push_back(s[pos]);
                }
            }
            int sign = inversions % 2 == 0 ? 1 : -1;
            RationalVector v1 = cx1.value_on(c1, p, left);
            if (is_zero(v1))
                continue;
            RationalVector v2 = cx2.value_on(c2, q, right);
            if (is_zero(v2))
                continue;
            for (int w = 0; w < m3; ++w) {
                Rational acc(0);
                for (int u = 0; u < m1; ++u) {
                    if (v1[u].is_zero())
                        continue;
                    for (int v = 0; v < m2; ++v)
                        if (!v2[v].is_zero() && !pairing[w].at(u, v).is_zero())
                            acc += pairing[w].at(u, v) * v1[u] * v2[v];
                }
                if (!acc.is_zero())
                    out[r * m3 + w] += sign == 1 ? acc : -acc;
            }
        }
    }
    return out;
}

RationalVector cup_product(const CochainComplex& cx1, const RationalVector& c1, int p,
                           const CochainComplex& cx2, const RationalVector& c2, int q,
                           const std::vector<Matrix>& pairing, const CochainComplex& cx_out) {
    if (!is_cocycle(cx1, c1, p))
        throw std::invalid_argument("cup_product: first argument is not a cocycle");
    if (!is_cocycle(cx2, c2, q))
        throw std::invalid_argument("cup_product: second argument is not a cocycle");
    RationalVector out = cup_product_cochain(cx1, c1, p, cx2, c2, q, pairing);
    if (!is_cocycle(cx_out, out, p + q))
        throw std::logic_error("cup_product: output failed the cocycle check");
    return out;
}

std::vector<Matrix> evaluation_pairing(int m) {
    std::vector<Matrix> pairing(1, Matrix(m, m));
    for (int i = 0; i < m; ++i)
        pairing[0].at(i, i) = Rational(1);
    return pairing;
}

} // namespace qmod
