#include "qmod/lie.hpp"

#include <sstream>

namespace qmod {

LieAlgebra::LieAlgebra(int dim)
    : dim_(dim), c_(dim, std::vector<RationalVector>(dim, RationalVector(dim))) {
    if (dim <= 0)
        throw std::invalid_argument("LieAlgebra: dim must be positive");
}

std::optional<std::tuple<int, int, int>> LieAlgebra::jacobi_witness(
    int dim, const std::vector<std::vector<RationalVector>>& c) {
    auto bracket_vec = [&](const RationalVector& x, int k) {
        RationalVector r(dim);
        for (int i = 0; i < dim; ++i) {
            if (x[i].is_zero())
                continue;
            for (int l = 0; l < dim; ++l)
                if (!c[i][k][l].is_zero())
                    r[l] += x[i] * c[i][k][l];
        }
        return r;
    };
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k) {
                RationalVector s = add(add(bracket_vec(c[i][j], k), bracket_vec(c[j][k], i)),
                                       bracket_vec(c[k][i], j));
                if (!is_zero(s))
                    return std::make_tuple(i, j, k);
            }
    return std::nullopt;
}

LieAlgebra LieAlgebra::validated(int dim, const std::vector<BracketTerm>& brackets) {
    LieAlgebra g(dim);
    for (const auto& t : brackets) {
        if (t.i < 0 || t.i >= dim || t.j < 0 || t.j >= dim || t.k < 0 || t.k >= dim)
            throw std::out_of_range("LieAlgebra: bracket index out of range");
        if (t.i == t.j)
            throw std::invalid_argument("LieAlgebra: bracket [e_i, e_i] must be omitted");
        g.c_[t.i][t.j][t.k] += t.c;
        g.c_[t.j][t.i][t.k] -= t.c;
    }
    if (auto w = jacobi_witness(dim, g.c_)) {
        auto [i, j, k] = *w;
        std::ostringstream os;
        os << "LieAlgebra: Jacobi identity fails on (e" << (i + 1) << ", e" << (j + 1) << ", e"
           << (k + 1) << ")";
        throw LieAlgebraError(os.str(), i + 1, j + 1, k + 1);
    }
    return g;
}

const RationalVector& LieAlgebra::bracket_basis(int i, int j) const { return c_.at(i).at(j); }

RationalVector LieAlgebra::bracket(const RationalVector& x, const RationalVector& y) const {
    RationalVector r(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j].is_zero())
                continue;
            for (int k = 0; k < dim_; ++k)
                if (!c_[i][j][k].is_zero())
                    r[k] += x[i] * y[j] * c_[i][j][k];
        }
    }
    return r;
}

Matrix LieAlgebra::ad(int i) const {
    Matrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k)
            m.at(k, j) = c_[i][j][k];
    return m;
}

Matrix LieAlgebra::killing_form() const {
    std::vector<Matrix> ads;
    ads.reserve(dim_);
    for (int i = 0; i < dim_; ++i)
        ads.push_back(ad(i));
    Matrix k(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j) {
            Rational tr(0);
            for (int r = 0; r < dim_; ++r)
                for (int s = 0; s < dim_; ++s)
                    tr += ads[i].at(r, s) * ads[j].at(s, r);
            k.at(i, j) = tr;
            k.at(j, i) = tr;
        }
    return k;
}

std::optional<Matrix> LieAlgebra::killing_inverse() const { return inverse(killing_form()); }

bool LieAlgebra::is_semisimple() const { return !determinant(killing_form()).is_zero(); }

Polynomial LieAlgebra::casimir() const {
    auto kinv = killing_inverse();
    if (!kinv)
        throw std::domain_error("casimir: Killing form is degenerate");
    Polynomial psi(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            Exponents e(dim_, 0);
            e[i] += 1;
            e[j] += 1;
            psi.add_term(e, kinv->at(i, j));
        }
    // Poisson centrality is part of the contract.
    MultiVector pi = linear_poisson();
    for (int i = 0; i < dim_; ++i)
        if (!poisson_bracket(pi, Polynomial::variable(dim_, i), psi).is_zero())
            throw std::logic_error("casimir: not Poisson central");
    return psi;
}

MultiVector LieAlgebra::linear_poisson() const {
    MultiVector pi(dim_, 2);
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j) {
            Polynomial p(dim_);
            for (int k = 0; k < dim_; ++k) {
                if (c_[i][j][k].is_zero())
                    continue;
                Exponents e(dim_, 0);
                e[k] = 1;
                p.add_term(e, c_[i][j][k]);
            }
            if (!p.is_zero())
                pi.add_component({i, j}, p);
        }
    return pi;
}

std::vector<BracketTerm> LieAlgebra::bracket_list() const {
    std::vector<BracketTerm> out;
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (!c_[i][j][k].is_zero())
                    out.push_back({i, j, k, c_[i][j][k]});
    return out;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    LieAlgebra s(a.dim_ + b.dim_);
    for (int i = 0; i < a.dim_; ++i)
        for (int j = 0; j < a.dim_; ++j)
            for (int k = 0; k < a.dim_; ++k)
                s.c_[i][j][k] = a.c_[i][j][k];
    for (int i = 0; i < b.dim_; ++i)
        for (int j = 0; j < b.dim_; ++j)
            for (int k = 0; k < b.dim_; ++k)
                s.c_[a.dim_ + i][a.dim_ + j][a.dim_ + k] = b.c_[i][j][k];
    return s;
}

LieAlgebra make_so3() {
    // [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2
    return LieAlgebra::validated(
        3, {{0, 1, 2, Rational(1)}, {1, 2, 0, Rational(1)}, {0, 2, 1, Rational(-1)}});
}

LieAlgebra make_k() { return LieAlgebra::validated(2, {{0, 1, 1, Rational(1)}}); }

LieAlgebra make_k_plus_k() { return direct_sum(make_k(), make_k()); }

LieAlgebra make_abelian(int n) { return LieAlgebra::validated(n, {}); }

LieModule LieModule::validated(LieAlgebra algebra, std::vector<Matrix> action) {
    const int n = algebra.dim();
    if (static_cast<int>(action.size()) != n)
        throw std::invalid_argument("LieModule: need one action matrix per basis element");
    const int m = action.empty() ? 0 : action.front().rows();
    for (const auto& a : action)
        if (a.rows() != m || a.cols() != m)
            throw std::invalid_argument("LieModule: action matrices must be square, same size");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Matrix lhs(m, m);
            const RationalVector& c = algebra.bracket_basis(i, j);
            for (int k = 0; k < n; ++k) {
                if (c[k].is_zero())
                    continue;
                for (int r = 0; r < m; ++r)
                    for (int s = 0; s < m; ++s)
                        lhs.at(r, s) += c[k] * action[k].at(r, s);
            }
            Matrix rhs = action[i] * action[j] - action[j] * action[i];
            if (!(lhs == rhs)) {
                std::ostringstream os;
                os << "LieModule: action is not a homomorphism on (e" << (i + 1) << ", e"
                   << (j + 1) << ")";
                throw std::invalid_argument(os.str());
            }
        }
    return LieModule(std::move(algebra), m, std::move(action));
}

LieModule LieModule::trivial(const LieAlgebra& g, int dim_v) {
    return LieModule(g, dim_v, std::vector<Matrix>(g.dim(), Matrix(dim_v, dim_v)));
}

LieModule LieModule::adjoint(const LieAlgebra& g) {
    std::vector<Matrix> action;
    action.reserve(g.dim());
    for (int i = 0; i < g.dim(); ++i)
        action.push_back(g.ad(i));
    return validated(g, std::move(action));
}

LieModule LieModule::coadjoint(const LieAlgebra& g) {
    std::vector<Matrix> action;
    action.reserve(g.dim());
    for (int i = 0; i < g.dim(); ++i) {
        Matrix m = g.ad(i).transpose();
        Matrix neg(m.rows(), m.cols());
        action.push_back(neg - m);
    }
    return validated(g, std::move(action));
}

LieModule outer_module(const LieModule& vg, const LieModule& vh) {
    LieAlgebra sum = direct_sum(vg.algebra(), vh.algebra());
    const int mg = vg.dim_v(), mh = vh.dim_v();
    const int m = mg * mh;
    std::vector<Matrix> action;
    action.reserve(sum.dim());
    for (int i = 0; i < vg.algebra().dim(); ++i) {
        Matrix a(m, m); // rho_g(e_i) (x) id
        for (int r = 0; r < mg; ++r)
            for (int s = 0; s < mg; ++s) {
                const Rational& v = vg.action(i).at(r, s);
                if (v.is_zero())
                    continue;
                for (int t = 0; t < mh; ++t)
                    a.at(r * mh + t, s * mh + t) = v;
            }
        action.push_back(std::move(a));
    }
    for (int i = 0; i < vh.algebra().dim(); ++i) {
        Matrix a(m, m); // id (x) rho_h(e_i)
        for (int t = 0; t < mg; ++t)
            for (int r = 0; r < mh; ++r)
                for (int s = 0; s < mh; ++s) {
                    const Rational& v = vh.action(i).at(r, s);
                    if (!v.is_zero())
                        a.at(t * mh + r, t * mh + s) = v;
                }
        action.push_back(std::move(a));
    }
    return LieModule::validated(std::move(sum), std::move(action));
}

} // namespace qmod
