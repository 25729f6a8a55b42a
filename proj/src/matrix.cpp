#include "qmod/matrix.hpp"

#include "qmod/parallel.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace qmod {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = Rational(1);
    return m;
}

RationalVector Matrix::row(int r) const {
    RationalVector v(cols_);
    for (int c = 0; c < cols_; ++c)
        v[c] = at(r, c);
    return v;
}

void Matrix::set_row(int r, const RationalVector& v) {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("Matrix::set_row: size mismatch");
    for (int c = 0; c < cols_; ++c)
        at(r, c) = v[c];
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("Matrix multiply: shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero())
                continue; // sparse rows dominate here; skipping zeros matters
            for (int j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b.at(k, j);
                if (!bkj.is_zero())
                    r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("Matrix add: shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        r.data_[i] = a.data_[i] + b.data_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("Matrix sub: shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        r.data_[i] = a.data_[i] - b.data_[i];
    return r;
}

RationalVector Matrix::apply(const RationalVector& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("Matrix::apply: size mismatch");
    RationalVector r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int c = 0; c < cols_; ++c)
            if (!at(i, c).is_zero() && !v[c].is_zero())
                r[i] += at(i, c) * v[c];
    return r;
}

namespace {

// Integer copy with denominators cleared per row (rank-preserving).
std::vector<std::vector<mpz_class>> integerize(const Matrix& m) {
    std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
    for (int r = 0; r < m.rows(); ++r) {
        mpz_class l(1);
        for (int c = 0; c < m.cols(); ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).denominator().get_mpz_t());
        for (int c = 0; c < m.cols(); ++c)
            a[r][c] = m.at(r, c).numerator() * (l / m.at(r, c).denominator());
    }
    return a;
}

template <bool Parallel>
int bareiss_rank(const Matrix& m) {
    auto a = integerize(m);
    const int rows = m.rows(), cols = m.cols();
    mpz_class prev(1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        std::swap(a[rank], a[pivot]);
        const mpz_class& p = a[rank][col];
        auto update_row = [&](std::size_t idx) {
            int r = rank + 1 + static_cast<int>(idx);
            for (int c = col + 1; c < cols; ++c) {
                mpz_class t = a[r][c] * p - a[r][col] * a[rank][c];
                mpz_divexact(a[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][col] = 0;
        };
        std::size_t n_below = static_cast<std::size_t>(rows - rank - 1);
        if constexpr (Parallel)
            par::for_index(n_below, update_row);
        else
            for (std::size_t i = 0; i < n_below; ++i)
                update_row(i);
        prev = p;
        ++rank;
    }
    return rank;
}

} // namespace

int rank_serial(const Matrix& m) { return bareiss_rank<false>(m); }
int rank_parallel(const Matrix& m) { return bareiss_rank<true>(m); }
int rank(const Matrix& m) { return par::enabled() ? rank_parallel(m) : rank_serial(m); }

Rational determinant(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix not square");
    Matrix a = m;
    const int n = a.rows();
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return Rational(0);
        if (pivot != col) {
            for (int c = 0; c < n; ++c)
                std::swap(a.at(col, c), a.at(pivot, c));
            det = -det;
        }
        det *= a.at(col, col);
        Rational inv = a.at(col, col).inverse();
        for (int r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero())
                continue;
            Rational f = a.at(r, col) * inv;
            for (int c = col; c < n; ++c)
                a.at(r, c) -= f * a.at(col, c);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix not square");
    const int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c)
            aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = Rational(1);
    }
    auto pivots = rref_inplace(aug);
    // Invertible iff the left block reduced to the identity.
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        return std::nullopt;
    for (int r = 0; r < n; ++r)
        if (pivots[r] != r)
            return std::nullopt;
    Matrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

std::vector<int> rref_inplace(Matrix& m) {
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
        int pivot = -1;
        for (int r = lead; r < m.rows(); ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != lead)
            for (int c = 0; c < m.cols(); ++c)
                std::swap(m.at(lead, c), m.at(pivot, c));
        Rational inv = m.at(lead, col).inverse();
        for (int c = 0; c < m.cols(); ++c)
            m.at(lead, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == lead || m.at(r, col).is_zero())
                continue;
            Rational f = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c)
                m.at(r, c) -= f * m.at(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

namespace {

std::vector<RationalVector> nullspace_of_rref(const Matrix& m, const std::vector<int>& pivots,
                                              int cols) {
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots)
        is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        RationalVector v(cols);
        v[f] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

std::vector<RationalVector> nullspace(const Matrix& a) {
    Matrix m = a;
    auto pivots = rref_inplace(m);
    return nullspace_of_rref(m, pivots, a.cols());
}

LinearSolve solve_with_certificate(const Matrix& a, const RationalVector& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve_with_certificate: rhs size mismatch");
    const int rows = a.rows(), cols = a.cols();
    // Augment [A | b | I]; eliminate with pivots restricted to A's columns so
    // the I block tracks the row operations (dual certificate extraction).
    Matrix m(rows, cols + 1 + rows);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = a.at(r, c);
        m.at(r, cols) = b[r];
        m.at(r, cols + 1 + r) = Rational(1);
    }
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int pivot = -1;
        for (int r = lead; r < rows; ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != lead)
            for (int c = 0; c < m.cols(); ++c)
                std::swap(m.at(lead, c), m.at(pivot, c));
        Rational inv = m.at(lead, col).inverse();
        for (int c = 0; c < m.cols(); ++c)
            m.at(lead, c) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == lead || m.at(r, col).is_zero())
                continue;
            Rational f = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c)
                m.at(r, c) -= f * m.at(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }

    LinearSolve out;
    for (int r = lead; r < rows; ++r) {
        if (m.at(r, cols).is_zero())
            continue;
        out.feasible = false;
        out.dual.assign(rows, Rational(0));
        for (int c = 0; c < rows; ++c)
            out.dual[c] = m.at(r, cols + 1 + c);
        out.dual_value = m.at(r, cols);
        // Verify y^T A = 0 and y^T b != 0.
        RationalVector yta(cols);
        Rational ytb(0);
        for (int rr = 0; rr < rows; ++rr) {
            if (out.dual[rr].is_zero())
                continue;
            for (int c = 0; c < cols; ++c)
                yta[c] += out.dual[rr] * a.at(rr, c);
            ytb += out.dual[rr] * b[rr];
        }
        if (!is_zero(yta) || ytb.is_zero())
            throw std::logic_error("solve_with_certificate: invalid dual certificate");
        return out;
    }
    out.feasible = true;
    out.particular.assign(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        out.particular[pivots[r]] = m.at(static_cast<int>(r), cols);
    // Kernel from the reduced A block.
    Matrix reduced(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            reduced.at(r, c) = m.at(r, c);
    out.kernel = nullspace_of_rref(reduced, pivots, cols);
    if (a.apply(out.particular) != b)
        throw std::logic_error("solve_with_certificate: invalid particular solution");
    return out;
}

RationalVector scale(const Rational& c, const RationalVector& v) {
    RationalVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = c * v[i];
    return r;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector add: size mismatch");
    RationalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: size mismatch");
    Rational r(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero())
            r += a[i] * b[i];
    return r;
}

bool is_zero(const RationalVector& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

} // namespace qmod
