#pragma once

#include "qmod/rational.hpp"

#include <optional>
#include <vector>

namespace qmod {

using RationalVector = std::vector<Rational>;

// Dense exact matrix over Q.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    RationalVector row(int r) const;
    void set_row(int r, const RationalVector& v);

    bool is_zero() const;
    Matrix transpose() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    RationalVector apply(const RationalVector& v) const; // A * v

private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

// Rank via fraction-free (Bareiss) elimination on an integer-scaled copy.
// The row updates for a fixed pivot are independent; the parallel variant
// distributes them, the serial twin is kept as the reference.
int rank_serial(const Matrix& m);
int rank_parallel(const Matrix& m);
int rank(const Matrix& m); // dispatches on par::enabled()

Rational determinant(const Matrix& m); // square only, Bareiss
std::optional<Matrix> inverse(const Matrix& m);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref_inplace(Matrix& m);

// Basis of {x : A x = 0}; deterministic (free columns in increasing order,
// free coordinate set to 1).
std::vector<RationalVector> nullspace(const Matrix& a);

// Exact solve of A x = b with a Farkas-style certificate: either a particular
// solution together with a nullspace basis of A, or a dual vector y with
// y^T A = 0 and y^T b != 0 proving infeasibility. Both are verified by
// substitution before returning.
struct LinearSolve {
    bool feasible = false;
    RationalVector particular;               // when feasible
    std::vector<RationalVector> kernel;      // when feasible
    RationalVector dual;                     // when infeasible: y^T A = 0, y^T b != 0
    Rational dual_value;                     // y^T b
};
LinearSolve solve_with_certificate(const Matrix& a, const RationalVector& b);

RationalVector scale(const Rational& c, const RationalVector& v);
RationalVector add(const RationalVector& a, const RationalVector& b);
Rational dot(const RationalVector& a, const RationalVector& b);
bool is_zero(const RationalVector& v);

} // namespace qmod
