#pragma once

// Dense matrices with MvPoly entries (the home of B_{p,e}(x)[u] and
// H_{p,e}(x)[u], and of the symbolic matrix algebra the tests need).

#include "hypercert/mvpoly.hpp"
#include "hypercert/qmatrix.hpp"

#include <vector>

namespace hypercert {

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(size_t rows, size_t cols, size_t nvars)
        : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, MvPoly(nvars)) {}

    static PolyMatrix identity(size_t n, size_t nvars);
    static PolyMatrix from_qmatrix(const QMatrix& m, size_t nvars);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t nvars() const { return nvars_; }
    MvPoly& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const MvPoly& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix scaled(const Q& c) const;
    PolyMatrix transpose() const;
    bool operator==(const PolyMatrix& o) const;

    bool is_symmetric() const;
    bool is_zero() const;
    MvPoly trace() const;

    QMatrix eval(const QVec& point) const;
    // Substitute each variable by the given image polynomial, entrywise.
    PolyMatrix compose(const std::vector<MvPoly>& images) const;

private:
    size_t rows_ = 0, cols_ = 0, nvars_ = 0;
    std::vector<MvPoly> data_;
};

// Symbolic symmetric matrix of variables: entry (i,j) = x_{index(i,j)} where
// index enumerates the upper triangle row-major. Used by the determinant
// family (n = d(d+1)/2 variables).
PolyMatrix symmetric_variable_matrix(size_t d);

// Upper-triangle row-major position of (i, j) in a d x d symmetric matrix.
size_t sym_index(size_t i, size_t j, size_t d);

// Determinant of a PolyMatrix by cofactor expansion (small sizes only).
MvPoly polymatrix_det(const PolyMatrix& m);

} // namespace hypercert
