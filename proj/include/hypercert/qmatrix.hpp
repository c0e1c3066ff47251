#pragma once

// Dense exact rational matrices, LDL^T-based PSD certification with symmetric
// pivoting, and rational nullspace bases.

#include "hypercert/rational.hpp"

#include <string>
#include <vector>

namespace hypercert {

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Q(0)) {}

    static QMatrix identity(size_t n);
    static QMatrix diagonal(const QVec& d);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Q& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Q& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix scaled(const Q& c) const;
    QMatrix transpose() const;
    bool operator==(const QMatrix& o) const;

    bool is_symmetric() const;
    Q trace() const;
    // Determinant by fraction-free elimination on a copy.
    Q det() const;
    size_t rank() const;

    std::string str() const;

private:
    size_t rows_ = 0, cols_ = 0;
    QVec data_;
};

// Exact PSD verdict for a symmetric matrix. When psd, M reconstructs exactly
// as P L diag(pivots) L^T P^T with unit lower-triangular L; when not_psd a
// witness vector with exactly negative value v^T M v is produced.
struct PsdCertificate {
    bool psd = false;
    QVec pivots;           // diagonal of D in pivot order (psd case)
    QVec witness;          // original-coordinate vector with witness_value < 0
    Q witness_value;       // exact v^T M v (not_psd case)
    QMatrix lower;         // L factor in pivot order (psd case)
    std::vector<size_t> perm; // pivot order: permuted index k came from perm[k]
};

// PSD certification via LDL^T with symmetric diagonal pivoting; exact. A zero
// pivot whose row is not identically zero on the remaining block yields a
// not_psd witness from the corresponding 2x2 submatrix.
PsdCertificate ldl_psd_check(const QMatrix& m);

// Columns form an exact rational basis of {v : Mv = 0}.
QMatrix nullspace(const QMatrix& m);

} // namespace hypercert
