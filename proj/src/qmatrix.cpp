#include "hypercert/qmatrix.hpp"

#include "hypercert/errors.hpp"

#include <sstream>

namespace hypercert {

QMatrix QMatrix::identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::diagonal(const QVec& d) {
    QMatrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw contract_error("QMatrix add: shape mismatch");
    QMatrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw contract_error("QMatrix sub: shape mismatch");
    QMatrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw contract_error("QMatrix mul: shape mismatch");
    QMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            const Q& a = at(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    }
    return r;
}

QMatrix QMatrix::scaled(const Q& c) const {
    QMatrix r = *this;
    for (auto& v : r.data_) v *= c;
    return r;
}

QMatrix QMatrix::transpose() const {
    QMatrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool QMatrix::operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool QMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Q QMatrix::trace() const {
    Q t(0);
    for (size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

Q QMatrix::det() const {
    if (rows_ != cols_) throw contract_error("det: not square");
    QMatrix w = *this;
    Q d(1);
    for (size_t k = 0; k < rows_; ++k) {
        size_t piv = k;
        while (piv < rows_ && w.at(piv, k) == 0) ++piv;
        if (piv == rows_) return Q(0);
        if (piv != k) {
            for (size_t j = 0; j < cols_; ++j) std::swap(w.at(piv, j), w.at(k, j));
            d = -d;
        }
        d *= w.at(k, k);
        for (size_t i = k + 1; i < rows_; ++i) {
            if (w.at(i, k) == 0) continue;
            Q f = w.at(i, k) / w.at(k, k);
            for (size_t j = k; j < cols_; ++j) w.at(i, j) -= f * w.at(k, j);
        }
    }
    return d;
}

namespace {

// Row echelon reduction; returns pivot columns. Modifies w in place to RREF.
std::vector<size_t> rref(QMatrix& w) {
    std::vector<size_t> pivot_cols;
    size_t row = 0;
    for (size_t col = 0; col < w.cols() && row < w.rows(); ++col) {
        size_t piv = row;
        while (piv < w.rows() && w.at(piv, col) == 0) ++piv;
        if (piv == w.rows()) continue;
        if (piv != row)
            for (size_t j = 0; j < w.cols(); ++j) std::swap(w.at(piv, j), w.at(row, j));
        Q inv = Q(1) / w.at(row, col);
        for (size_t j = col; j < w.cols(); ++j) w.at(row, j) *= inv;
        for (size_t i = 0; i < w.rows(); ++i) {
            if (i == row || w.at(i, col) == 0) continue;
            Q f = w.at(i, col);
            for (size_t j = col; j < w.cols(); ++j) w.at(i, j) -= f * w.at(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

} // namespace

size_t QMatrix::rank() const {
    QMatrix w = *this;
    return rref(w).size();
}

std::string QMatrix::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << rational_str(at(i, j));
        }
        os << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

namespace {

// Back-substitute through the unit lower-triangular columns recorded so far
// so that the assembled vector is M-orthogonal to all eliminated directions:
// v_j = -sum_{i>j} L[i][j] v_i for eliminated j (descending).
QVec assemble_witness(const QMatrix& lower, const std::vector<size_t>& perm, size_t step,
                      const QVec& tail, size_t n) {
    QVec v(n, Q(0)); // in permuted coordinates
    for (size_t i = step; i < n; ++i) v[i] = tail[i - step];
    for (size_t j = step; j-- > 0;) {
        Q s(0);
        for (size_t i = j + 1; i < n; ++i) s += lower.at(i, j) * v[i];
        v[j] = -s;
    }
    QVec w(n, Q(0));
    for (size_t k = 0; k < n; ++k) w[perm[k]] = v[k];
    return w;
}

Q quad_form(const QMatrix& m, const QVec& v) {
    Q acc(0);
    for (size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (size_t j = 0; j < m.cols(); ++j) acc += v[i] * m.at(i, j) * v[j];
    }
    return acc;
}

} // namespace

PsdCertificate ldl_psd_check(const QMatrix& m) {
    if (!m.is_symmetric()) throw contract_error("ldl_psd_check: matrix is not symmetric");
    const size_t n = m.rows();
    PsdCertificate cert;
    cert.perm.resize(n);
    for (size_t i = 0; i < n; ++i) cert.perm[i] = i;
    cert.lower = QMatrix::identity(n);
    cert.pivots.assign(n, Q(0));

    QMatrix s = m; // working matrix; trailing block holds the Schur complement
    auto swap_sym = [&](size_t a, size_t b, size_t done) {
        if (a == b) return;
        for (size_t j = 0; j < n; ++j) std::swap(s.at(a, j), s.at(b, j));
        for (size_t i = 0; i < n; ++i) std::swap(s.at(i, a), s.at(i, b));
        // Only the already-computed columns of L move; the identity part stays.
        for (size_t j = 0; j < done; ++j) std::swap(cert.lower.at(a, j), cert.lower.at(b, j));
        std::swap(cert.perm[a], cert.perm[b]);
    };

    for (size_t k = 0; k < n; ++k) {
        // Any strictly negative diagonal entry certifies failure outright.
        size_t neg = n, pos = n;
        for (size_t i = k; i < n; ++i) {
            int sg = sign_of(s.at(i, i));
            if (sg < 0) {
                neg = i;
                break;
            }
            if (sg > 0 && (pos == n || abs_q(s.at(i, i)) > abs_q(s.at(pos, pos)))) pos = i;
        }
        if (neg != n) {
            QVec tail(n - k, Q(0));
            tail[neg - k] = 1;
            cert.psd = false;
            cert.witness = assemble_witness(cert.lower, cert.perm, k, tail, n);
            cert.witness_value = quad_form(m, cert.witness);
            return cert;
        }
        if (pos == n) {
            // All remaining diagonal entries are zero. PSD requires the whole
            // block to vanish; any off-diagonal entry gives a 2x2 witness.
            for (size_t i = k; i < n; ++i) {
                for (size_t j = i + 1; j < n; ++j) {
                    if (s.at(i, j) == 0) continue;
                    // Block [[0, c],[c, 0]]: (1, -sign(c)) has value -2|c|.
                    QVec tail(n - k, Q(0));
                    tail[i - k] = 1;
                    tail[j - k] = s.at(i, j) > 0 ? Q(-1) : Q(1);
                    cert.psd = false;
                    cert.witness = assemble_witness(cert.lower, cert.perm, k, tail, n);
                    cert.witness_value = quad_form(m, cert.witness);
                    return cert;
                }
            }
            cert.psd = true;
            return cert; // remaining pivots stay 0
        }
        swap_sym(k, pos, k);
        // A positive pivot with nonzero partner on a zero diagonal is handled
        // later; first check zero-diagonal rows against this pivot's block via
        // the Schur complement as usual.
        const Q d = s.at(k, k);
        cert.pivots[k] = d;
        for (size_t i = k + 1; i < n; ++i) {
            Q lik = s.at(i, k) / d;
            cert.lower.at(i, k) = lik;
            if (lik == 0) continue;
            for (size_t j = k + 1; j <= i; ++j) {
                s.at(i, j) -= lik * s.at(j, k);
                s.at(j, i) = s.at(i, j);
            }
        }
    }
    cert.psd = true;
    return cert;
}

QMatrix nullspace(const QMatrix& m) {
    QMatrix w = m;
    std::vector<size_t> pivots = rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    QMatrix basis(m.cols(), free_cols.size());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        basis.at(fc, k) = 1;
        for (size_t r = 0; r < pivots.size(); ++r) basis.at(pivots[r], k) = -w.at(r, fc);
    }
    return basis;
}

} // namespace hypercert
