#include "hypercert/polymatrix.hpp"

#include "hypercert/errors.hpp"

namespace hypercert {

PolyMatrix PolyMatrix::identity(size_t n, size_t nvars) {
    PolyMatrix m(n, n, nvars);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = MvPoly::constant(nvars, Q(1));
    return m;
}

PolyMatrix PolyMatrix::from_qmatrix(const QMatrix& q, size_t nvars) {
    PolyMatrix m(q.rows(), q.cols(), nvars);
    for (size_t i = 0; i < q.rows(); ++i)
        for (size_t j = 0; j < q.cols(); ++j)
            if (q.at(i, j) != 0) m.at(i, j) = MvPoly::constant(nvars, q.at(i, j));
    return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw contract_error("PolyMatrix add: shape mismatch");
    PolyMatrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] + o.data_[i];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw contract_error("PolyMatrix sub: shape mismatch");
    PolyMatrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] - o.data_[i];
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw contract_error("PolyMatrix mul: shape mismatch");
    PolyMatrix r(rows_, o.cols_, nvars_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

PolyMatrix PolyMatrix::scaled(const Q& c) const {
    PolyMatrix r = *this;
    for (auto& p : r.data_) p = p.scaled(c);
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(cols_, rows_, nvars_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool PolyMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if (!(at(i, j) == at(j, i))) return false;
    return true;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : data_)
        if (!p.is_zero()) return false;
    return true;
}

MvPoly PolyMatrix::trace() const {
    MvPoly t(nvars_);
    for (size_t i = 0; i < std::min(rows_, cols_); ++i) t = t + at(i, i);
    return t;
}

QMatrix PolyMatrix::eval(const QVec& point) const {
    QMatrix m(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).eval(point);
    return m;
}

PolyMatrix PolyMatrix::compose(const std::vector<MvPoly>& images) const {
    size_t out_vars = images.empty() ? 0 : images[0].nvars();
    PolyMatrix m(rows_, cols_, out_vars);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).compose(images);
    return m;
}

size_t sym_index(size_t i, size_t j, size_t d) {
    if (i > j) std::swap(i, j);
    // Row-major upper triangle: offsets d, d-1, ... per row.
    return i * d - i * (i + 1) / 2 + j;
}

PolyMatrix symmetric_variable_matrix(size_t d) {
    const size_t n = d * (d + 1) / 2;
    PolyMatrix m(d, d, n);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) m.at(i, j) = MvPoly::var(sym_index(i, j, d), n);
    return m;
}

MvPoly polymatrix_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw contract_error("polymatrix_det: not square");
    const size_t n = m.rows();
    if (n == 0) return MvPoly::constant(m.nvars(), Q(1));
    if (n == 1) return m.at(0, 0);
    MvPoly acc(m.nvars());
    for (size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1, m.nvars());
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        MvPoly term = m.at(0, j) * polymatrix_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace hypercert
