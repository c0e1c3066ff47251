#pragma once

// Shared helpers for the test suites: deterministic rational generators and
// small constructors.

#include "hypercert/mvpoly.hpp"
#include "hypercert/qmatrix.hpp"
#include "hypercert/rational.hpp"
#include "hypercert/uvpoly.hpp"

#include <random>

namespace hypercert::testing {

class RationalGen {
public:
    explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

    Q rational(long max_num = 10, long max_den = 10) {
        std::uniform_int_distribution<long> num(-max_num, max_num);
        std::uniform_int_distribution<long> den(1, max_den);
        Q v(num(rng_), den(rng_));
        v.canonicalize(); // mpq_class(n, d) does not canonicalize on its own
        return v;
    }

    Q nonzero_rational(long max_num = 10, long max_den = 10) {
        Q v = rational(max_num, max_den);
        while (v == 0) v = rational(max_num, max_den);
        return v;
    }

    long integer(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(rng_);
    }

    QVec vector(size_t n, long max_num = 10, long max_den = 10) {
        QVec v(n);
        for (auto& x : v) x = rational(max_num, max_den);
        return v;
    }

    UvPoly poly(int deg, long max_num = 6, long max_den = 4) {
        QVec c(deg + 1);
        for (int i = 0; i < deg; ++i) c[i] = rational(max_num, max_den);
        c[deg] = nonzero_rational(max_num, max_den);
        return UvPoly(c);
    }

    UvPoly monic_poly(int deg, long max_num = 6, long max_den = 4) {
        QVec c(deg + 1);
        for (int i = 0; i < deg; ++i) c[i] = rational(max_num, max_den);
        c[deg] = 1;
        return UvPoly(c);
    }

    QMatrix matrix(size_t rows, size_t cols, long max_num = 6, long max_den = 3) {
        QMatrix m(rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) m.at(i, j) = rational(max_num, max_den);
        return m;
    }

    // Random Gram matrix R^T R, PSD by construction.
    QMatrix psd_matrix(size_t n, size_t inner = 0) {
        if (inner == 0) inner = n;
        QMatrix r = matrix(inner, n);
        return r.transpose() * r;
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline MvPoly mv(size_t nvars, std::initializer_list<std::pair<Exponents, long>> terms) {
    MvPoly p(nvars);
    for (const auto& [e, c] : terms) p.add_term(e, Q(c));
    return p;
}

} // namespace hypercert::testing
