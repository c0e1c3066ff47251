#pragma once

// Bezoutian and Hankel matrices of univariate rational-function pairs, and the
// unimodular congruences relating them.

#include "hypercert/qmatrix.hpp"
#include "hypercert/rational.hpp"
#include "hypercert/uvpoly.hpp"

namespace hypercert {

// m x m symmetric matrix B with sum_{ij} B[i][j] t^{i-1} s^{j-1} * (t - s)
// = a(t) b(s) - b(t) a(s). Requires deg(b) < deg(a) <= m; zero outside the
// upper-left deg(a) x deg(a) block when m > deg(a).
QMatrix bezout_matrix(const UvPoly& a, const UvPoly& b, size_t m);

// First `count` coefficients h_1, ..., h_count of the expansion
// b(t)/a(t) = sum_k h_k t^{-k}. Requires deg(b) < deg(a).
QVec laurent_series(const UvPoly& b, const UvPoly& a, size_t count);

// m x m Hankel matrix [h_{i+j-1}] of b/a.
QMatrix hankel_matrix(const UvPoly& b, const UvPoly& a, size_t m);

// The explicit anti-triangular Bezoutian of (t^{m-d} a, 1) for monic a of
// degree d <= m: entry (i,j) is the coefficient of t^{i+j-1} in t^{m-d} a.
// Symmetric, determinant +-1.
QMatrix bezout_of_one(const UvPoly& a, size_t m);

// Unimodular M_m(a), entries linear in the coefficients of a, with
// bezout_matrix(a, b, m) = M * hankel_matrix(b, a, m) * M^T for every
// admissible b. Requires a monic of degree d <= m.
QMatrix congruence_matrix(const UvPoly& a, size_t m);

// Upper-triangular Pascal matrix K(t0), [K]_{jk} = C(k-1, j-1) t0^{k-j}
// (1-indexed); satisfies bezout(a(t+t0), b(t+t0), m) = K B K^T and
// K(t0) K(s0) = K(t0 + s0).
QMatrix shift_matrix(const Q& t0, size_t m);

// Laurent data bundle for a rational function b/a truncated for an m x m
// Hankel matrix, with its defining-recurrence self-check.
struct HankelSpec {
    UvPoly numerator;
    UvPoly denominator;
    size_t size = 0;
    QVec laurent; // h_1 .. h_{2m-1}

    static HankelSpec make(const UvPoly& b, const UvPoly& a, size_t m);
    // Checks a * (sum h_k t^{-k}) - b has zero coefficients on
    // t^{-1} .. t^{-(2m-1-deg a)}.
    bool recurrence_holds() const;
};

} // namespace hypercert
