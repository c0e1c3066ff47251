#pragma once

// Exact real-root analysis of rational univariate polynomials: Sturm chains,
// real-rootedness, and interval isolation with exact multiplicities.

#include "hypercert/rational.hpp"
#include "hypercert/uvpoly.hpp"

#include <optional>
#include <vector>

namespace hypercert {

// An endpoint that may be -inf or +inf.
struct Bound {
    enum Kind { NegInf, Finite, PosInf } kind = Finite;
    Q value;

    static Bound neg_inf() { return {NegInf, Q(0)}; }
    static Bound pos_inf() { return {PosInf, Q(0)}; }
    static Bound at(const Q& v) { return {Finite, v}; }
};

// Canonical Sturm chain of (square-free part of a, its derivative), with
// primitive-part normalization at each step.
std::vector<UvPoly> sturm_chain(const UvPoly& a);

// Number of distinct real roots of a in (lo, hi]. a must be nonzero.
long sturm_count(const UvPoly& a, const Bound& lo, const Bound& hi);
long sturm_count(const UvPoly& a); // whole real line

// True iff a (nonzero) has deg(a) real roots counted with multiplicity.
bool all_roots_real(const UvPoly& a);

// Isolating interval for one distinct real root. The root lies in [lo, hi];
// lo == hi exactly when the root is rational and was hit exactly.
struct RootInterval {
    Q lo;
    Q hi;
    int multiplicity;
    Q width() const { return hi - lo; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
};

struct RootIsolation {
    std::vector<RootInterval> intervals; // sorted increasing, pairwise disjoint
    long total_multiplicity() const;
};

// Isolates every distinct real root of a in an interval of length <= width,
// with exact multiplicities from the square-free decomposition. Intervals from
// different square-free factors are refined until pairwise disjoint.
RootIsolation isolate_roots(const UvPoly& a, const Q& width);

// Strict upper bound on the absolute value of every root: 1 + max|c_i/c_deg|.
Q cauchy_bound(const UvPoly& a);

// Closed rational interval arithmetic, used to enclose residues evaluated at
// isolated (possibly irrational) roots.
struct QInterval {
    Q lo;
    Q hi;

    static QInterval point(const Q& v) { return {v, v}; }
    Q width() const { return hi - lo; }
    Q mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }

    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    QInterval operator*(const QInterval& o) const;
    // Requires 0 not in o.
    QInterval operator/(const QInterval& o) const;
};

QInterval eval_interval(const UvPoly& p, const QInterval& t);

} // namespace hypercert
