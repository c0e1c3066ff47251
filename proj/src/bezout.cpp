#include "hypercert/bezout.hpp"

#include "hypercert/errors.hpp"

namespace hypercert {

QMatrix bezout_matrix(const UvPoly& a, const UvPoly& b, size_t m) {
    if (a.is_zero()) throw contract_error("bezout_matrix: a must be nonzero");
    if (!b.is_zero() && b.deg() >= a.deg())
        throw contract_error("bezout_matrix: requires deg(b) < deg(a)");
    if (static_cast<size_t>(a.deg()) > m)
        throw contract_error("bezout_matrix: requires deg(a) <= m");
    QMatrix out(m, m);
    if (b.is_zero()) return out;
    // With F(t,s) = a(t)b(s) - b(t)a(s) = sum f_{pq} t^p s^q and
    // F = (t - s) * sum c_{ij} t^i s^j, coefficients satisfy
    // c_{p-1,q} = f_{p,q} + c_{p,q-1}, filled column by column.
    auto f = [&](size_t p, size_t q) -> Q {
        return a.coeff(p) * b.coeff(q) - b.coeff(p) * a.coeff(q);
    };
    const size_t d = static_cast<size_t>(a.deg());
    for (size_t i = 0; i < d; ++i) out.at(i, 0) = f(i + 1, 0);
    for (size_t q = 1; q < d; ++q)
        for (size_t i = 0; i < d; ++i)
            out.at(i, q) = f(i + 1, q) + (i + 1 < d ? out.at(i + 1, q - 1) : Q(0));
    return out;
}

QVec laurent_series(const UvPoly& b, const UvPoly& a, size_t count) {
    if (a.is_zero()) throw contract_error("laurent_series: zero denominator");
    if (!b.is_zero() && b.deg() >= a.deg())
        throw contract_error("laurent_series: requires deg(b) < deg(a)");
    const int d = a.deg();
    const Q lead = a.lead();
    QVec h(count, Q(0));
    for (size_t k = 1; k <= count; ++k) {
        // Match the coefficient of t^{d-k} in a(t) * sum h_j t^{-j} = b(t).
        Q acc = (d >= static_cast<int>(k)) ? b.coeff(d - k) : Q(0);
        for (size_t j = 1; j < k; ++j) {
            int idx = d - static_cast<int>(k) + static_cast<int>(j);
            if (idx >= 0) acc -= a.coeff(idx) * h[j - 1];
        }
        h[k - 1] = acc / lead;
    }
    return h;
}

QMatrix hankel_matrix(const UvPoly& b, const UvPoly& a, size_t m) {
    QVec h = laurent_series(b, a, 2 * m - 1);
    QMatrix out(m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) out.at(i, j) = h[i + j];
    return out;
}

QMatrix bezout_of_one(const UvPoly& a, size_t m) {
    if (a.is_zero()) throw contract_error("bezout_of_one: a must be nonzero");
    if (a.lead() != 1) throw contract_error("bezout_of_one: a must be monic");
    const size_t d = static_cast<size_t>(a.deg());
    if (d > m) throw contract_error("bezout_of_one: requires deg(a) <= m");
    const size_t pad = m - d; // coefficients of t^{m-d} a(t)
    auto coeff = [&](size_t k) -> Q { return k >= pad ? a.coeff(k - pad) : Q(0); };
    QMatrix out(m, m);
    for (size_t i = 1; i <= m; ++i) {
        for (size_t j = 1; j <= m; ++j) {
            size_t k = i + j - 1;
            if (k < m) out.at(i - 1, j - 1) = coeff(k);
            else if (k == m) out.at(i - 1, j - 1) = 1;
        }
    }
    return out;
}

QMatrix congruence_matrix(const UvPoly& a, size_t m) {
    if (a.is_zero() || a.lead() != 1)
        throw contract_error("congruence_matrix: a must be monic (normalize first)");
    const size_t d = static_cast<size_t>(a.deg());
    if (d > m) throw contract_error("congruence_matrix: requires deg(a) <= m");
    QMatrix b1 = bezout_of_one(a, m);
    if (d == m) return b1;
    // Undo the block swap introduced by padding a to degree m: the Bezoutian
    // of (t^{m-d} a, t^{m-d} b) carries B_d(a, b) in its lower-right block,
    // so rows 1..d of M read coordinates m-d+1..m of B(t^{m-d} a, 1).
    QMatrix q(m, m);
    for (size_t i = 0; i < d; ++i) q.at(i, m - d + i) = 1;
    for (size_t j = 0; j < m - d; ++j) q.at(d + j, j) = 1;
    return q * b1;
}

QMatrix shift_matrix(const Q& t0, size_t m) {
    QMatrix k(m, m);
    for (size_t j = 1; j <= m; ++j) {
        for (size_t col = j; col <= m; ++col) {
            // C(col-1, j-1) t0^{col-j}
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(col - 1),
                         static_cast<unsigned long>(j - 1));
            Q v(binom);
            for (size_t e = 0; e < col - j; ++e) v *= t0;
            k.at(j - 1, col - 1) = v;
        }
    }
    return k;
}

HankelSpec HankelSpec::make(const UvPoly& b, const UvPoly& a, size_t m) {
    HankelSpec spec;
    spec.numerator = b;
    spec.denominator = a;
    spec.size = m;
    spec.laurent = laurent_series(b, a, 2 * m - 1);
    return spec;
}

bool HankelSpec::recurrence_holds() const {
    // a(t) * sum_{k=1}^{2m-1} h_k t^{-k} - b(t): the coefficient of t^{-r} for
    // r = 1 .. 2m-1-deg(a) involves only the known h's and must vanish.
    const int d = denominator.deg();
    const int rmax = static_cast<int>(2 * size - 1) - d;
    for (int r = 1; r <= rmax; ++r) {
        Q acc(0);
        for (int j = 0; j <= d; ++j) {
            int k = r + j; // h-index paired with a_j at power t^{-r}
            if (k >= 1 && k <= static_cast<int>(laurent.size()))
                acc += denominator.coeff(j) * laurent[k - 1];
        }
        if (acc != 0) return false;
    }
    return true;
}

} // namespace hypercert
