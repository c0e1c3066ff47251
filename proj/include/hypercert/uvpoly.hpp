#pragma once

// Dense univariate polynomials over Q. Coefficient i is the coefficient of
// t^i; trailing zeros are trimmed so deg = coeffs.size() - 1 for nonzero
// polynomials. The zero polynomial has an empty coefficient list.

#include "hypercert/rational.hpp"

#include <string>
#include <vector>

namespace hypercert {

struct SquareFreeFactor; // { UvPoly factor; int multiplicity; }

class UvPoly {
public:
    UvPoly() = default;
    explicit UvPoly(QVec coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UvPoly zero() { return UvPoly(); }
    static UvPoly constant(const Q& c);
    // c * t^k
    static UvPoly monomial(const Q& c, size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    // deg(0) = -1 by convention.
    int deg() const { return static_cast<int>(coeffs_.size()) - 1; }
    const QVec& coeffs() const { return coeffs_; }
    // Coefficient of t^k, 0 for k > deg.
    const Q& coeff(size_t k) const;
    Q lead() const { return is_zero() ? Q(0) : coeffs_.back(); }

    UvPoly operator+(const UvPoly& o) const;
    UvPoly operator-(const UvPoly& o) const;
    UvPoly operator*(const UvPoly& o) const;
    UvPoly operator-() const;
    UvPoly scaled(const Q& c) const;
    bool operator==(const UvPoly& o) const { return coeffs_ == o.coeffs_; }

    Q eval(const Q& t) const;
    UvPoly derivative() const;
    // p(t + s)
    UvPoly shift(const Q& s) const;
    // p(c * t)
    UvPoly scale_arg(const Q& c) const;

    // Quotient and remainder over Q; divisor must be nonzero.
    static void divrem(const UvPoly& a, const UvPoly& b, UvPoly* quot, UvPoly* rem);
    // Exact division; throws contract_error if the remainder is nonzero.
    static UvPoly div_exact(const UvPoly& a, const UvPoly& b);

    // Primitive-part normalization: integer coefficients with content 1 and
    // the sign of the leading coefficient preserved.
    UvPoly primitive() const;
    // gcd, returned primitive with positive leading coefficient. gcd(0,0) = 0.
    static UvPoly gcd(const UvPoly& a, const UvPoly& b);

    // Square-free (Yun) decomposition: returns factors f_i with multiplicities
    // m_1 < m_2 < ... such that a = lead * prod f_i^{m_i}, each f_i monic
    // square-free, pairwise coprime.
    std::vector<SquareFreeFactor> square_free_decomposition() const;
    // Product of the distinct square-free factors, monic.
    UvPoly square_free_part() const;

    UvPoly monic() const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    QVec coeffs_;
};

struct SquareFreeFactor {
    UvPoly factor;
    int multiplicity;
};

} // namespace hypercert
