#pragma once

// Sparse multivariate polynomials over Q: a map from dense exponent vectors
// to nonzero coefficients. Terms are kept in descending graded-lex order,
// which is also the canonical serialization order.

#include "hypercert/rational.hpp"
#include "hypercert/uvpoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hypercert {

using Exponents = std::vector<std::uint32_t>;

// Descending graded lexicographic: higher total degree first, then
// lexicographically larger exponent vector first.
struct GrlexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class MvPoly {
public:
    using TermMap = std::map<Exponents, Q, GrlexDesc>;

    explicit MvPoly(size_t nvars = 0) : nvars_(nvars) {}

    static MvPoly zero(size_t nvars) { return MvPoly(nvars); }
    static MvPoly constant(size_t nvars, const Q& c);
    static MvPoly var(size_t i, size_t nvars);
    static MvPoly monomial(const Exponents& exp, const Q& c);

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    // Max total degree over terms; 0 for the zero polynomial.
    int degree() const;
    Q coeff(const Exponents& exp) const;

    void add_term(const Exponents& exp, const Q& c);

    MvPoly operator+(const MvPoly& o) const;
    MvPoly operator-(const MvPoly& o) const;
    MvPoly operator*(const MvPoly& o) const;
    MvPoly operator-() const;
    MvPoly scaled(const Q& c) const;
    MvPoly pow(unsigned k) const;
    bool operator==(const MvPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Q eval(const QVec& point) const;
    MvPoly partial(size_t i) const;
    // D_u p = sum_i u_i dp/dx_i
    MvPoly directional_derivative(const QVec& u) const;
    // p(x + t e) as a univariate polynomial in t.
    UvPoly restrict_line(const QVec& x, const QVec& e) const;
    // Substitute x_i -> images[i]; all images share a variable count.
    MvPoly compose(const std::vector<MvPoly>& images) const;

    struct Homogeneity {
        bool homogeneous;
        int degree; // valid when homogeneous
        std::optional<std::pair<Exponents, Exponents>> witness; // two terms of different degree
    };
    Homogeneity is_homogeneous() const;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    size_t nvars_;
    TermMap terms_;
};

// Euler check helper: sum_i x_i * dp/dx_i (= deg * p for homogeneous p).
MvPoly euler_operator(const MvPoly& p);

} // namespace hypercert
