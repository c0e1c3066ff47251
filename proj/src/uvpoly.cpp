#include "hypercert/uvpoly.hpp"

#include "hypercert/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hypercert {

namespace {
const Q kZero(0);
}

void UvPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UvPoly UvPoly::constant(const Q& c) {
    if (c == 0) return UvPoly();
    return UvPoly(QVec{c});
}

UvPoly UvPoly::monomial(const Q& c, size_t k) {
    if (c == 0) return UvPoly();
    QVec v(k + 1, Q(0));
    v[k] = c;
    return UvPoly(std::move(v));
}

const Q& UvPoly::coeff(size_t k) const {
    if (k >= coeffs_.size()) return kZero;
    return coeffs_[k];
}

UvPoly UvPoly::operator+(const UvPoly& o) const {
    QVec r(std::max(coeffs_.size(), o.coeffs_.size()), Q(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
    return UvPoly(std::move(r));
}

UvPoly UvPoly::operator-(const UvPoly& o) const {
    QVec r(std::max(coeffs_.size(), o.coeffs_.size()), Q(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
    return UvPoly(std::move(r));
}

UvPoly UvPoly::operator*(const UvPoly& o) const {
    if (is_zero() || o.is_zero()) return UvPoly();
    QVec r(coeffs_.size() + o.coeffs_.size() - 1, Q(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return UvPoly(std::move(r));
}

UvPoly UvPoly::operator-() const {
    QVec r = coeffs_;
    for (auto& c : r) c = -c;
    return UvPoly(std::move(r));
}

UvPoly UvPoly::scaled(const Q& c) const {
    if (c == 0) return UvPoly();
    QVec r = coeffs_;
    for (auto& v : r) v *= c;
    return UvPoly(std::move(r));
}

Q UvPoly::eval(const Q& t) const {
    Q acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
    return acc;
}

UvPoly UvPoly::derivative() const {
    if (coeffs_.size() <= 1) return UvPoly();
    QVec r(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * Q(static_cast<long>(i));
    return UvPoly(std::move(r));
}

UvPoly UvPoly::shift(const Q& s) const {
    // Horner in (t + s): fold from the top coefficient down.
    UvPoly acc;
    UvPoly lin(QVec{s, Q(1)});
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * lin + constant(coeffs_[i]);
    return acc;
}

UvPoly UvPoly::scale_arg(const Q& c) const {
    QVec r = coeffs_;
    Q p(1);
    for (size_t i = 0; i < r.size(); ++i) {
        r[i] *= p;
        p *= c;
    }
    return UvPoly(std::move(r));
}

void UvPoly::divrem(const UvPoly& a, const UvPoly& b, UvPoly* quot, UvPoly* rem) {
    if (b.is_zero()) throw contract_error("UvPoly division by zero");
    QVec r = a.coeffs_;
    const int db = b.deg();
    QVec q(a.deg() >= db ? a.deg() - db + 1 : 0, Q(0));
    const Q& lb = b.coeffs_.back();
    for (int k = a.deg() - db; k >= 0; --k) {
        Q factor = r[k + db] / lb;
        if (factor != 0) {
            q[k] = factor;
            for (int i = 0; i <= db; ++i) r[k + i] -= factor * b.coeffs_[i];
        }
    }
    if (quot) *quot = UvPoly(std::move(q));
    if (rem) *rem = UvPoly(std::move(r));
}

UvPoly UvPoly::div_exact(const UvPoly& a, const UvPoly& b) {
    UvPoly q, r;
    divrem(a, b, &q, &r);
    if (!r.is_zero()) throw contract_error("UvPoly division not exact");
    return q;
}

UvPoly UvPoly::primitive() const {
    if (is_zero()) return UvPoly();
    // Clear denominators, then divide by the gcd of the numerators.
    mpz_class den(1);
    for (const auto& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class g(0);
    std::vector<mpz_class> ints(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        Q v = coeffs_[i] * Q(den);
        ints[i] = v.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    QVec r(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = Q(ints[i] / g);
    return UvPoly(std::move(r));
}

UvPoly UvPoly::gcd(const UvPoly& a, const UvPoly& b) {
    UvPoly f = a, g = b;
    while (!g.is_zero()) {
        UvPoly r;
        divrem(f, g, nullptr, &r);
        f = g;
        g = r.is_zero() ? r : r.primitive();
    }
    if (f.is_zero()) return f;
    f = f.primitive();
    if (f.lead() < 0) f = -f;
    return f;
}

std::vector<SquareFreeFactor> UvPoly::square_free_decomposition() const {
    std::vector<SquareFreeFactor> out;
    if (is_zero() || deg() == 0) return out;
    // Yun's algorithm over Q (characteristic 0).
    UvPoly f = monic();
    UvPoly fp = f.derivative();
    UvPoly a0 = gcd(f, fp).monic();
    UvPoly w = div_exact(f, a0);
    UvPoly y = div_exact(fp, a0);
    UvPoly z = y - w.derivative();
    int i = 1;
    while (w.deg() > 0) {
        UvPoly gi = gcd(w, z).monic();
        if (gi.deg() > 0) out.push_back({gi, i});
        w = div_exact(w, gi);
        y = div_exact(z, gi);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

UvPoly UvPoly::square_free_part() const {
    if (is_zero()) return UvPoly();
    if (deg() == 0) return constant(Q(1));
    UvPoly g = gcd(*this, derivative());
    return div_exact(*this, g).monic();
}

UvPoly UvPoly::monic() const {
    if (is_zero()) return UvPoly();
    return scaled(Q(1) / lead());
}

std::string UvPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << (coeffs_[i] > 0 ? " + " : " - ");
        else if (coeffs_[i] < 0)
            os << "-";
        Q a = abs_q(coeffs_[i]);
        if (a != 1 || i == 0) os << rational_str(a);
        if (i >= 1) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace hypercert
