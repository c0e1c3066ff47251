#include "hypercert/mvpoly.hpp"

#include "hypercert/errors.hpp"

#include <numeric>
#include <sstream>

namespace hypercert {

namespace {
int total_degree(const Exponents& e) {
    int d = 0;
    for (auto v : e) d += static_cast<int>(v);
    return d;
}
} // namespace

bool GrlexDesc::operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b; // lexicographically larger first
}

MvPoly MvPoly::constant(size_t nvars, const Q& c) {
    MvPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MvPoly MvPoly::var(size_t i, size_t nvars) {
    if (i >= nvars) throw contract_error("variable index out of range");
    MvPoly p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.add_term(e, Q(1));
    return p;
}

MvPoly MvPoly::monomial(const Exponents& exp, const Q& c) {
    MvPoly p(exp.size());
    p.add_term(exp, c);
    return p;
}

int MvPoly::degree() const {
    if (terms_.empty()) return 0;
    // Terms are graded-descending, so the first term has maximal total degree.
    return total_degree(terms_.begin()->first);
}

Q MvPoly::coeff(const Exponents& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Q(0) : it->second;
}

void MvPoly::add_term(const Exponents& exp, const Q& c) {
    if (exp.size() != nvars_) throw contract_error("exponent vector length != nvars");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MvPoly MvPoly::operator+(const MvPoly& o) const {
    if (nvars_ != o.nvars_) throw contract_error("MvPoly nvars mismatch in add");
    MvPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MvPoly MvPoly::operator-(const MvPoly& o) const {
    if (nvars_ != o.nvars_) throw contract_error("MvPoly nvars mismatch in sub");
    MvPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MvPoly MvPoly::operator*(const MvPoly& o) const {
    if (nvars_ != o.nvars_) throw contract_error("MvPoly nvars mismatch in mul");
    MvPoly r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MvPoly MvPoly::operator-() const {
    MvPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MvPoly MvPoly::scaled(const Q& c) const {
    MvPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

MvPoly MvPoly::pow(unsigned k) const {
    MvPoly acc = constant(nvars_, Q(1));
    MvPoly base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Q MvPoly::eval(const QVec& point) const {
    if (point.size() != nvars_) throw contract_error("eval: point dimension != nvars");
    Q acc(0);
    for (const auto& [e, c] : terms_) {
        Q t = c;
        for (size_t i = 0; i < nvars_; ++i) {
            for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

MvPoly MvPoly::partial(size_t i) const {
    if (i >= nvars_) throw contract_error("partial: variable index out of range");
    MvPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents d = e;
        d[i] -= 1;
        r.add_term(d, c * Q(static_cast<long>(e[i])));
    }
    return r;
}

MvPoly MvPoly::directional_derivative(const QVec& u) const {
    if (u.size() != nvars_) throw contract_error("directional_derivative: dimension mismatch");
    MvPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        for (size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0 || u[i] == 0) continue;
            Exponents d = e;
            d[i] -= 1;
            r.add_term(d, c * u[i] * Q(static_cast<long>(e[i])));
        }
    }
    return r;
}

UvPoly MvPoly::restrict_line(const QVec& x, const QVec& e) const {
    if (x.size() != nvars_ || e.size() != nvars_)
        throw contract_error("restrict_line: dimension mismatch");
    UvPoly out;
    for (const auto& [exp, c] : terms_) {
        // Expand c * prod (x_i + e_i t)^{exp_i} by convolving binomials.
        QVec acc{c};
        for (size_t i = 0; i < nvars_; ++i) {
            for (std::uint32_t k = 0; k < exp[i]; ++k) {
                QVec next(acc.size() + 1, Q(0));
                for (size_t j = 0; j < acc.size(); ++j) {
                    if (acc[j] == 0) continue;
                    next[j] += acc[j] * x[i];
                    next[j + 1] += acc[j] * e[i];
                }
                acc.swap(next);
            }
        }
        out = out + UvPoly(std::move(acc));
    }
    return out;
}

MvPoly MvPoly::compose(const std::vector<MvPoly>& images) const {
    if (images.size() != nvars_) throw contract_error("compose: needs one image per variable");
    size_t out_vars = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images)
        if (im.nvars() != out_vars) throw contract_error("compose: image nvars mismatch");
    MvPoly r(out_vars);
    for (const auto& [e, c] : terms_) {
        MvPoly t = MvPoly::constant(out_vars, c);
        for (size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            t = t * images[i].pow(e[i]);
        }
        r = r + t;
    }
    return r;
}

MvPoly::Homogeneity MvPoly::is_homogeneous() const {
    if (terms_.empty()) return {true, 0, std::nullopt};
    const int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) != d)
            return {false, -1, std::make_pair(terms_.begin()->first, e)};
    }
    return {true, d, std::nullopt};
}

std::string MvPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        Q a = abs_q(c);
        bool coef_printed = false;
        if (a != 1 || total_degree(e) == 0) {
            os << rational_str(a);
            coef_printed = true;
        }
        for (size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (coef_printed) os << "*";
            if (i < names.size()) os << names[i];
            else os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            coef_printed = true;
        }
        first = false;
    }
    return os.str();
}

MvPoly euler_operator(const MvPoly& p) {
    MvPoly acc(p.nvars());
    for (size_t i = 0; i < p.nvars(); ++i)
        acc = acc + MvPoly::var(i, p.nvars()) * p.partial(i);
    return acc;
}

} // namespace hypercert
