#include "hypercert/constructions.hpp"

#include "hypercert/errors.hpp"
#include "hypercert/polymatrix.hpp"

#include <sstream>

namespace hypercert {

MvPoly vamos_specialized() {
    const size_t n = 4;
    auto x = [&](size_t i) { return MvPoly::var(i, n); };
    MvPoly cubics = x(0) * x(1) * x(2) + x(0) * x(1) * x(3) + x(0) * x(2) * x(3) + x(1) * x(2) * x(3);
    MvPoly linear = x(0) + x(1) + x(2) + x(3);
    return x(2) * x(2) * x(3) * x(3) + cubics.scaled(Q(4)) * linear;
}

MvPoly graph_q(const Graph& g) {
    const size_t n = 1 + g.nverts() + g.edges().size();
    MvPoly q(n);
    for (size_t j = 0; j < g.edges().size(); ++j) {
        auto [u, v] = g.edges()[j];
        Exponents e(n, 0);
        e[1 + u] += 1;
        e[1 + v] += 1;
        e[1 + g.nverts() + j] += 1;
        q.add_term(e, Q(1));
    }
    return q;
}

LabeledCubic graph_cubic(const Graph& g, const Q& k, bool normalized) {
    if (k == 1) throw contract_error("graph_cubic: k = 1 (coefficient 2k/(k-1) undefined)");
    if (k < 1) throw contract_error("graph_cubic: requires k > 1");
    LabeledCubic out;
    out.graph = g;
    out.k = k;
    out.normalized = normalized;

    const size_t n = 1 + g.nverts() + g.edges().size();
    MvPoly x0 = MvPoly::var(0, n);
    MvPoly sum_squares(n);
    for (int v = 0; v < g.nverts(); ++v) {
        MvPoly xv = MvPoly::var(1 + v, n);
        sum_squares = sum_squares + xv * xv;
    }
    for (size_t j = 0; j < g.edges().size(); ++j) {
        MvPoly ye = MvPoly::var(1 + g.nverts() + j, n);
        sum_squares = sum_squares + ye * ye;
    }
    MvPoly q = graph_q(g);

    if (!normalized) {
        Q a = 2 * k / (k - 1);
        out.poly = x0.pow(3).scaled(a) - x0 * sum_squares + q;
    } else {
        // c_k = 2/(sqrt(2/27) sqrt(1 - 1/k)); c_k^2 = 54k/(k-1).
        Q ck2 = Q(54) * k / (k - 1);
        Q ck;
        if (!rational_square_root(ck2, &ck))
            throw contract_error("graph_cubic: normalized coefficient is irrational for this k");
        out.poly = x0.pow(3) - (x0 * sum_squares).scaled(Q(3)) + q.scaled(ck);
    }

    out.var_names.push_back("x0");
    for (int v = 0; v < g.nverts(); ++v) out.var_names.push_back("x" + std::to_string(v));
    for (const auto& [u, v] : g.edges())
        out.var_names.push_back("y" + std::to_string(u) + "_" + std::to_string(v));
    return out;
}

MvPoly std_cubic(const MvPoly& q) {
    auto h = q.is_homogeneous();
    if (!q.is_zero() && (!h.homogeneous || h.degree != 3))
        throw contract_error("std_cubic: q must be homogeneous cubic");
    const size_t n = q.nvars();
    const size_t m = n + 1;
    MvPoly x0 = MvPoly::var(0, m);
    MvPoly sum_squares(m);
    for (size_t i = 0; i < n; ++i) {
        MvPoly xi = MvPoly::var(i + 1, m);
        sum_squares = sum_squares + xi * xi;
    }
    // Re-embed q with variables shifted by one slot.
    std::vector<MvPoly> images;
    images.reserve(n);
    for (size_t i = 0; i < n; ++i) images.push_back(MvPoly::var(i + 1, m));
    MvPoly q_shift = q.compose(images);
    return x0.pow(3) - (x0 * sum_squares).scaled(Q(3)) + q_shift.scaled(Q(2));
}

NesterovMaximizer nesterov_maximizer(const Graph& g) {
    CliqueResult cr = clique_number(g);
    if (cr.omega < 2) throw contract_error("nesterov_maximizer: graph has no edge");
    NesterovMaximizer out;
    out.omega = cr.omega;
    out.clique = cr.witness;
    const Q w(cr.omega);
    out.value_squared = Q(2, 27) * (1 - 1 / w);
    out.x_square = Q(2) / (3 * w);
    Q pairs = w * (w - 1) / 2; // C(omega, 2)
    out.y_square = Q(1) / (3 * pairs);
    // q_G(point) = (#clique edges) * x_square * sqrt(y_square): every clique
    // edge term has positive sign, off-clique coordinates vanish. Squaring
    // keeps the evaluation rational.
    Q edge_count = pairs;
    out.q_at_point_squared = (edge_count * out.x_square) * (edge_count * out.x_square) * out.y_square;
    return out;
}

UvPoly nesterov_line_poly_squared(const Graph& g, const Q& k) {
    if (k <= 1) throw contract_error("nesterov_line_poly_squared: requires k > 1");
    NesterovMaximizer m = nesterov_maximizer(g);
    Q a = 2 * k / (k - 1);
    // |x|^2 + |y|^2 = 1 at the maximizer.
    UvPoly cubic_even(QVec{Q(0), Q(-1), Q(0), a}); // a t^3 - t
    return cubic_even * cubic_even - UvPoly::constant(m.q_at_point_squared);
}

MvPoly degree_lift(const HyperbolicContext& ctx, const QVec& u, const MvPoly& ell, unsigned k) {
    auto h = ell.is_homogeneous();
    if (!h.homogeneous || (h.degree != 1 && !ell.is_zero()))
        throw contract_error("degree_lift: ell must be a linear form");
    if (ell.nvars() != ctx.nvars()) throw contract_error("degree_lift: ell nvars mismatch");
    if (ell.eval(ctx.e) <= 0) throw contract_error("degree_lift: requires ell(e) > 0");
    if (ell.eval(u) != 0) throw contract_error("degree_lift: requires ell(u) = 0");
    return ell.pow(k) * ctx.p;
}

MvPoly variable_lift(const HyperbolicContext& ctx, const MvPoly& q_linear, const QVec& e_prime) {
    auto h = q_linear.is_homogeneous();
    if (!h.homogeneous || h.degree != 1)
        throw contract_error("variable_lift: q must be a linear form in the fresh variables");
    if (e_prime.size() != q_linear.nvars())
        throw contract_error("variable_lift: e' dimension mismatch");
    Q q_at = q_linear.eval(e_prime);
    if (q_at <= 0) throw contract_error("variable_lift: requires q(e') > 0");

    const size_t n = ctx.nvars(), np = q_linear.nvars();
    std::vector<MvPoly> old_images, fresh_images;
    for (size_t i = 0; i < n; ++i) old_images.push_back(MvPoly::var(i, n + np));
    for (size_t i = 0; i < np; ++i) fresh_images.push_back(MvPoly::var(n + i, n + np));
    MvPoly p_ext = ctx.p.compose(old_images);
    MvPoly dp_ext = ctx.p.directional_derivative(ctx.e).compose(old_images);
    MvPoly q_ext = q_linear.compose(fresh_images);
    return p_ext.scaled(q_at) + q_ext * dp_ext;
}

SpecialPoly det_symmetric(size_t d) {
    PolyMatrix x = symmetric_variable_matrix(d);
    MvPoly p = polymatrix_det(x);
    const size_t n = d * (d + 1) / 2;
    QVec e(n, Q(0));
    for (size_t i = 0; i < d; ++i) e[sym_index(i, i, d)] = 1;
    SpecialPoly sp{HyperbolicContext(p, e), "det_symmetric", {}, {}};
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j) {
            std::ostringstream os;
            os << "x" << (i + 1) << (j + 1);
            sp.var_names.push_back(os.str());
        }
    return sp;
}

SpecialPoly linear_forms(const std::vector<QVec>& forms, const QVec& e) {
    if (forms.empty()) throw contract_error("linear_forms: need at least one form");
    const size_t n = forms[0].size();
    MvPoly p = MvPoly::constant(n, Q(1));
    for (const auto& a : forms) {
        if (a.size() != n) throw contract_error("linear_forms: inconsistent dimensions");
        Q at_e(0);
        MvPoly form(n);
        for (size_t i = 0; i < n; ++i) {
            at_e += a[i] * e[i];
            if (a[i] != 0) form = form + MvPoly::var(i, n).scaled(a[i]);
        }
        if (at_e <= 0) throw contract_error("linear_forms: requires a_i(e) > 0");
        p = p * form;
    }
    return SpecialPoly{HyperbolicContext(p, e), "linear_forms", {}, {}};
}

SpecialPoly singular_cubic() {
    const size_t n = 3;
    QMatrix a1(3, 3), a2(3, 3), a3(3, 3);
    a1.at(0, 2) = a1.at(2, 0) = 1;
    a1.at(1, 1) = 1;
    a2.at(1, 2) = a2.at(2, 1) = 1;
    a3.at(0, 0) = a3.at(1, 1) = a3.at(2, 2) = 1;
    PolyMatrix pencil(3, 3, n);
    const std::vector<QMatrix> as{a1, a2, a3};
    for (size_t k = 0; k < 3; ++k)
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j)
                if (as[k].at(i, j) != 0)
                    pencil.at(i, j) = pencil.at(i, j) + MvPoly::var(k, n).scaled(as[k].at(i, j));
    MvPoly p = polymatrix_det(pencil);
    QVec e{Q(0), Q(0), Q(1)};
    return SpecialPoly{HyperbolicContext(p, e), "singular_cubic", {"x1", "x2", "x3"}, as};
}

QMatrix functional_to_symmetric(const QVec& xi, size_t d) {
    if (xi.size() != d * (d + 1) / 2)
        throw contract_error("functional_to_symmetric: dimension mismatch");
    QMatrix z(d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j) {
            const Q& v = xi[sym_index(i, j, d)];
            if (i == j) z.at(i, i) = v;
            else z.at(i, j) = z.at(j, i) = v / 2; // tr(Z E_ij) = 2 Z_ij off-diagonal
        }
    return z;
}

DualOracle det_dual_oracle(size_t d) {
    return {"psd_selfdual", [d](const QVec& xi) {
                return ldl_psd_check(functional_to_symmetric(xi, d)).psd;
            }};
}

DualOracle linear_forms_dual_oracle(const std::vector<QVec>& forms) {
    // xi must be a nonnegative combination of the forms. For independent
    // forms the coefficients are determined by the linear system.
    const size_t n = forms.empty() ? 0 : forms[0].size();
    QMatrix a(n, forms.size());
    for (size_t j = 0; j < forms.size(); ++j)
        for (size_t i = 0; i < n; ++i) a.at(i, j) = forms[j][i];
    if (a.rank() != forms.size())
        throw contract_error("linear_forms_dual_oracle: forms must be linearly independent");
    return {"cone_of_forms", [a, n](const QVec& xi) {
                // Solve A c = xi exactly by row reduction of [A | xi].
                QMatrix aug(n, a.cols() + 1);
                for (size_t i = 0; i < n; ++i) {
                    for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
                    aug.at(i, a.cols()) = xi[i];
                }
                // Gaussian elimination.
                size_t row = 0;
                std::vector<long> pivot_of_col(a.cols(), -1);
                for (size_t col = 0; col < a.cols() && row < n; ++col) {
                    size_t piv = row;
                    while (piv < n && aug.at(piv, col) == 0) ++piv;
                    if (piv == n) continue;
                    for (size_t j = 0; j <= a.cols(); ++j) std::swap(aug.at(piv, j), aug.at(row, j));
                    Q inv = Q(1) / aug.at(row, col);
                    for (size_t j = col; j <= a.cols(); ++j) aug.at(row, j) *= inv;
                    for (size_t i = 0; i < n; ++i) {
                        if (i == row || aug.at(i, col) == 0) continue;
                        Q f = aug.at(i, col);
                        for (size_t j = col; j <= a.cols(); ++j) aug.at(i, j) -= f * aug.at(row, j);
                    }
                    pivot_of_col[col] = static_cast<long>(row);
                    ++row;
                }
                // Consistency: no zero row with nonzero rhs.
                for (size_t i = row; i < n; ++i)
                    if (aug.at(i, a.cols()) != 0) return false;
                for (size_t col = 0; col < a.cols(); ++col) {
                    long r = pivot_of_col[col];
                    if (r >= 0 && aug.at(static_cast<size_t>(r), a.cols()) < 0) return false;
                }
                return true;
            }};
}

DualOracle singular_cubic_dual_oracle() {
    // Membership in {A*(zz^T)} = dual cone of the singular cubic:
    // xi1 = z2^2 + 2 z1 z3, xi2 = 2 z2 z3, xi3 = z1^2 + z2^2 + z3^2.
    // For z3 != 0, eliminating z1, z2 gives the quartic (in w = z3^2)
    //   64 w^4 - 64 xi3 w^3 + 16 (xi1^2 + xi2^2) w^2 - 8 xi1 xi2^2 w + xi2^4 = 0,
    // solvable for some real z iff it has a root w > 0; the z3 = 0 slice needs
    // xi2 = 0, xi1 >= 0 and xi3 >= xi1.
    return {"singular_cubic_param", [](const QVec& xi) {
                const Q &x1 = xi[0], &x2 = xi[1], &x3 = xi[2];
                if (x2 == 0 && x1 >= 0 && x3 >= x1) return true;
                UvPoly quartic(QVec{x2 * x2 * x2 * x2, Q(-8) * x1 * x2 * x2,
                                    Q(16) * (x1 * x1 + x2 * x2), Q(-64) * x3, Q(64)});
                if (quartic.is_zero()) return x3 >= 0;
                return sturm_count(quartic, Bound::at(Q(0)), Bound::pos_inf()) > 0;
            }};
}

} // namespace hypercert
