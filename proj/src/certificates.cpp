#include "hypercert/certificates.hpp"

#include "hypercert/errors.hpp"
#include "hypercert/roots.hpp"

#include <algorithm>
#include <functional>

namespace hypercert {

namespace {

// First monomial where a and b differ (grlex-descending); requires a != b.
Exponents first_difference(const MvPoly& a, const MvPoly& b) {
    MvPoly diff = a - b;
    return diff.terms().begin()->first;
}

} // namespace

GramResult verify_gram(const GramCertificate& cert) {
    const size_t k = cert.basis.size();
    if (cert.gram.rows() != k || cert.gram.cols() != k)
        throw contract_error("verify_gram: gram dimension != basis size");
    if (!cert.gram.is_symmetric()) throw contract_error("verify_gram: gram must be symmetric");
    GramResult res;
    MvPoly expanded(cert.target.nvars());
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            if (cert.gram.at(i, j) == 0) continue;
            expanded = expanded + (cert.basis[i] * cert.basis[j]).scaled(cert.gram.at(i, j));
        }
    }
    if (!(expanded == cert.target)) {
        res.verdict = GramVerdict::IdentityFail;
        res.offending_monomial = first_difference(expanded, cert.target);
        return res;
    }
    res.psd = ldl_psd_check(cert.gram);
    res.verdict = res.psd.psd ? GramVerdict::ValidSos : GramVerdict::GramNotPsd;
    return res;
}

namespace {

struct Point2 {
    long x, y;
    bool operator<(const Point2& o) const { return x < o.x || (x == o.x && y < o.y); }
    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
};

long cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Monotone-chain convex hull; collinear input collapses to its extremes.
std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Point2> hull;
    for (int pass = 0; pass < 2; ++pass) {
        size_t start = hull.size();
        for (const auto& p : pts) {
            while (hull.size() >= start + 2 &&
                   cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
                hull.pop_back();
            hull.push_back(p);
        }
        hull.pop_back();
        std::reverse(pts.begin(), pts.end());
    }
    if (hull.empty()) hull.push_back(pts.front()); // all points identical
    return hull;
}

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
    if (cross(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool hull_contains(const std::vector<Point2>& hull, const Point2& p) {
    if (hull.empty()) return false;
    if (hull.size() == 1) return hull[0] == p;
    if (hull.size() == 2) return on_segment(hull[0], hull[1], p);
    for (size_t i = 0; i < hull.size(); ++i) {
        const Point2& a = hull[i];
        const Point2& b = hull[(i + 1) % hull.size()];
        if (cross(a, b, p) < 0) return false; // hull is counter-clockwise
    }
    return true;
}

void enumerate_degree(unsigned d, unsigned m, Exponents& cur, size_t pos,
                      const std::function<void(const Exponents&)>& emit) {
    if (pos + 1 == cur.size()) {
        cur[pos] = d;
        emit(cur);
        return;
    }
    for (unsigned k = 0; k <= d; ++k) {
        cur[pos] = d - k;
        enumerate_degree(k, m, cur, pos + 1, emit);
    }
}

} // namespace

std::vector<MvPoly> admissible_square_basis(const MvPoly& target,
                                            const std::vector<QVec>& vanish_points) {
    auto h = target.is_homogeneous();
    if (!h.homogeneous || h.degree % 2 != 0)
        throw contract_error("admissible_square_basis: target must be homogeneous of even degree");
    const unsigned half = static_cast<unsigned>(h.degree / 2);
    const size_t n = target.nvars();

    // Effective variables: those appearing in the target's support.
    std::vector<size_t> eff;
    for (size_t i = 0; i < n; ++i) {
        for (const auto& [e, c] : target.terms()) {
            if (e[i] > 0) {
                eff.push_back(i);
                break;
            }
        }
    }
    if (eff.size() > 3)
        throw contract_error("admissible_square_basis: more than three effective variables "
                             "is unsupported");

    // Newton polytope in the simplex slice: homogeneity fixes the total
    // degree, so drop the last effective coordinate and take the 2D hull.
    std::vector<Point2> support;
    for (const auto& [e, c] : target.terms()) {
        long a = eff.size() > 0 ? e[eff[0]] : 0;
        long b = eff.size() > 1 ? e[eff[1]] : 0;
        support.push_back({a, b});
    }
    std::vector<Point2> hull = convex_hull(support);

    // Candidate monomials of degree `half` in the effective variables whose
    // doubled exponent lies in the polytope.
    std::vector<Exponents> candidates;
    Exponents cur(eff.size() == 0 ? 1 : eff.size(), 0);
    if (!eff.empty()) {
        enumerate_degree(half, static_cast<unsigned>(eff.size()), cur, 0,
                         [&](const Exponents& expo) {
                             Point2 doubled{2L * expo[0], eff.size() > 1 ? 2L * expo[1] : 0L};
                             if (!hull_contains(hull, doubled)) return;
                             Exponents full(n, 0);
                             for (size_t i = 0; i < eff.size(); ++i) full[eff[i]] = expo[i];
                             candidates.push_back(full);
                         });
    }

    // Vanishing conditions: rows are evaluations of candidate monomials.
    QMatrix cond(vanish_points.size(), candidates.size());
    for (size_t r = 0; r < vanish_points.size(); ++r) {
        if (vanish_points[r].size() != n)
            throw contract_error("admissible_square_basis: vanish point dimension mismatch");
        for (size_t c = 0; c < candidates.size(); ++c)
            cond.at(r, c) = MvPoly::monomial(candidates[c], Q(1)).eval(vanish_points[r]);
    }
    QMatrix basis = nullspace(cond);

    std::vector<MvPoly> out;
    for (size_t col = 0; col < basis.cols(); ++col) {
        MvPoly p(n);
        for (size_t row = 0; row < candidates.size(); ++row)
            if (basis.at(row, col) != 0) p.add_term(candidates[row], basis.at(row, col));
        out.push_back(p);
    }
    return out;
}

namespace {

Q apply_functional(const FunctionalMap& l, const MvPoly& p) {
    Q acc(0);
    for (const auto& [e, c] : p.terms()) {
        auto it = l.find(e);
        if (it == l.end())
            throw contract_error("separation functional undefined on monomial " +
                                 MvPoly::monomial(e, Q(1)).str());
        acc += c * it->second;
    }
    return acc;
}

} // namespace

SeparationResult verify_separation(const SeparationCertificate& cert) {
    SeparationResult res;
    const size_t k = cert.admissible_basis.size();
    res.moment = QMatrix(k, k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i; j < k; ++j) {
            Q v = apply_functional(cert.functional, cert.admissible_basis[i] * cert.admissible_basis[j]);
            res.moment.at(i, j) = res.moment.at(j, i) = v;
        }
    res.functional_value = apply_functional(cert.functional, cert.target);
    res.moment_psd = ldl_psd_check(res.moment);
    if (!res.moment_psd.psd) {
        res.verdict = SeparationVerdict::InconclusivePsd;
    } else if (res.functional_value >= 0) {
        res.verdict = SeparationVerdict::InconclusiveValue;
    } else {
        res.verdict = SeparationVerdict::NotSos;
        res.margin = -res.functional_value;
    }
    return res;
}

namespace {

struct VamosDatum {
    int e1, e2, e3;
    long c;
    long l;
};

// The 22 sextic coefficients and separating-functional values, keyed by
// exponent, in graded-lex-descending order.
const VamosDatum kVamosData[] = {
    {4, 2, 0, 32, 81},    {4, 1, 1, 56, -249},  {4, 0, 2, 28, 323},  {3, 3, 0, 64, 40},
    {3, 2, 1, 168, 24},   {3, 1, 2, 168, -186}, {3, 0, 3, 64, 32},   {2, 4, 0, 32, 81},
    {2, 3, 1, 168, 24},   {2, 2, 2, 280, 233},  {2, 1, 3, 176, -89}, {2, 0, 4, 46, 15},
    {1, 4, 1, 56, -249},  {1, 3, 2, 168, -186}, {1, 2, 3, 176, -89}, {1, 1, 4, 76, 322},
    {1, 0, 5, 12, -412},  {0, 4, 2, 28, 323},   {0, 3, 3, 64, 32},   {0, 2, 4, 46, 15},
    {0, 1, 5, 12, -412},  {0, 0, 6, 2, 1186},
};

std::vector<MvPoly> vamos_basis() {
    auto x = [](size_t i) { return MvPoly::var(i, 3); };
    return {
        x(0) * x(1) * x(2),
        (x(0) + x(1)) * x(0) * x(1),
        (x(0) + x(2)) * x(0) * x(2),
        (x(1) + x(2)) * x(1) * x(2),
        (x(0) + x(1) + x(2)) * x(2) * x(2),
    };
}

} // namespace

QMatrix vamos_expected_moment() {
    const long rows[5][5] = {{233, 48, -275, -275, 144},
                             {48, 242, -178, -178, -84},
                             {-275, -178, 402, 377, -117},
                             {-275, -178, 377, 402, -117},
                             {144, -84, -117, -117, 212}};
    QMatrix m(5, 5);
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) m.at(i, j) = rows[i][j];
    return m;
}

VamosRun vamos_certificate() {
    // Rebuild the ternary sextic from the parameterized Bezoutian.
    MvPoly p = vamos_specialized();
    QVec e{Q(0), Q(0), Q(1), Q(1)};
    QVec u{Q(0), Q(0), Q(0), Q(1)};
    HyperbolicContext ctx(p, e);
    PolyMatrix bez = parameterized_bezoutian(ctx, u);
    std::vector<MvPoly> slice{MvPoly::var(0, 3), MvPoly::var(1, 3), MvPoly::var(2, 3),
                              (MvPoly::var(0, 3) + MvPoly::var(1, 3) + MvPoly::var(2, 3)).scaled(Q(-1))};
    MvPoly sextic = bez.at(0, 0).compose(slice);

    MvPoly expected(3);
    FunctionalMap functional;
    for (const auto& d : kVamosData) {
        Exponents expo{static_cast<std::uint32_t>(d.e1), static_cast<std::uint32_t>(d.e2),
                       static_cast<std::uint32_t>(d.e3)};
        expected.add_term(expo, Q(d.c));
        functional[expo] = Q(d.l);
    }
    if (!(sextic == expected))
        throw std::logic_error("vamos_certificate: recomputed sextic disagrees with the stored "
                               "coefficient vector");

    VamosRun run;
    run.sextic = sextic;
    run.cert = SeparationCertificate{sextic, functional, vamos_basis()};
    run.result = verify_separation(run.cert);
    return run;
}

ObstructionReport icosahedral_obstruction() {
    ObstructionReport rep;
    Graph g = icosahedral_graph();
    auto cliques = maximum_cliques(g);
    const size_t nv = g.nverts(), ne = g.edges().size();
    const size_t dim = nv + ne;

    rep.clique_vectors = QMatrix(cliques.size(), dim);
    std::map<Edge, size_t> edge_index;
    for (size_t j = 0; j < g.edges().size(); ++j) edge_index[g.edges()[j]] = j;
    for (size_t r = 0; r < cliques.size(); ++r) {
        const auto& c = cliques[r];
        for (int v : c) rep.clique_vectors.at(r, v) = Q(2, 9); // 2/(3*omega), omega = 3
        for (size_t a = 0; a < c.size(); ++a)
            for (size_t b = a + 1; b < c.size(); ++b)
                rep.clique_vectors.at(r, nv + edge_index[{c[a], c[b]}]) = Q(1, 9); // 1/(3*C(3,2))
    }

    rep.complement_basis = nullspace(rep.clique_vectors);
    rep.complement_dim = rep.complement_basis.cols();

    QVec diag(dim);
    for (size_t i = 0; i < nv; ++i) diag[i] = Q(-11);
    for (size_t i = nv; i < dim; ++i) diag[i] = Q(4);
    rep.weight_matrix = QMatrix::diagonal(diag);
    rep.trace_value = rep.weight_matrix.trace();

    rep.restricted =
        rep.complement_basis.transpose() * rep.weight_matrix * rep.complement_basis;
    rep.psd = ldl_psd_check(rep.restricted);

    if (cliques.size() != 20) rep.stage_failed = "clique_enumeration";
    else if (rep.complement_dim != 22) rep.stage_failed = "complement_dimension";
    else if (!rep.psd.psd) rep.stage_failed = "restricted_psd";
    else if (rep.trace_value != Q(-12)) rep.stage_failed = "trace_value";
    rep.confirmed = rep.stage_failed.empty();
    return rep;
}

std::vector<MvPoly> monomial_vector(unsigned d, unsigned m) {
    std::vector<Exponents> exps;
    Exponents cur(m, 0);
    enumerate_degree(d, m, cur, 0, [&](const Exponents& e) { exps.push_back(e); });
    std::sort(exps.begin(), exps.end(), GrlexDesc());
    std::vector<MvPoly> out;
    out.reserve(exps.size());
    for (const auto& e : exps) out.push_back(MvPoly::monomial(e, Q(1)));
    return out;
}

RecoveryResult sos_recovery_check(const QMatrix& q, unsigned d, unsigned m) {
    std::vector<MvPoly> md = monomial_vector(d, m);
    const size_t nmono = md.size();
    if (q.rows() != nmono || q.cols() != nmono)
        throw contract_error("sos_recovery_check: gram dimension must be C(m+d-1, d)");
    const size_t big = nmono + 1;

    PolyMatrix f(big, big, m);
    for (size_t i = 0; i < nmono; ++i) {
        f.at(0, i + 1) = md[i];
        f.at(i + 1, 0) = md[i];
    }
    PolyMatrix u(big, big, m);
    for (size_t i = 0; i < nmono; ++i)
        for (size_t j = 0; j < nmono; ++j)
            if (q.at(i, j) != 0) u.at(i + 1, j + 1) = MvPoly::constant(m, q.at(i, j));

    MvPoly lhs = (u * (f * f)).trace();

    MvPoly rhs(m);
    for (size_t i = 0; i < nmono; ++i)
        for (size_t j = 0; j < nmono; ++j)
            if (q.at(i, j) != 0) rhs = rhs + (md[i] * md[j]).scaled(q.at(i, j));

    RecoveryResult res;
    if (lhs == rhs) {
        res.verdict = RecoveryVerdict::IdentityHolds;
    } else {
        res.verdict = RecoveryVerdict::Mismatch;
        res.offending_monomial = first_difference(lhs, rhs);
    }
    return res;
}

MvPoly std_cubic_sos_necessity(const MvPoly& q) {
    auto h = q.is_homogeneous();
    if (!q.is_zero() && (!h.homogeneous || h.degree != 3))
        throw contract_error("std_cubic_sos_necessity: q must be homogeneous cubic");
    const size_t n = q.nvars();
    const size_t m = n + 1; // z is the last variable
    std::vector<MvPoly> images;
    for (size_t i = 0; i < n; ++i) images.push_back(MvPoly::var(i, m));
    MvPoly q_ext = q.compose(images);
    MvPoly z = MvPoly::var(n, m);
    MvPoly norm2(m);
    for (size_t i = 0; i < n; ++i) {
        MvPoly xi = MvPoly::var(i, m);
        norm2 = norm2 + xi * xi;
    }
    return norm2 * norm2 - (z * q_ext).scaled(Q(2)) + z * z * norm2;
}

namespace {

// Exact feasibility of {g_i(t) >= 0 for all i} over one real variable.
bool poly_system_feasible(const std::vector<UvPoly>& gs) {
    // Collect breakpoints: all real roots of the product.
    UvPoly prod = UvPoly::constant(Q(1));
    for (const auto& g : gs) {
        if (g.is_zero()) continue;
        prod = prod * g;
    }
    auto sat_at = [&](const Q& t) {
        for (const auto& g : gs)
            if (g.eval(t) < 0) return false;
        return true;
    };
    if (prod.deg() == 0) return sat_at(Q(0));
    RootIsolation iso = isolate_roots(prod, Q(1, 1024));
    UvPoly sf = prod.square_free_part();

    // Sample one rational point in every open gap between roots.
    QVec samples;
    Q bound = cauchy_bound(prod) + 1;
    samples.push_back(-bound);
    samples.push_back(bound);
    for (size_t i = 0; i + 1 < iso.intervals.size(); ++i) {
        const auto& a = iso.intervals[i];
        const auto& b = iso.intervals[i + 1];
        if (a.hi < b.lo) samples.push_back((a.hi + b.lo) / 2);
    }
    for (const Q& t : samples)
        if (sat_at(t)) return true;

    // Remaining candidates: the roots themselves. Decide each g_i's sign at
    // the root by interval refinement, with an exact gcd fallback when g_i
    // vanishes there too.
    for (const auto& iv : iso.intervals) {
        bool ok = true;
        for (const auto& g : gs) {
            if (g.is_zero()) continue;
            if (iv.lo == iv.hi) {
                if (g.eval(iv.lo) < 0) {
                    ok = false;
                    break;
                }
                continue;
            }
            RootInterval cur = iv;
            bool decided = false;
            for (int round = 0; round < 256 && !decided; ++round) {
                QInterval enc = eval_interval(g, QInterval{cur.lo, cur.hi});
                if (enc.lo >= 0) decided = true;
                else if (enc.hi < 0) {
                    ok = false;
                    decided = true;
                } else {
                    // g may vanish at this root too; then g >= 0 holds with
                    // equality. The interval isolates one root of sf, so a
                    // root of gcd(g, sf) inside it must be this root.
                    UvPoly shared = UvPoly::gcd(g, sf);
                    if (shared.deg() > 0 &&
                        (shared.eval(cur.lo) == 0 ||
                         sturm_count(shared, Bound::at(cur.lo), Bound::at(cur.hi)) > 0)) {
                        decided = true;
                    } else {
                        Q mid = (cur.lo + cur.hi) / 2;
                        Q fm = sf.eval(mid);
                        if (fm == 0) cur = {mid, mid, cur.multiplicity};
                        else if (sign_of(sf.eval(cur.lo)) * sign_of(fm) < 0)
                            cur = {cur.lo, mid, cur.multiplicity};
                        else cur = {mid, cur.hi, cur.multiplicity};
                    }
                }
            }
            if (!decided) throw precision_error("poly_system_feasible: sign undecided at root");
            if (!ok) break;
        }
        if (ok) return true;
    }
    return false;
}

} // namespace

SosFeasibility gram_feasibility_small(const MvPoly& target, const std::vector<MvPoly>& basis) {
    const size_t k = basis.size();
    if (k > 3) throw contract_error("gram_feasibility_small: basis size capped at 3");
    // Unknown symmetric G: variables g_{ij}, i <= j. Coefficient matching
    // against target gives an affine system.
    const size_t nv = k * (k + 1) / 2;
    auto gvar = [&](size_t i, size_t j) { return sym_index(i, j, k); };

    // Rows: one per monomial in the union support of products and target.
    std::map<Exponents, QVec, GrlexDesc> rows; // coefficient row per monomial
    auto row_of = [&](const Exponents& e) -> QVec& {
        auto it = rows.find(e);
        if (it == rows.end()) it = rows.emplace(e, QVec(nv, Q(0))).first;
        return it->second;
    };
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i; j < k; ++j) {
            MvPoly prod = basis[i] * basis[j];
            Q mult = (i == j) ? Q(1) : Q(2);
            for (const auto& [e, c] : prod.terms()) row_of(e)[gvar(i, j)] += mult * c;
        }
    for (const auto& [e, c] : target.terms()) row_of(e); // ensure row exists

    QMatrix a(rows.size(), nv);
    QVec rhs(rows.size());
    size_t r = 0;
    for (const auto& [e, row] : rows) {
        for (size_t c = 0; c < nv; ++c) a.at(r, c) = row[c];
        rhs[r] = target.coeff(e);
        ++r;
    }

    // Solve A g = rhs: particular solution + nullspace.
    QMatrix aug(rows.size(), nv + 1);
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < nv; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, nv) = rhs[i];
    }
    // Gaussian elimination on the augmented system.
    std::vector<long> pivot_row_of_col(nv, -1);
    size_t row = 0;
    for (size_t col = 0; col < nv && row < rows.size(); ++col) {
        size_t piv = row;
        while (piv < rows.size() && aug.at(piv, col) == 0) ++piv;
        if (piv == rows.size()) continue;
        for (size_t j = 0; j <= nv; ++j) std::swap(aug.at(piv, j), aug.at(row, j));
        Q inv = Q(1) / aug.at(row, col);
        for (size_t j = col; j <= nv; ++j) aug.at(row, j) *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == row || aug.at(i, col) == 0) continue;
            Q f = aug.at(i, col);
            for (size_t j = col; j <= nv; ++j) aug.at(i, j) -= f * aug.at(row, j);
        }
        pivot_row_of_col[col] = static_cast<long>(row);
        ++row;
    }
    for (size_t i = row; i < rows.size(); ++i)
        if (aug.at(i, nv) != 0) return SosFeasibility::Infeasible; // no Gram at all

    QVec particular(nv, Q(0));
    std::vector<size_t> free_cols;
    for (size_t col = 0; col < nv; ++col) {
        if (pivot_row_of_col[col] >= 0)
            particular[col] = aug.at(static_cast<size_t>(pivot_row_of_col[col]), nv);
        else free_cols.push_back(col);
    }
    if (free_cols.size() > 1)
        throw contract_error("gram_feasibility_small: Gram family dimension > 1 unsupported");

    auto gram_at = [&](const QVec& g) {
        QMatrix m(k, k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i; j < k; ++j) m.at(i, j) = m.at(j, i) = g[gvar(i, j)];
        return m;
    };

    if (free_cols.empty())
        return ldl_psd_check(gram_at(particular)).psd ? SosFeasibility::Feasible
                                                      : SosFeasibility::Infeasible;

    // One-parameter family G(t) = G0 + t*N: PSD iff all principal minors are
    // nonnegative; each minor is a univariate polynomial in t.
    QVec direction(nv, Q(0));
    direction[free_cols[0]] = 1;
    for (size_t col = 0; col < nv; ++col) {
        long pr = pivot_row_of_col[col];
        if (pr >= 0) direction[col] = -aug.at(static_cast<size_t>(pr), free_cols[0]);
    }
    QMatrix g0 = gram_at(particular), gn = gram_at(direction);

    std::vector<UvPoly> minors;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < k; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        // det(G0 + t N restricted to idx) as a polynomial in t, by expansion.
        const size_t s = idx.size();
        std::function<UvPoly(std::vector<size_t>, std::vector<size_t>)> detrec =
            [&](std::vector<size_t> rsel, std::vector<size_t> csel) -> UvPoly {
            if (rsel.empty()) return UvPoly::constant(Q(1));
            UvPoly acc;
            for (size_t j = 0; j < csel.size(); ++j) {
                UvPoly entry(QVec{g0.at(rsel[0], csel[j]), gn.at(rsel[0], csel[j])});
                if (entry.is_zero()) continue;
                std::vector<size_t> rs(rsel.begin() + 1, rsel.end());
                std::vector<size_t> cs;
                for (size_t t2 = 0; t2 < csel.size(); ++t2)
                    if (t2 != j) cs.push_back(csel[t2]);
                UvPoly term = entry * detrec(rs, cs);
                acc = (j % 2 == 0) ? acc + term : acc - term;
            }
            return acc;
        };
        std::vector<size_t> sel(idx.begin(), idx.end());
        (void)s;
        minors.push_back(detrec(sel, sel));
    }
    return poly_system_feasible(minors) ? SosFeasibility::Feasible : SosFeasibility::Infeasible;
}

} // namespace hypercert
