#include "hypercert/hyperbolic.hpp"

#include "hypercert/errors.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

namespace hypercert {

HyperbolicContext::HyperbolicContext(MvPoly poly, QVec direction)
    : p(std::move(poly)), e(std::move(direction)) {
    if (e.size() != p.nvars()) throw contract_error("HyperbolicContext: e dimension != nvars");
    auto h = p.is_homogeneous();
    if (!h.homogeneous) throw contract_error("HyperbolicContext: p is not homogeneous");
    d = h.degree;
    p_at_e = p.eval(e);
    if (p_at_e <= 0) throw contract_error("HyperbolicContext: requires p(e) > 0");
}

UvPoly line_poly(const HyperbolicContext& ctx, const QVec& x) {
    return ctx.p.restrict_line(x, ctx.e);
}

UvPoly eigen_poly(const HyperbolicContext& ctx, const QVec& x) {
    QVec neg(x.size());
    for (size_t i = 0; i < x.size(); ++i) neg[i] = -x[i];
    return ctx.p.restrict_line(neg, ctx.e);
}

namespace {

// Coefficients of p(x + t e) in t as polynomials in x: t^k gets D_e^k p / k!.
std::vector<MvPoly> taylor_in_t(const MvPoly& p, const QVec& e, int top_degree) {
    std::vector<MvPoly> coeffs;
    coeffs.reserve(top_degree + 1);
    MvPoly cur = p;
    Q factorial(1);
    for (int k = 0; k <= top_degree; ++k) {
        if (k > 0) {
            cur = cur.directional_derivative(e);
            factorial *= k;
        }
        coeffs.push_back(cur.scaled(Q(1) / factorial));
    }
    return coeffs;
}

} // namespace

PolyMatrix parameterized_bezoutian(const HyperbolicContext& ctx, const QVec& u) {
    if (u.size() != ctx.nvars()) throw contract_error("parameterized_bezoutian: u dimension");
    const int d = ctx.d;
    const size_t n = ctx.nvars();
    std::vector<MvPoly> a = taylor_in_t(ctx.p, ctx.e, d);
    std::vector<MvPoly> b = taylor_in_t(ctx.p.directional_derivative(u), ctx.e, d - 1);
    b.resize(d + 1, MvPoly(n));
    auto f = [&](int p_, int q_) { return a[p_] * b[q_] - b[p_] * a[q_]; };
    PolyMatrix out(d, d, n);
    for (int i = 0; i < d; ++i) out.at(i, 0) = f(i + 1, 0);
    for (int q = 1; q < d; ++q)
        for (int i = 0; i < d; ++i) {
            MvPoly v = f(i + 1, q);
            if (i + 1 < d) v = v + out.at(i + 1, q - 1);
            out.at(i, q) = v;
        }
    return out;
}

PolyMatrix parameterized_hermite(const HyperbolicContext& ctx, const QVec& u) {
    if (u.size() != ctx.nvars()) throw contract_error("parameterized_hermite: u dimension");
    const int d = ctx.d;
    const size_t n = ctx.nvars();
    // Normalize so p_x(t) is monic; the Hankel entries of D_u p_x / p_x are
    // invariant under this scaling and become polynomials in x.
    MvPoly ptilde = ctx.p.scaled(Q(1) / ctx.p_at_e);
    std::vector<MvPoly> a = taylor_in_t(ptilde, ctx.e, d);
    std::vector<MvPoly> b = taylor_in_t(ptilde.directional_derivative(u), ctx.e, d - 1);
    b.resize(d + 1, MvPoly(n));
    std::vector<MvPoly> h(2 * d, MvPoly(n)); // h[k] = h_k, 1-indexed
    for (int k = 1; k <= 2 * d - 1; ++k) {
        MvPoly acc = (d - k >= 0) ? b[d - k] : MvPoly(n);
        for (int j = 1; j < k; ++j) {
            int idx = d - k + j;
            if (idx >= 0) acc = acc - a[idx] * h[j];
        }
        h[k] = acc; // a[d] = 1
    }
    PolyMatrix out(d, d, n);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out.at(i, j) = h[i + j + 1];
    return out;
}

QMatrix hermite_at(const HyperbolicContext& ctx, const QVec& x, const QVec& u) {
    UvPoly px = line_poly(ctx, x);
    UvPoly dpx = ctx.p.directional_derivative(u).restrict_line(x, ctx.e);
    return hankel_matrix(dpx, px, ctx.d);
}

QMatrix bezout_at(const HyperbolicContext& ctx, const QVec& x, const QVec& u) {
    UvPoly px = line_poly(ctx, x);
    UvPoly dpx = ctx.p.directional_derivative(u).restrict_line(x, ctx.e);
    return bezout_matrix(px, dpx, ctx.d);
}

RootIsolation hyperbolic_eigenvalues(const HyperbolicContext& ctx, const QVec& x, const Q& width) {
    UvPoly ep = eigen_poly(ctx, x);
    if (!all_roots_real(ep))
        throw not_hyperbolic_error("polynomial is not real-rooted along this line", x);
    return isolate_roots(ep, width);
}

LineCheck check_hyperbolic_on_line(const HyperbolicContext& ctx, const QVec& x) {
    UvPoly px = line_poly(ctx, x);
    if (all_roots_real(px)) return {true, {}};
    return {false, x};
}

QVec sample_point(std::uint64_t seed, long trial, size_t n, const QVec& e) {
    QVec x(n, Q(0));
    if (trial < static_cast<long>(n)) {
        x[trial] = 1;
        return x;
    }
    if (trial < static_cast<long>(3 * n)) {
        size_t i = (trial - n) % n;
        bool plus = trial < static_cast<long>(2 * n);
        x = e;
        x[i] += plus ? Q(1) : Q(-1);
        return x;
    }
    std::mt19937_64 rng(mix64(seed ^ mix64(static_cast<std::uint64_t>(trial))));
    std::uniform_int_distribution<long> num(-100, 100);
    std::uniform_int_distribution<long> den(1, 100);
    for (size_t i = 0; i < n; ++i) {
        x[i] = Q(num(rng), den(rng));
        x[i].canonicalize();
    }
    return x;
}

namespace {

TrialRecord run_trial(const HyperbolicContext& ctx, std::uint64_t seed, long trial,
                      const HyperbolicityOptions& opts) {
    TrialRecord rec;
    rec.index = trial;
    QVec x = sample_point(seed, trial, ctx.nvars(), ctx.e);
    if (opts.complement_index) x[*opts.complement_index] = 0;
    rec.x = x;
    LineCheck lc = check_hyperbolic_on_line(ctx, x);
    if (!lc.real_rooted) {
        rec.ok = false;
        rec.failure = "non_real_roots";
        return rec;
    }
    PsdCertificate psd = ldl_psd_check(hermite_at(ctx, x, ctx.e));
    if (!psd.psd) {
        rec.ok = false;
        rec.failure = "hermite_not_psd";
    }
    return rec;
}

} // namespace

HyperbolicityReport hyperbolicity_test(const HyperbolicContext& ctx, long trials,
                                       std::uint64_t seed, const HyperbolicityOptions& opts) {
    if (trials < 1) throw contract_error("hyperbolicity_test: trials must be >= 1");
    if (opts.complement_index) {
        if (*opts.complement_index >= ctx.nvars() || ctx.e[*opts.complement_index] == 0)
            throw contract_error("hyperbolicity_test: complement index must have e_i != 0");
    }
    HyperbolicityReport report;
    report.trials = trials;
    const int jobs = std::max(1, opts.jobs);

    std::vector<TrialRecord> records(trials);
    if (jobs == 1) {
        for (long t = 0; t < trials; ++t) records[t] = run_trial(ctx, seed, t, opts);
    } else {
        std::vector<std::thread> pool;
        std::atomic<long> next{0};
        for (int j = 0; j < jobs; ++j) {
            pool.emplace_back([&]() {
                for (long t = next.fetch_add(1); t < trials; t = next.fetch_add(1))
                    records[t] = run_trial(ctx, seed, t, opts);
            });
        }
        for (auto& th : pool) th.join();
    }

    report.passed = true;
    for (const auto& rec : records) {
        if (!rec.ok) {
            report.passed = false;
            report.witness = rec.x;
            report.witness_trial = rec.index;
            report.failure = rec.failure;
            break;
        }
    }
    if (opts.keep_records) report.records = std::move(records);
    return report;
}

std::string membership_str(Membership m) {
    switch (m) {
        case Membership::Inside: return "inside";
        case Membership::Boundary: return "boundary";
        case Membership::Outside: return "outside";
    }
    return "?";
}

MembershipResult cone_membership(const HyperbolicContext& ctx, const QVec& u) {
    if (u.size() != ctx.nvars()) throw contract_error("cone_membership: u dimension");
    UvPoly ep = eigen_poly(ctx, u); // roots are the eigenvalues of u
    if (!all_roots_real(ep))
        throw not_hyperbolic_error("cone_membership: non-real eigenvalues; context not hyperbolic",
                                   u);
    MembershipResult res;
    int zero_mult = 0;
    while (zero_mult <= ep.deg() && ep.coeff(zero_mult) == 0) ++zero_mult;
    res.zero_multiplicity = zero_mult;
    long nonpos = sturm_count(ep, Bound::neg_inf(), Bound::at(Q(0)));
    long neg = nonpos - (zero_mult > 0 ? 1 : 0);
    if (neg > 0) {
        res.verdict = Membership::Outside;
        // Certify with an isolating interval strictly below zero.
        Q w(1);
        for (int round = 0; round < 128; ++round) {
            RootIsolation iso = isolate_roots(ep, w);
            for (const auto& iv : iso.intervals) {
                if (iv.hi < 0) {
                    res.negative_witness = iv;
                    return res;
                }
            }
            w /= 4;
        }
        throw precision_error("cone_membership: failed to certify a negative eigenvalue");
    }
    res.verdict = zero_mult > 0 ? Membership::Boundary : Membership::Inside;
    return res;
}

namespace {

struct SquareFreeData {
    UvPoly f;               // monic square-free part
    UvPoly cofactor;        // g with p_x = g * f (up to the leading constant)
    std::vector<UvPoly> factors_by_mult; // factor owning each isolated root
};

// Splits p_x into its square-free part and cofactor, and maps multiplicities
// back to their Yun factors.
SquareFreeData square_free_data(const UvPoly& px) {
    SquareFreeData data;
    auto factors = px.square_free_decomposition();
    UvPoly f = UvPoly::constant(Q(1));
    int max_mult = 0;
    for (const auto& fac : factors) {
        f = f * fac.factor;
        max_mult = std::max(max_mult, fac.multiplicity);
    }
    data.f = f;
    data.cofactor = UvPoly::div_exact(px, f);
    data.factors_by_mult.assign(max_mult + 1, UvPoly());
    for (const auto& fac : factors) data.factors_by_mult[fac.multiplicity] = fac.factor;
    return data;
}

// One bisection step keeping the (single) root of `factor` inside.
RootInterval bisect_once(const RootInterval& iv, const UvPoly& factor) {
    if (iv.lo == iv.hi) return iv;
    Q mid = (iv.lo + iv.hi) / 2;
    Q fm = factor.eval(mid);
    if (fm == 0) return {mid, mid, iv.multiplicity};
    if (sign_of(factor.eval(iv.lo)) * sign_of(fm) < 0) return {iv.lo, mid, iv.multiplicity};
    return {mid, iv.hi, iv.multiplicity};
}

QInterval residue_enclosure(const RootInterval& iv, const UvPoly& num, const UvPoly& fprime) {
    if (iv.lo == iv.hi) {
        Q v = num.eval(iv.lo) / fprime.eval(iv.lo);
        return QInterval::point(v);
    }
    QInterval t{iv.lo, iv.hi};
    QInterval den = eval_interval(fprime, t);
    if (den.contains_zero()) throw precision_error("residue enclosure: derivative sign ambiguous");
    return eval_interval(num, t) / den;
}

} // namespace

Residues canonical_residues(const HyperbolicContext& ctx, const QVec& x, const QVec& u,
                            const Q& width) {
    if (x.size() != ctx.nvars() || u.size() != ctx.nvars())
        throw contract_error("canonical_residues: dimension mismatch");
    UvPoly px = line_poly(ctx, x); // roots are -lambda_i(x)
    if (!all_roots_real(px))
        throw not_hyperbolic_error("canonical_residues: non-real roots along line", x);
    SquareFreeData data = square_free_data(px);
    UvPoly dpx = ctx.p.directional_derivative(u).restrict_line(x, ctx.e);
    UvPoly num;
    {
        UvPoly rem;
        UvPoly::divrem(dpx, data.cofactor, &num, &rem);
        if (!rem.is_zero())
            throw not_hyperbolic_error(
                "canonical_residues: D_u p_x / p_x has a higher-order pole; "
                "partial-fraction structure violated",
                x);
    }
    UvPoly fprime = data.f.derivative();

    // Isolate generously below the requested width so that the residue
    // quotient enclosures converge with few retries.
    Q start_width = width / 65536;
    RootIsolation iso = isolate_roots(px, start_width);

    Residues out;
    const size_t k = iso.intervals.size();
    out.eigenvalues.resize(k);
    out.multiplicities.resize(k);
    out.values.resize(k);
    for (size_t idx = 0; idx < k; ++idx) {
        // Intervals are sorted by increasing root of p_x; the eigenvalues are
        // the negated roots, so forward order is descending in lambda.
        const RootInterval& src = iso.intervals[idx];
        RootInterval iv = src;
        const UvPoly& owner = data.factors_by_mult[iv.multiplicity];
        QInterval enc;
        int attempts = 0;
        for (;; ++attempts) {
            bool ok = true;
            try {
                enc = residue_enclosure(iv, num, fprime);
            } catch (const precision_error&) {
                ok = false;
            }
            if (ok && enc.width() <= width) break;
            if (attempts >= 8)
                throw precision_error("canonical_residues: enclosure did not converge; "
                                      "request a larger width or refine externally");
            for (int step = 0; step < 8 && iv.lo != iv.hi; ++step) iv = bisect_once(iv, owner);
        }
        out.eigenvalues[idx] = QInterval{-iv.hi, -iv.lo};
        out.multiplicities[idx] = iv.multiplicity;
        out.values[idx] = enc;
    }
    return out;
}

CanonicalFunctionals canonical_functionals(const HyperbolicContext& ctx, const QVec& x,
                                           const Q& width) {
    const size_t n = ctx.nvars();
    // Refine below the requested width so assembled identities (sums over at
    // most d residues) stay within `width` of their exact values.
    Q inner = width / (4 * (ctx.d + 1));
    CanonicalFunctionals out;
    out.x = x;
    out.precision = width;
    bool first = true;
    for (size_t j = 0; j < n; ++j) {
        QVec u(n, Q(0));
        u[j] = 1;
        Residues r = canonical_residues(ctx, x, u, inner);
        if (first) {
            const size_t k = r.values.size();
            out.functionals = QMatrix(k, n);
            out.eigenvalues.resize(k);
            out.multiplicities = r.multiplicities;
            for (size_t i = 0; i < k; ++i) out.eigenvalues[i] = r.eigenvalues[i].mid();
            first = false;
        }
        for (size_t i = 0; i < r.values.size(); ++i) out.functionals.at(i, j) = r.values[i].mid();
    }
    return out;
}

Q phi_eval(const HyperbolicContext& ctx, const QVec& x, const QVec& y, const QVec& u) {
    if (y.size() != static_cast<size_t>(ctx.d)) throw contract_error("phi_eval: y must have length d");
    QMatrix h = hermite_at(ctx, x, u);
    Q acc(0);
    for (size_t i = 0; i < h.rows(); ++i) {
        if (y[i] == 0) continue;
        for (size_t j = 0; j < h.cols(); ++j) acc += y[i] * h.at(i, j) * y[j];
    }
    return acc;
}

QVec phi_functional(const HyperbolicContext& ctx, const QVec& x, const QVec& y) {
    const size_t n = ctx.nvars();
    QVec out(n);
    for (size_t j = 0; j < n; ++j) {
        QVec u(n, Q(0));
        u[j] = 1;
        out[j] = phi_eval(ctx, x, y, u);
    }
    return out;
}

DualSampleReport dual_cone_sample_check(const HyperbolicContext& ctx, long samples,
                                        std::uint64_t seed, const DualOracle& oracle) {
    DualSampleReport report;
    report.samples = samples;
    for (long t = 0; t < samples; ++t) {
        QVec x = sample_point(seed, 2 * t, ctx.nvars(), ctx.e);
        QVec y = sample_point(mix64(seed), 2 * t + 1, ctx.d, QVec(ctx.d, Q(1)));
        QVec xi = phi_functional(ctx, x, y);
        if (!oracle.contains(xi)) {
            report.all_in_dual = false;
            report.violation_xy = std::make_pair(x, y);
            report.violation_functional = xi;
            return report;
        }
    }
    return report;
}

namespace {

// Eigenvalue enclosures (descending), expanded by multiplicity.
std::vector<QInterval> eigen_enclosures(const UvPoly& ep, const Q& width) {
    RootIsolation iso = isolate_roots(ep, width);
    std::vector<QInterval> out;
    for (size_t i = iso.intervals.size(); i-- > 0;) {
        const auto& iv = iso.intervals[i];
        for (int m = 0; m < iv.multiplicity; ++m) out.push_back({iv.lo, iv.hi});
    }
    return out;
}

} // namespace

InterlaceResult check_interlaces(const HyperbolicContext& ctx, const MvPoly& q, long samples,
                                 const Q& width, std::uint64_t seed) {
    auto hq = q.is_homogeneous();
    if (!hq.homogeneous || hq.degree != ctx.d - 1)
        throw contract_error("check_interlaces: q must be homogeneous of degree d-1");
    InterlaceResult res;
    res.samples = samples;
    if (q.eval(ctx.e) <= 0) {
        // An interlacer must itself be hyperbolic w.r.t. e, so q(e) > 0.
        res.consistent = false;
        res.violation_x = ctx.e;
        res.detail = "q_not_positive_at_e";
        return res;
    }
    for (long t = 0; t < samples; ++t) {
        QVec x = sample_point(seed, t, ctx.nvars(), ctx.e);
        QVec neg(x.size());
        for (size_t i = 0; i < x.size(); ++i) neg[i] = -x[i];
        UvPoly pp = eigen_poly(ctx, x);
        UvPoly qq = q.restrict_line(neg, ctx.e);
        if (!all_roots_real(pp) || !all_roots_real(qq)) {
            res.consistent = false;
            res.violation_x = x;
            res.detail = "non_real_roots";
            return res;
        }
        auto lp = eigen_enclosures(pp, width);
        auto lq = eigen_enclosures(qq, width);
        if (lp.size() != static_cast<size_t>(ctx.d) || lq.size() != static_cast<size_t>(ctx.d - 1)) {
            res.consistent = false;
            res.violation_x = x;
            res.detail = "eigenvalue_count";
            return res;
        }
        for (int i = 0; i + 1 < ctx.d; ++i) {
            // Need lp[i] >= lq[i] >= lp[i+1]; enclosure overlap is consistent.
            if (lp[i].hi < lq[i].lo || lq[i].hi < lp[i + 1].lo) {
                res.consistent = false;
                res.violation_x = x;
                res.detail = "interleaving_violated";
                return res;
            }
        }
    }
    return res;
}

std::optional<std::pair<QVec, QVec>> phi_negativity_witness(const HyperbolicContext& ctx,
                                                            const QVec& u, int max_attempts) {
    UvPoly ep = eigen_poly(ctx, u);
    if (!all_roots_real(ep)) return std::nullopt; // different failure mode
    Q width(1, 16);
    for (int attempt = 0; attempt < max_attempts; ++attempt, width /= 4) {
        RootIsolation iso = isolate_roots(ep, width);
        // Approximate distinct eigenvalues; nodes of q_y are their negatives.
        std::vector<Q> lambda;
        int neg_index = -1;
        for (const auto& iv : iso.intervals) {
            Q mid = (iv.lo + iv.hi) / 2;
            if (iv.hi < 0 && neg_index < 0) neg_index = static_cast<int>(lambda.size());
            lambda.push_back(mid);
        }
        if (neg_index < 0) continue; // no certified-negative interval yet; refine
        // Lagrange polynomial through the nodes -lambda_j, 1 at j = neg_index.
        UvPoly qy = UvPoly::constant(Q(1));
        Q denom(1);
        for (size_t j = 0; j < lambda.size(); ++j) {
            if (static_cast<int>(j) == neg_index) continue;
            qy = qy * UvPoly(QVec{lambda[j], Q(1)}); // (t + lambda_j)
            denom *= (-lambda[neg_index]) - (-lambda[j]);
        }
        qy = qy.scaled(Q(1) / denom);
        QVec y(ctx.d, Q(0));
        for (int i = 0; i <= qy.deg() && i < ctx.d; ++i) y[i] = qy.coeff(i);
        if (phi_eval(ctx, u, y, u) < 0) return std::make_pair(u, y);
    }
    return std::nullopt;
}

} // namespace hypercert
