#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hypercert/certificates.hpp"
#include "hypercert/errors.hpp"
#include "hypercert/json_io.hpp"

#include "test_util.hpp"

using namespace hypercert;
using hypercert::testing::RationalGen;
using hypercert::testing::mv;

TEST_CASE("verify_gram: identity gram, perturbed gram, missing PSD") {
    // x1^2 + x2^2 with basis (x1, x2) and the identity.
    GramCertificate cert;
    cert.target = mv(2, {{{2, 0}, 1}, {{0, 2}, 1}});
    cert.basis = {MvPoly::var(0, 2), MvPoly::var(1, 2)};
    cert.gram = QMatrix::identity(2);
    CHECK(verify_gram(cert).verdict == GramVerdict::ValidSos);

    // Perturb one symmetric pair: the identity fails with a named monomial.
    GramCertificate bad = cert;
    bad.gram.at(0, 1) = bad.gram.at(1, 0) = Q(1, 3);
    auto res = verify_gram(bad);
    CHECK(res.verdict == GramVerdict::IdentityFail);
    CHECK(res.offending_monomial == Exponents{1, 1});

    // Correct identity but indefinite gram.
    GramCertificate indef;
    indef.target = mv(2, {{{1, 1}, 2}});
    indef.basis = {MvPoly::var(0, 2), MvPoly::var(1, 2)};
    indef.gram = QMatrix(2, 2);
    indef.gram.at(0, 1) = indef.gram.at(1, 0) = 1;
    auto res2 = verify_gram(indef);
    CHECK(res2.verdict == GramVerdict::GramNotPsd);
    CHECK(res2.psd.witness_value < 0);
}

TEST_CASE("verify_gram: d = 2 Schur-complement completion path") {
    // For a hyperbolic quadratic, H = [[c0, c1(x)], [c1(x), c2(x)]] is PSD on
    // the cone, and c2 - c1^2/c0 is a nonnegative quadratic: diagonalize it
    // over Q and verify the resulting Gram certificate.
    MvPoly p = mv(3, {{{2, 0, 0}, 1}, {{0, 2, 0}, -1}, {{0, 0, 2}, -1}}); // Lorentz form
    HyperbolicContext ctx(p, {Q(1), Q(0), Q(0)});
    QVec u{Q(2), Q(1), Q(0)}; // inside the light cone
    PolyMatrix h = parameterized_hermite(ctx, u);
    MvPoly c0 = h.at(0, 0), c1 = h.at(0, 1), c2 = h.at(1, 1);
    REQUIRE(c0.degree() == 0);
    Q c0v = c0.terms().begin()->second;
    MvPoly schur = c2.scaled(c0v) - c1 * c1; // c0 (c2 - c1^2/c0)

    // Diagonalize the quadratic form by rational completion of squares.
    QMatrix form(3, 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            Exponents e(3, 0);
            e[i] += 1;
            e[j] += 1;
            Q c = schur.coeff(e);
            form.at(i, j) = (i == j) ? c : c / 2;
        }
    auto ldl = ldl_psd_check(form);
    REQUIRE(ldl.psd);
    // Gram certificate: basis = variables in pivot order, gram = permuted form.
    GramCertificate cert;
    cert.target = schur;
    cert.basis = {MvPoly::var(0, 3), MvPoly::var(1, 3), MvPoly::var(2, 3)};
    cert.gram = form;
    CHECK(verify_gram(cert).verdict == GramVerdict::ValidSos);
}

TEST_CASE("property: random Gram certificates round-trip") {
    RationalGen gen(61);
    for (int rep = 0; rep < 15; ++rep) {
        std::vector<MvPoly> basis{MvPoly::var(0, 2), MvPoly::var(1, 2),
                                  MvPoly::var(0, 2) * MvPoly::var(1, 2)};
        QMatrix g = gen.psd_matrix(3);
        MvPoly target(2);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j)
                target = target + (basis[i] * basis[j]).scaled(g.at(i, j));
        GramCertificate cert{target, basis, g};
        CHECK(verify_gram(cert).verdict == GramVerdict::ValidSos);
    }
}

TEST_CASE("admissible_square_basis: the Vamos sextic support") {
    VamosRun run = vamos_certificate();
    const MvPoly& q = run.sextic;

    // Newton polytope extreme points (4,2,0), (2,4,0), (4,0,2), (0,4,2), (0,0,6):
    // all support points must lie in their hull; the five listed are extreme.
    std::vector<QVec> vanish{{Q(1), Q(-1), Q(0)}, {Q(1), Q(0), Q(-1)}, {Q(0), Q(1), Q(-1)}};
    auto basis_unconstrained = admissible_square_basis(q, {});
    CHECK(basis_unconstrained.size() == 8);
    std::set<Exponents> support;
    for (const auto& b : basis_unconstrained) {
        REQUIRE(b.nterms() == 1);
        support.insert(b.terms().begin()->first);
    }
    std::set<Exponents> expect{{2, 1, 0}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2},
                               {1, 1, 1}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};
    CHECK(support == expect);

    auto basis = admissible_square_basis(q, vanish);
    CHECK(basis.size() == 5);
    for (const auto& b : basis)
        for (const auto& pt : vanish) CHECK(b.eval(pt) == 0);

    // The paper's m(x) spans the same subspace: each m_i must be a combination
    // of the computed basis (check by stacking coordinates and comparing rank).
    std::vector<Exponents> coords(expect.begin(), expect.end());
    auto coordinates = [&](const MvPoly& p) {
        QVec row(coords.size(), Q(0));
        for (size_t c = 0; c < coords.size(); ++c) row[c] = p.coeff(coords[c]);
        return row;
    };
    QMatrix stacked(basis.size() + run.cert.admissible_basis.size(), coords.size());
    for (size_t r = 0; r < basis.size(); ++r) {
        QVec row = coordinates(basis[r]);
        for (size_t c = 0; c < coords.size(); ++c) stacked.at(r, c) = row[c];
    }
    for (size_t r = 0; r < run.cert.admissible_basis.size(); ++r) {
        QVec row = coordinates(run.cert.admissible_basis[r]);
        for (size_t c = 0; c < coords.size(); ++c) stacked.at(basis.size() + r, c) = row[c];
    }
    CHECK(stacked.rank() == 5);

    // More than three effective variables is unsupported.
    MvPoly big = mv(4, {{{2, 0, 0, 0}, 1}, {{0, 2, 0, 0}, 1}, {{0, 0, 2, 0}, 1}, {{0, 0, 0, 2}, 1}});
    CHECK_THROWS_AS(admissible_square_basis(big, {}), contract_error);
}

TEST_CASE("vamos_certificate: full reproduction of the paper data") {
    VamosRun run = vamos_certificate();

    // Spot-check coefficients: x1^4 x2^2 is 32, x3^6 is 2.
    CHECK(run.sextic.coeff({4, 2, 0}) == 32);
    CHECK(run.sextic.coeff({0, 0, 6}) == 2);
    CHECK(run.sextic.nterms() == 22);

    // The sextic vanishes at the three separation points.
    CHECK(run.sextic.eval({Q(1), Q(-1), Q(0)}) == 0);
    CHECK(run.sextic.eval({Q(1), Q(0), Q(-1)}) == 0);
    CHECK(run.sextic.eval({Q(0), Q(1), Q(-1)}) == 0);

    // Verdict: not a sum of squares, margin 144.
    CHECK(run.result.verdict == SeparationVerdict::NotSos);
    CHECK(run.result.functional_value == Q(-144));
    CHECK(run.result.margin == 144);

    // The moment matrix equals the expected 5x5 and is PSD.
    CHECK(run.result.moment == vamos_expected_moment());
    CHECK(run.result.moment_psd.psd);
}

TEST_CASE("verify_separation: inconclusive paths") {
    VamosRun run = vamos_certificate();

    // Point evaluation at a positive point: all moment matrices PSD but the
    // functional value is positive.
    SeparationCertificate eval_cert = run.cert;
    QVec pt{Q(1), Q(1), Q(1)};
    for (auto& [e, v] : eval_cert.functional) v = MvPoly::monomial(e, Q(1)).eval(pt);
    auto res = verify_separation(eval_cert);
    CHECK(res.verdict == SeparationVerdict::InconclusiveValue);
    CHECK(res.functional_value > 0);

    // Perturbing the functional breaks moment PSD-ness.
    SeparationCertificate broken = run.cert;
    broken.functional[Exponents{2, 2, 2}] = Q(-100000);
    auto res2 = verify_separation(broken);
    CHECK(res2.verdict == SeparationVerdict::InconclusivePsd);

    // Missing support is a contract error.
    SeparationCertificate missing = run.cert;
    missing.functional.erase(Exponents{2, 2, 2});
    CHECK_THROWS_AS(verify_separation(missing), contract_error);
}

TEST_CASE("verify_separation soundness: brute-force confirmation on small instances") {
    // target = x^4 - 3 x^2 y^2 + y^4 over basis (x^2, y^2, xy): the Gram
    // family is one-dimensional and infeasible, so the target is not SOS over
    // this basis; the separating functional confirms it.
    MvPoly x = MvPoly::var(0, 2), y = MvPoly::var(1, 2);
    MvPoly target = x.pow(4) + y.pow(4) - (x * x * y * y).scaled(Q(3));
    std::vector<MvPoly> basis{x * x, y * y, x * y};
    CHECK(gram_feasibility_small(target, basis) == SosFeasibility::Infeasible);

    SeparationCertificate cert;
    cert.target = target;
    cert.admissible_basis = basis;
    cert.functional[Exponents{4, 0}] = 1;
    cert.functional[Exponents{0, 4}] = 1;
    cert.functional[Exponents{2, 2}] = 1;
    cert.functional[Exponents{3, 1}] = 0;
    cert.functional[Exponents{1, 3}] = 0;
    auto res = verify_separation(cert);
    CHECK(res.verdict == SeparationVerdict::NotSos);
    CHECK(res.functional_value == Q(-1));

    // A feasible variant: x^4 + 2 x^2 y^2 + y^4 = (x^2 + y^2)^2.
    MvPoly sos_target = x.pow(4) + y.pow(4) + (x * x * y * y).scaled(Q(2));
    CHECK(gram_feasibility_small(sos_target, basis) == SosFeasibility::Feasible);
}

TEST_CASE("icosahedral obstruction: full reproduction") {
    ObstructionReport rep = icosahedral_obstruction();
    CHECK(rep.confirmed);
    CHECK(rep.stage_failed.empty());
    CHECK(rep.clique_vectors.rows() == 20);
    CHECK(rep.clique_vectors.cols() == 42);
    CHECK(rep.complement_dim == 22);
    CHECK(rep.psd.psd);
    CHECK(rep.trace_value == Q(-12));

    // Clique vectors annihilate the basis exactly.
    QMatrix zero = rep.clique_vectors * rep.complement_basis;
    for (size_t i = 0; i < zero.rows(); ++i)
        for (size_t j = 0; j < zero.cols(); ++j) CHECK(zero.at(i, j) == 0);

    // Entries: 2/9 on vertices, 1/9 on edges, three of each per row.
    for (size_t r = 0; r < 20; ++r) {
        int vcount = 0, ecount = 0;
        for (size_t c = 0; c < 12; ++c)
            if (rep.clique_vectors.at(r, c) == Q(2, 9)) ++vcount;
        for (size_t c = 12; c < 42; ++c)
            if (rep.clique_vectors.at(r, c) == Q(1, 9)) ++ecount;
        CHECK(vcount == 3);
        CHECK(ecount == 3);
    }
}

TEST_CASE("icosahedral obstruction: basis independence of the PSD verdict") {
    ObstructionReport rep = icosahedral_obstruction();
    // Any other basis of the same nullspace is congruent, so V^T D V stays
    // PSD. Change basis with a random unimodular-ish transform.
    RationalGen gen(62);
    QMatrix v2 = rep.complement_basis;
    QMatrix mix(22, 22);
    for (size_t i = 0; i < 22; ++i) {
        mix.at(i, i) = 1;
        mix.at(i, (i + 7) % 22) = mix.at(i, (i + 7) % 22) + gen.rational(3, 2);
    }
    // Guard against accidental singularity.
    REQUIRE(mix.det() != 0);
    v2 = v2 * mix;
    QMatrix restricted2 = v2.transpose() * rep.weight_matrix * v2;
    CHECK(ldl_psd_check(restricted2).psd);
}

TEST_CASE("icosahedral obstruction: trace identity on unit-diagonal matrices") {
    ObstructionReport rep = icosahedral_obstruction();
    RationalGen gen(63);
    for (int s = 0; s < 20; ++s) {
        // Random unit-diagonal PSD sample: normalize a Gram matrix.
        QMatrix g = gen.psd_matrix(42, 45);
        for (size_t i = 0; i < 42; ++i)
            if (g.at(i, i) == 0) g.at(i, i) = 1; // keep diagonal positive
        QMatrix x(42, 42);
        for (size_t i = 0; i < 42; ++i)
            for (size_t j = 0; j < 42; ++j) {
                // X_ij = G_ij / sqrt(G_ii G_jj) is not rational; use the
                // diagonal rescaling X = D G D with D = diag(1/G_ii)^{1/2}
                // replaced by the rational congruence that fixes the diagonal:
                // X_ij = G_ij / (G_ii when i == j else 1), then overwrite the
                // diagonal with exact ones via congruence is not exact; so
                // instead just test the trace identity on matrices with unit
                // diagonal imposed directly.
                x.at(i, j) = (i == j) ? Q(1) : g.at(i, j);
            }
        Q tr(0);
        for (size_t i = 0; i < 42; ++i) tr += rep.weight_matrix.at(i, i) * x.at(i, i);
        CHECK(tr == Q(-12));
    }
}

TEST_CASE("sos_recovery_check: identity gram, expanded square, perturbation") {
    // (m, d) = (2, 1), Q = I: x1^2 + x2^2.
    CHECK(sos_recovery_check(QMatrix::identity(2), 1, 2).verdict == RecoveryVerdict::IdentityHolds);

    // (m, d) = (2, 2): gram of (x1^2 + x2^2)^2 over (x1^2, x1 x2, x2^2).
    QMatrix g(3, 3);
    g.at(0, 0) = 1;
    g.at(1, 1) = 2;
    g.at(2, 2) = 1;
    g.at(0, 2) = g.at(2, 0) = 0;
    CHECK(sos_recovery_check(g, 2, 2).verdict == RecoveryVerdict::IdentityHolds);

    // Any symmetric Q satisfies the identity; the check is about the chain of
    // block constructions, so a dimension mismatch must throw.
    CHECK_THROWS_AS(sos_recovery_check(QMatrix::identity(4), 2, 2), contract_error);
}

TEST_CASE("sos_recovery_check: random PSD grams for the acceptance sizes") {
    RationalGen gen(64);
    for (auto [m, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 2}}) {
        size_t dim = monomial_vector(d, m).size();
        for (int rep = 0; rep < 5; ++rep) {
            QMatrix q = gen.psd_matrix(dim);
            CHECK(sos_recovery_check(q, d, m).verdict == RecoveryVerdict::IdentityHolds);
        }
    }
}

TEST_CASE("std_cubic_sos_necessity: explicit forms") {
    // q = 0: |x|^4 + z^2 |x|^2.
    MvPoly r0 = std_cubic_sos_necessity(MvPoly(2));
    MvPoly x1 = MvPoly::var(0, 3), x2 = MvPoly::var(1, 3), z = MvPoly::var(2, 3);
    MvPoly n2 = x1 * x1 + x2 * x2;
    CHECK(r0 == n2 * n2 + z * z * n2);

    // q = x1^3 (n = 1): x1^4 - 2 z x1^3 + z^2 x1^2 = x1^2 (x1 - z)^2.
    MvPoly r1 = std_cubic_sos_necessity(mv(1, {{{3}, 1}}));
    MvPoly y1 = MvPoly::var(0, 2), zz = MvPoly::var(1, 2);
    CHECK(r1 == y1 * y1 * (y1 - zz) * (y1 - zz));
}

TEST_CASE("std_cubic_sos_necessity: icosahedral r_G vanishes at the maximizer") {
    // r_G = (|x|^2+|y|^2)^2 - 9 z q_G + z^2 (|x|^2+|y|^2), via q_hat = (9/2) q_G.
    Graph g = icosahedral_graph();
    MvPoly qg = graph_q(g);
    // graph_q uses the labeled layout (x0 unused at index 0); drop that slot.
    std::vector<MvPoly> strip;
    strip.push_back(MvPoly(42));
    for (size_t i = 0; i < 42; ++i) strip.push_back(MvPoly::var(i, 42));
    MvPoly q42 = qg.compose(strip);
    MvPoly rg = std_cubic_sos_necessity(q42.scaled(Q(9, 2)));
    CHECK(rg.nvars() == 43);

    // Exact evaluation at the Nesterov maximizer in Q[sqrt(2)]: x_v = s sqrt(2)/3,
    // y_e = 1/3 on one triangle, z = 1. Every monomial of r_G has even total
    // degree in the sqrt(2)-carrying coordinates, so the value is rational.
    auto cliques = maximum_cliques(g);
    REQUIRE(!cliques.empty());
    const auto& c = cliques[0];
    // Work in Q[s]/(s^2 - 2): represent values as (a + b s).
    struct Qs {
        Q a, b;
    };
    auto mulqs = [](const Qs& u, const Qs& v) {
        return Qs{u.a * v.a + 2 * u.b * v.b, u.a * v.b + u.b * v.a};
    };
    // Coordinates of rg: x-vars 0..11, y-vars 12..41, z = 42.
    std::vector<Qs> pt(43, Qs{Q(0), Q(0)});
    for (int v : c) pt[v] = Qs{Q(0), Q(1, 3)}; // sqrt(2)/3
    std::map<Edge, size_t> eidx;
    for (size_t j = 0; j < g.edges().size(); ++j) eidx[g.edges()[j]] = j;
    for (size_t a2 = 0; a2 < c.size(); ++a2)
        for (size_t b2 = a2 + 1; b2 < c.size(); ++b2)
            pt[12 + eidx[{c[a2], c[b2]}]] = Qs{Q(1, 3), Q(0)};
    pt[42] = Qs{Q(1), Q(0)};

    Qs acc{Q(0), Q(0)};
    for (const auto& [e, coef] : rg.terms()) {
        Qs term{coef, Q(0)};
        for (size_t i = 0; i < 43; ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) term = mulqs(term, pt[i]);
        acc.a += term.a;
        acc.b += term.b;
    }
    CHECK(acc.a == 0);
    CHECK(acc.b == 0);
}

TEST_CASE("certificate JSON round trips") {
    VamosRun run = vamos_certificate();
    Json j = separation_certificate_to_json(run.cert);
    SeparationCertificate back = separation_certificate_from_json(j);
    CHECK(back.target == run.cert.target);
    CHECK(back.functional == run.cert.functional);
    REQUIRE(back.admissible_basis.size() == run.cert.admissible_basis.size());
    for (size_t i = 0; i < back.admissible_basis.size(); ++i)
        CHECK(back.admissible_basis[i] == run.cert.admissible_basis[i]);
    auto res = verify_separation(back);
    CHECK(res.verdict == SeparationVerdict::NotSos);

    GramCertificate gc{mv(2, {{{2, 0}, 1}, {{0, 2}, 1}}),
                       {MvPoly::var(0, 2), MvPoly::var(1, 2)},
                       QMatrix::identity(2)};
    GramCertificate gback = gram_certificate_from_json(gram_certificate_to_json(gc));
    CHECK(verify_gram(gback).verdict == GramVerdict::ValidSos);
}
