#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hypercert/constructions.hpp"
#include "hypercert/errors.hpp"
#include "hypercert/json_io.hpp"
#include "hypercert/mvpoly.hpp"
#include "hypercert/uvpoly.hpp"

#include "test_util.hpp"

using namespace hypercert;
using hypercert::testing::RationalGen;
using hypercert::testing::mv;

TEST_CASE("arith: difference of squares, additive inverse, scaling") {
    MvPoly x1 = MvPoly::var(0, 2), x2 = MvPoly::var(1, 2);
    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);

    MvPoly p = mv(2, {{{2, 0}, 3}, {{1, 1}, -5}, {{0, 1}, 7}});
    CHECK((p + p.scaled(Q(-1))).is_zero());

    CHECK((x1 * x2).scaled(Q(4)) == mv(2, {{{1, 1}, 4}}));
}

TEST_CASE("arith: nvars mismatch is a dimension error") {
    MvPoly a = MvPoly::var(0, 2), b = MvPoly::var(0, 3);
    CHECK_THROWS_AS(a + b, contract_error);
    CHECK_THROWS_AS(a * b, contract_error);
}

TEST_CASE("eval: specialized Vamos at the all-ones point") {
    // Independent expansion of the defining formula: x3^2 x4^2 evaluates to 1
    // and the product term to 4 * 4 * 4, so the value is 65.
    MvPoly p = vamos_specialized();
    QVec ones(4, Q(1));
    Q cubics = 4;  // four cubic monomials, each 1
    Q linear = 4;  // x1 + x2 + x3 + x4
    Q expected = Q(1) + Q(4) * cubics * linear;
    CHECK(expected == Q(65));
    CHECK(p.eval(ones) == expected);
}

TEST_CASE("eval: homogeneous polynomial vanishes at the origin") {
    MvPoly p = vamos_specialized();
    CHECK(p.eval(QVec(4, Q(0))) == 0);
}

TEST_CASE("eval: standard cubic at e0") {
    // x0^3 - 3 x0 |x|^2 + 2q at e0: only x0^3 survives.
    MvPoly q = mv(2, {{{3, 0}, 1}, {{1, 2}, -2}});
    MvPoly p = std_cubic(q);
    QVec e0(3, Q(0));
    e0[0] = 1;
    CHECK(p.eval(e0) == 1);
}

TEST_CASE("eval: dimension mismatch") {
    CHECK_THROWS_AS(vamos_specialized().eval(QVec(3, Q(1))), contract_error);
}

TEST_CASE("directional derivative: power rule") {
    MvPoly p = mv(2, {{{2, 1}, 1}}); // x1^2 x2
    QVec e1{Q(1), Q(0)};
    CHECK(p.directional_derivative(e1) == mv(2, {{{1, 1}, 2}}));
}

TEST_CASE("directional derivative: Euler identity for homogeneous p") {
    MvPoly p = vamos_specialized();
    CHECK(euler_operator(p) == p.scaled(Q(4)));
    MvPoly q = mv(3, {{{1, 1, 1}, 5}, {{3, 0, 0}, -2}});
    CHECK(euler_operator(q) == q.scaled(Q(3)));
}

TEST_CASE("directional derivative: term-wise differentiation of the standard cubic") {
    // D_{e0}(x0^3 - 3 x0 |x|^2) = 3 x0^2 - 3 |x|^2.
    MvPoly p = mv(3, {{{3, 0, 0}, 1}, {{1, 2, 0}, -3}, {{1, 0, 2}, -3}});
    QVec e0{Q(1), Q(0), Q(0)};
    MvPoly expect = mv(3, {{{2, 0, 0}, 3}, {{0, 2, 0}, -3}, {{0, 0, 2}, -3}});
    CHECK(p.directional_derivative(e0) == expect);
}

TEST_CASE("directional derivative: linearity in the direction") {
    RationalGen gen(42);
    MvPoly p = vamos_specialized();
    for (int rep = 0; rep < 20; ++rep) {
        QVec u = gen.vector(4), v = gen.vector(4);
        Q a = gen.rational(), b = gen.rational();
        QVec mix(4);
        for (size_t i = 0; i < 4; ++i) mix[i] = a * u[i] + b * v[i];
        MvPoly lhs = p.directional_derivative(mix);
        MvPoly rhs = p.directional_derivative(u).scaled(a) + p.directional_derivative(v).scaled(b);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("restrict_line: hand-substituted product") {
    // p = x1 x2, x = (1,-1), e = (1,1): (1+t)(-1+t) = t^2 - 1.
    MvPoly p = mv(2, {{{1, 1}, 1}});
    UvPoly r = p.restrict_line({Q(1), Q(-1)}, {Q(1), Q(1)});
    CHECK(r == UvPoly(QVec{Q(-1), Q(0), Q(1)}));
}

TEST_CASE("restrict_line: from the origin gives p(e) t^d") {
    MvPoly p = vamos_specialized();
    QVec e{Q(1), Q(2), Q(1), Q(3)};
    UvPoly r = p.restrict_line(QVec(4, Q(0)), e);
    CHECK(r == UvPoly::monomial(p.eval(e), 4));
}

TEST_CASE("restrict_line: diagonal determinant") {
    // det on diag(a, b) with e = I: (t + a)(t + b).
    PolyMatrix x = symmetric_variable_matrix(2);
    MvPoly det = polymatrix_det(x);
    Q a(3), b(-2);
    QVec point{a, Q(0), b};
    QVec e{Q(1), Q(0), Q(1)};
    UvPoly r = det.restrict_line(point, e);
    UvPoly expect = UvPoly(QVec{a, Q(1)}) * UvPoly(QVec{b, Q(1)});
    CHECK(r == expect);
}

TEST_CASE("restrict_line: leading coefficient is p(e)") {
    RationalGen gen(7);
    MvPoly p = vamos_specialized();
    for (int rep = 0; rep < 10; ++rep) {
        QVec e = gen.vector(4);
        if (p.eval(e) == 0) continue;
        QVec x = gen.vector(4);
        UvPoly r = p.restrict_line(x, e);
        CHECK(r.deg() == 4);
        CHECK(r.lead() == p.eval(e));
    }
}

TEST_CASE("property: line reparameterization") {
    RationalGen gen(11);
    MvPoly p = vamos_specialized();
    for (int rep = 0; rep < 25; ++rep) {
        QVec x = gen.vector(4), e = gen.vector(4);
        Q s = gen.rational();
        QVec shifted(4);
        for (size_t i = 0; i < 4; ++i) shifted[i] = x[i] + s * e[i];
        UvPoly lhs = p.restrict_line(shifted, e);
        UvPoly rhs = p.restrict_line(x, e).shift(s);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("property: eval of a restriction matches eval of p") {
    RationalGen gen(13);
    MvPoly p = vamos_specialized();
    for (int rep = 0; rep < 25; ++rep) {
        QVec x = gen.vector(4), e = gen.vector(4);
        Q t0 = gen.rational();
        QVec moved(4);
        for (size_t i = 0; i < 4; ++i) moved[i] = x[i] + t0 * e[i];
        CHECK(p.restrict_line(x, e).eval(t0) == p.eval(moved));
    }
}

TEST_CASE("is_homogeneous") {
    CHECK(mv(2, {{{2, 0}, 1}, {{0, 2}, 1}}).is_homogeneous().homogeneous);
    CHECK(mv(2, {{{2, 0}, 1}, {{0, 2}, 1}}).is_homogeneous().degree == 2);
    auto h = mv(2, {{{2, 0}, 1}, {{0, 1}, 1}}).is_homogeneous();
    CHECK(!h.homogeneous);
    CHECK(h.witness.has_value());

    // The normalized icosahedral cubic is homogeneous of degree 3.
    LabeledCubic icosa = graph_cubic(icosahedral_graph(), Q(3), true);
    auto hi = icosa.poly.is_homogeneous();
    CHECK(hi.homogeneous);
    CHECK(hi.degree == 3);
    CHECK(icosa.nvars() == 43);
}

TEST_CASE("degree convention for the zero polynomial") {
    MvPoly z(3);
    CHECK(z.is_zero());
    CHECK(z.degree() == 0);
}

TEST_CASE("canonical order: graded lexicographic, descending") {
    MvPoly p = mv(2, {{{0, 0}, 1}, {{2, 0}, 1}, {{1, 1}, 1}, {{0, 1}, 1}});
    std::vector<Exponents> order;
    for (const auto& [e, c] : p.terms()) order.push_back(e);
    std::vector<Exponents> expect{{2, 0}, {1, 1}, {0, 1}, {0, 0}};
    CHECK(order == expect);
}

TEST_CASE("json round trip is exact and canonical") {
    RationalGen gen(17);
    for (int rep = 0; rep < 10; ++rep) {
        MvPoly p(3);
        for (int t = 0; t < 8; ++t) {
            Exponents e{static_cast<std::uint32_t>(gen.integer(0, 4)),
                        static_cast<std::uint32_t>(gen.integer(0, 4)),
                        static_cast<std::uint32_t>(gen.integer(0, 4))};
            p.add_term(e, gen.rational(1000, 1000));
        }
        Json j = mvpoly_to_json(p);
        CHECK(mvpoly_from_json(j) == p);
        CHECK(mvpoly_to_json(mvpoly_from_json(j)) == j);
    }
}

TEST_CASE("uvpoly: divrem, gcd, square-free decomposition") {
    UvPoly a(QVec{Q(-2), Q(0), Q(0), Q(1)}); // t^3 - 2
    UvPoly b(QVec{Q(1), Q(1)});              // t + 1
    UvPoly q, r;
    UvPoly::divrem(a, b, &q, &r);
    CHECK(q * b + r == a);
    CHECK(r.deg() < b.deg());

    // (t-1)^2 (t+2): factors {t+2: 1, t-1: 2}.
    UvPoly f = UvPoly(QVec{Q(-1), Q(1)}) * UvPoly(QVec{Q(-1), Q(1)}) * UvPoly(QVec{Q(2), Q(1)});
    auto fac = f.square_free_decomposition();
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].multiplicity == 1);
    CHECK(fac[0].factor == UvPoly(QVec{Q(2), Q(1)}));
    CHECK(fac[1].multiplicity == 2);
    CHECK(fac[1].factor == UvPoly(QVec{Q(-1), Q(1)}));
}
