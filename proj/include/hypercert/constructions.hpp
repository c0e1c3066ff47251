#pragma once

// Factories for the concrete polynomial families: the specialized Vamos
// quartic, graph cubics, standard-form cubics, the icosahedral example, the
// lifting combinators, and the determinant / linear-form / singular-cubic
// special classes with their exact dual-cone oracles.

#include "hypercert/graphs.hpp"
#include "hypercert/hyperbolic.hpp"
#include "hypercert/mvpoly.hpp"

#include <string>
#include <vector>

namespace hypercert {

// x3^2 x4^2 + 4(x1x2x3 + x1x2x4 + x1x3x4 + x2x3x4)(x1 + x2 + x3 + x4);
// homogeneous of degree 4 in 4 variables.
MvPoly vamos_specialized();

// A graph cubic in 1 + |V| + |E| variables with its variable bookkeeping.
struct LabeledCubic {
    MvPoly poly;
    Graph graph;
    Q k;
    bool normalized = false;
    std::vector<std::string> var_names; // x0, x_v<i>, y_<u>_<v>
    // Variable indices: 0 is x0; vertex v is 1 + v; edge j is 1 + |V| + j.
    size_t x0_index() const { return 0; }
    size_t vertex_index(int v) const { return 1 + static_cast<size_t>(v); }
    size_t edge_index(size_t j) const { return 1 + static_cast<size_t>(graph.nverts()) + j; }
    size_t nvars() const { return poly.nvars(); }
};

// q_G(x, y) = sum over edges of x_i x_j y_ij, in the LabeledCubic variable
// layout (the x0 slot is present but unused).
MvPoly graph_q(const Graph& g);

// Plain form:      (2k/(k-1)) x0^3 - x0 (|x|^2 + |y|^2) + q_G   (k > 1)
// Normalized form: x0^3 - 3 x0 (|x|^2 + |y|^2) + c_k q_G with
//                  c_k = 2 / (sqrt(2/27) sqrt(1 - 1/k)); only exposed when
//                  c_k is rational (k = 3 gives c_k = 9).
LabeledCubic graph_cubic(const Graph& g, const Q& k, bool normalized);

// x0^3 - 3 x0 (x1^2 + ... + xn^2) + 2 q(x) for homogeneous cubic q in n vars;
// result has n + 1 variables with x0 first.
MvPoly std_cubic(const MvPoly& q);

// The Nesterov maximizer of q_G over the unit sphere, described exactly by
// the squares of its coordinates (the point itself is irrational in general).
struct NesterovMaximizer {
    int omega = 0;
    std::vector<int> clique;
    Q value_squared;  // (2/27)(1 - 1/omega) = q_G(point)^2
    Q x_square;       // x_i^2 = 2/(3 omega) on the clique
    Q y_square;       // y_ij^2 = 1/(3 C(omega,2)) on clique edges
    Q q_at_point_squared; // exact evaluation of q_G(point)^2
};
NesterovMaximizer nesterov_maximizer(const Graph& g);

// (a t^3 - N t)^2 - Q2 where a = 2k/(k-1), N = |x|^2 + |y|^2 = 1 at the
// maximizer and Q2 = q_G(point)^2: real-rooted iff the restriction of the
// plain graph cubic to the line through the maximizer in direction e0 is.
UvPoly nesterov_line_poly_squared(const Graph& g, const Q& k);

// l(x)^degree * p; requires l linear with l(e) > 0 and l(u) = 0.
MvPoly degree_lift(const HyperbolicContext& ctx, const QVec& u, const MvPoly& ell, unsigned k);

// q(e') p(x) + q(x') D_e p(x) with q linear in fresh variables x'; the result
// has n + n' variables (originals first).
MvPoly variable_lift(const HyperbolicContext& ctx, const MvPoly& q_linear, const QVec& e_prime);

// Special classes with exact dual-cone membership oracles.
struct SpecialPoly {
    HyperbolicContext ctx;
    std::string kind;
    std::vector<std::string> var_names;
    std::vector<QMatrix> pencil; // determinantal data, when applicable
};

// det on d x d symmetric matrices; n = d(d+1)/2 variables indexed by the
// upper triangle row-major; e = I.
SpecialPoly det_symmetric(size_t d);
// Product of given linear forms (rows of `forms`); requires forms_i(e) > 0.
SpecialPoly linear_forms(const std::vector<QVec>& forms, const QVec& e);
// The singular cubic det[[x3,0,x1],[0,x1+x3,x2],[x1,x2,x3]] with e = (0,0,1).
SpecialPoly singular_cubic();

// Exact dual oracles for the three classes above.
DualOracle det_dual_oracle(size_t d);
DualOracle linear_forms_dual_oracle(const std::vector<QVec>& forms);
DualOracle singular_cubic_dual_oracle();

// Reconstructs the symmetric matrix Z with xi[U] = tr(ZU) from a functional
// given in the upper-triangle coordinates of det_symmetric(d).
QMatrix functional_to_symmetric(const QVec& xi, size_t d);

} // namespace hypercert
