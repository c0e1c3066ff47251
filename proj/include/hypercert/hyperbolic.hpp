#pragma once

// Parameterized Bezoutian/Hermite matrices, hyperbolicity testing, hyperbolic
// eigenvalues, cone membership, canonical linear functionals, the certificate
// map phi, and dual-cone / interlacing checks.

#include "hypercert/bezout.hpp"
#include "hypercert/mvpoly.hpp"
#include "hypercert/polymatrix.hpp"
#include "hypercert/qmatrix.hpp"
#include "hypercert/roots.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hypercert {

// Raised when an operation that assumes hyperbolicity meets a line with
// non-real roots; carries the offending point.
class not_hyperbolic_error : public std::runtime_error {
public:
    not_hyperbolic_error(std::string what, QVec witness)
        : std::runtime_error(std::move(what)), witness(std::move(witness)) {}
    QVec witness;
};

// A homogeneous polynomial with a distinguished direction e, p(e) > 0.
// Whether p is actually hyperbolic w.r.t. e is what hyperbolicity_test
// decides; the context only pins the checked invariants.
struct HyperbolicContext {
    MvPoly p;
    QVec e;
    int d = 0;  // homogeneity degree
    Q p_at_e;

    HyperbolicContext(MvPoly poly, QVec direction);
    size_t nvars() const { return p.nvars(); }
};

// p(x + t e) as a univariate polynomial in t (leading coefficient p(e)).
UvPoly line_poly(const HyperbolicContext& ctx, const QVec& x);
// p(t e - x); its roots are the hyperbolic eigenvalues of x.
UvPoly eigen_poly(const HyperbolicContext& ctx, const QVec& x);

// B_{p,e}(x)[u] = B_d(p_x, D_u p_x), d x d symmetric with MvPoly entries.
PolyMatrix parameterized_bezoutian(const HyperbolicContext& ctx, const QVec& u);
// H_{p,e}(x)[u] = H_d(D_u p_x / p_x), computed for p normalized so that p_x is
// monic; entries are genuine polynomials in x. B_{p,e} = p(e)^2 B_{p~,e}
// relates the two normalizations.
PolyMatrix parameterized_hermite(const HyperbolicContext& ctx, const QVec& u);

// Exact H_{p,e}(x)[u] at a concrete rational point.
QMatrix hermite_at(const HyperbolicContext& ctx, const QVec& x, const QVec& u);
QMatrix bezout_at(const HyperbolicContext& ctx, const QVec& x, const QVec& u);

// Isolation of the roots of p(te - x); throws not_hyperbolic_error if any
// root is non-real.
RootIsolation hyperbolic_eigenvalues(const HyperbolicContext& ctx, const QVec& x, const Q& width);

struct LineCheck {
    bool real_rooted;
    QVec x; // the witness line when real_rooted is false
};
LineCheck check_hyperbolic_on_line(const HyperbolicContext& ctx, const QVec& x);

// Deterministic per-trial sample: standard basis vectors, then e +- e_i, then
// seeded random rationals with |num| <= 100, den <= 100.
QVec sample_point(std::uint64_t seed, long trial, size_t n, const QVec& e);

struct TrialRecord {
    long index = 0;
    QVec x;
    bool ok = true;
    std::string failure; // "non_real_roots" | "hermite_not_psd"
};

struct HyperbolicityOptions {
    int jobs = 1;
    // When set, samples are restricted to the complement {x : x_i = 0} of e
    // (requires e_i != 0), which suffices for the verdict.
    std::optional<size_t> complement_index;
    bool keep_records = false;
};

struct HyperbolicityReport {
    bool passed = false;
    long trials = 0;
    std::optional<QVec> witness;
    long witness_trial = -1;
    std::string failure; // kind of the first failure
    std::vector<TrialRecord> records;
};

// Randomized falsification search: at each sample x runs the exact
// real-rootedness check of p(x + te) and the exact PSD check of
// H_{p,e}(x)[e]. Any failure is a certified witness that p is not hyperbolic
// w.r.t. e; passing all trials is evidence, not proof.
HyperbolicityReport hyperbolicity_test(const HyperbolicContext& ctx, long trials,
                                       std::uint64_t seed,
                                       const HyperbolicityOptions& opts = {});

enum class Membership { Inside, Boundary, Outside };
std::string membership_str(Membership m);

struct MembershipResult {
    Membership verdict = Membership::Outside;
    int zero_multiplicity = 0;              // multiplicity of the eigenvalue 0
    std::optional<RootInterval> negative_witness; // an interval of a negative eigenvalue
};

// Exact sign classification of the hyperbolic eigenvalues of u. Throws
// not_hyperbolic_error if p(te - u) has non-real roots.
MembershipResult cone_membership(const HyperbolicContext& ctx, const QVec& u);

// Residues of D_u p_x / p_x at the (simple) poles of its square-free
// reduction: lambda_i'(x)[u], one per distinct eigenvalue, eigenvalues
// descending. Each residue enclosure has width <= width.
struct Residues {
    std::vector<QInterval> eigenvalues; // descending
    std::vector<int> multiplicities;
    std::vector<QInterval> values;
};
Residues canonical_residues(const HyperbolicContext& ctx, const QVec& x, const QVec& u,
                            const Q& width);

struct CanonicalFunctionals {
    QVec x;
    QVec eigenvalues; // rational approximations, strictly descending
    std::vector<int> multiplicities;
    QMatrix functionals; // k x n; row i approximates lambda_i'(x)[.]
    Q precision;
};
CanonicalFunctionals canonical_functionals(const HyperbolicContext& ctx, const QVec& x,
                                           const Q& width);

// phi_{p,e}(x,y)[u] = y^T H_{p,e}(x)[u] y, exact.
Q phi_eval(const HyperbolicContext& ctx, const QVec& x, const QVec& y, const QVec& u);
// The functional u -> phi(x,y)[u] in the dual coordinate basis.
QVec phi_functional(const HyperbolicContext& ctx, const QVec& x, const QVec& y);

// Exact membership test for the dual cone of a special class.
struct DualOracle {
    std::string name;
    std::function<bool(const QVec&)> contains;
};

struct DualSampleReport {
    long samples = 0;
    bool all_in_dual = true;
    std::optional<std::pair<QVec, QVec>> violation_xy;
    QVec violation_functional;
};

// Samples (x, y) and verifies phi(x,y)[.] lands in the dual cone per the
// oracle. Any violation indicates an implementation bug.
DualSampleReport dual_cone_sample_check(const HyperbolicContext& ctx, long samples,
                                        std::uint64_t seed, const DualOracle& oracle);

struct InterlaceResult {
    bool consistent = true;
    long samples = 0;
    std::optional<QVec> violation_x;
    std::string detail;
};

// Width-aware numeric interleaving check of the eigenvalues of q against
// those of p at sampled points (overlapping enclosures count as consistent).
InterlaceResult check_interlaces(const HyperbolicContext& ctx, const MvPoly& q, long samples,
                                 const Q& width, std::uint64_t seed);

// Searches for (x, y) with phi(x, y)[u] < 0 for u outside the cone, taking
// x = u and q_y the Lagrange polynomial concentrated on a negative eigenvalue
// at successively refined approximations. Returns the exact witness pair.
std::optional<std::pair<QVec, QVec>> phi_negativity_witness(const HyperbolicContext& ctx,
                                                            const QVec& u, int max_attempts);

} // namespace hypercert
