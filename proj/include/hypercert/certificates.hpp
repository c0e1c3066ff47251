#pragma once

// Exact verification of SOS certificates (Gram matrices), the separating-
// functional machinery behind the Vamos non-SOS certificate, the icosahedral
// correlation-matrix obstruction, and the SOS-recovery identity.

#include "hypercert/constructions.hpp"
#include "hypercert/hyperbolic.hpp"
#include "hypercert/mvpoly.hpp"
#include "hypercert/qmatrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace hypercert {

struct GramCertificate {
    MvPoly target;
    std::vector<MvPoly> basis;
    QMatrix gram;
};

enum class GramVerdict { ValidSos, IdentityFail, GramNotPsd };

struct GramResult {
    GramVerdict verdict = GramVerdict::IdentityFail;
    Exponents offending_monomial; // IdentityFail
    PsdCertificate psd;           // GramNotPsd carries the witness
};

// Checks basis^T gram basis = target as an exact MvPoly identity, then PSD of
// the Gram matrix.
GramResult verify_gram(const GramCertificate& cert);

// Monomials x^alpha with 2*alpha in the Newton polytope of target (homogeneous
// of even degree), intersected with the conditions of vanishing at the given
// points; returns an exact basis of that subspace. Supports at most three
// variables with nonzero exponents (the polytope is handled in the 2-simplex
// slice).
std::vector<MvPoly> admissible_square_basis(const MvPoly& target,
                                            const std::vector<QVec>& vanish_points);

using FunctionalMap = std::map<Exponents, Q, GrlexDesc>;

struct SeparationCertificate {
    MvPoly target;
    FunctionalMap functional; // exponent -> l(x^alpha)
    std::vector<MvPoly> admissible_basis;
};

enum class SeparationVerdict { NotSos, InconclusiveValue, InconclusivePsd };

struct SeparationResult {
    SeparationVerdict verdict = SeparationVerdict::InconclusiveValue;
    Q functional_value; // l applied to target
    Q margin;           // -functional_value when NotSos
    QMatrix moment;     // [l(b_i b_j)]
    PsdCertificate moment_psd;
};

// Applies the functional to the target and to the basis products; the verdict
// is NotSos exactly when the moment matrix is PSD and the value is negative.
// Throws contract_error if a needed monomial is missing from the functional.
SeparationResult verify_separation(const SeparationCertificate& cert);

// The specialized-Vamos separation data from the literature, paired with the
// recomputed sextic. Construction recomputes e1^T B_{p,e}(x1,x2,x3,-x1-x2-x3)[u] e1
// from scratch (e = (0,0,1,1), u = (0,0,0,1)) and refuses to proceed if its
// coefficients disagree with the stored 22-entry vector.
struct VamosRun {
    MvPoly sextic; // recomputed ternary sextic
    SeparationCertificate cert;
    SeparationResult result;
};
VamosRun vamos_certificate();

// Expected moment matrix of the Vamos certificate (for cross-checks).
QMatrix vamos_expected_moment();

struct ObstructionReport {
    QMatrix clique_vectors;   // one row per maximum clique (20 x 42)
    QMatrix complement_basis; // V, columns span the orthogonal complement
    QMatrix weight_matrix;    // D = diag(-11 I_12, 4 I_30)
    QMatrix restricted;       // V^T D V
    PsdCertificate psd;
    Q trace_value;            // trace(D)
    size_t complement_dim = 0;
    bool confirmed = false;
    std::string stage_failed; // empty when confirmed
};

// The icosahedral correlation-matrix obstruction: no unit-diagonal PSD matrix
// annihilates all 20 clique vectors, because V^T D V >= 0 while tr(D X) = -12
// for every unit-diagonal X.
ObstructionReport icosahedral_obstruction();

enum class RecoveryVerdict { IdentityHolds, Mismatch };

struct RecoveryResult {
    RecoveryVerdict verdict = RecoveryVerdict::Mismatch;
    Exponents offending_monomial;
};

// Builds F(x) = [[0, m_d(x)^T],[m_d(x), 0]] and U = diag(0, Q) and checks
// tr(U F(x)^2) = m_d(x)^T Q m_d(x) as an exact polynomial identity.
RecoveryResult sos_recovery_check(const QMatrix& q, unsigned d, unsigned m);

// The degree-d monomial vector in m variables, canonical (grlex-descending).
std::vector<MvPoly> monomial_vector(unsigned d, unsigned m);

// |x|^4 - 2 z q(x) + z^2 |x|^2 in n+1 variables (z last) for homogeneous
// cubic q; nonnegative iff std_cubic(q) is hyperbolic w.r.t. e0, and SOS
// whenever std_cubic(q) is SOS-hyperbolic.
MvPoly std_cubic_sos_necessity(const MvPoly& q);

enum class SosFeasibility { Feasible, Infeasible };

// Exact brute-force check whether target admits any PSD Gram over the given
// basis (basis size <= 3, affine Gram family of dimension <= 1). Used to
// confirm verify_separation verdicts independently on small instances.
SosFeasibility gram_feasibility_small(const MvPoly& target, const std::vector<MvPoly>& basis);

} // namespace hypercert
