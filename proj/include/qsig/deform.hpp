#ifndef QSIG_DEFORM_HPP
#define QSIG_DEFORM_HPP

#include <optional>

#include "qsig/models.hpp"
#include "qsig/qgroups.hpp"

namespace qsig {

using TSW = TwistedSeries<WSeries>;

struct Trunc {
    int xdeg = 8;      // X-adic order D
    int horizon = 12;  // sequence horizon H
    int wdeg = 4;      // W-adic order
};

// A deformation of the canonical expansion morphism, given by its parameter
// tuple and the images of the hull generators in F(N, A[[W1,W2]])[[X]].
struct Deformation {
    ExampleId example = ExampleId::C_T;
    Trunc tr;
    NilElement e, f;  // e a unit with e-1 nilpotent, f nilpotent
    std::optional<WSeries> b;

    TSW phi_t{0};                 // image of the expansion of t
    TSW phi_q{0}, phi_x{0};       // images of Q and X
    std::optional<TSW> phi_y;     // image of the expansion of y (examples 2, 3)
};

// The canonical morphism itself (e = 1, f = 0, trivial series part).
Deformation identity_deformation(ExampleId ex, const Trunc& tr);

// Constructs the deformed images from a parameter tuple. For examples 2 and 3
// the series part must satisfy [e(t+W1)+f, b] = 0; violations are rejected.
Deformation build_deformation(ExampleId ex, const Trunc& tr,
                              const NilElement& e, const NilElement& f,
                              std::optional<WSeries> b = std::nullopt);

// Checks, at truncation:
//  (a) the operator equations for the images of Q and X and the
//      sigma/theta intertwining on the generator images,
//  (b) relation preservation: phi(Q) phi(X) = q phi(X) phi(Q) and, when y is
//      present, [phi(t-image), phi(y-image)] = 0,
//  (c) congruence with the canonical morphism modulo nilpotents,
//  (d) the base-restriction (scalars fixed, coefficients Taylor-shifted).
Report verify_deformation(const Deformation& d);

// phi(Q) phi(X) - q phi(X) phi(Q); equals (e f - q f e) Q^2, which is the
// mechanical form of the parameter constraint
TSW relation_residual(const Deformation& d);
bool residual_matches_parameter_form(const Deformation& d);

// --- classification ----------------------------------------------------------

struct SolutionSet {
    std::string description;
    int operator_nullity_x = 0;  // K-dimension of the X-image solution space
    int operator_nullity_q = 0;
    std::string constraint;        // the parameter constraint, as derived
    bool shift_part_forced_zero = false;  // f = 0 after the relation stage
    std::vector<Deformation> basis_solutions;
    Report evidence;
};

// Solves the operator equations exhaustively (the system is K-linear and acts
// slotwise on the carrier), then imposes the relation constraint by nilpotent
// filtration. Covers the first example and its q-difference structure.
SolutionSet classify_deformations(const NilAlgebraPtr& alg, const Trunc& tr);

// delta(y) = y example: family phi(Y) = c Y with c - 1 nilpotent
struct TaylorSolutionSet {
    std::string description;
    int operator_nullity = 0;
    std::vector<NilElement> multipliers;  // representative c values
    Report evidence;
};
TaylorSolutionSet taylor_example_deformations(const NilAlgebraPtr& alg,
                                              int xdeg, int wdeg);

// differential structure on K(t, log t): family (a, b) of nilpotent shifts
struct DiffLogSolution {
    NilElement a;
    NilElement b;
};
Report ex3_differential_report(const NilAlgebraPtr& alg, int xdeg, int wdeg);
// composition of two shift families is componentwise addition
DiffLogSolution diff_log_compose(const DiffLogSolution& x,
                                 const DiffLogSolution& y);

// --- specific identity batteries ---------------------------------------------

// [A, Z] = 0 iff [e(t+W1)+f, b] = 0 for the second-example pair
// A = (e(t+W1)+f) Q + X, Z = sum X^n binom(alpha,n) (e(t+W1)+f)^{-n} Q^{alpha-n} b
struct BiconditionalResult {
    bool ambient_commutes;  // [A, Z] = 0
    bool parameter_commutes;  // [e(t+W1)+f, b] = 0
    bool equivalent() const { return ambient_commutes == parameter_commutes; }
};
BiconditionalResult commutation_biconditional(const NilElement& e,
                                              const NilElement& f,
                                              const WSeries& b,
                                              const Trunc& tr);

// b_m = binom(alpha,m) c^{-m} b_0 versus the recurrence
// b_{m+1} = [alpha-m]_q / ([m+1]_q c) b_m
bool series_recurrence_matches_closed_form(const NilElement& e,
                                           const NilElement& f,
                                           const WSeries& b0, const Trunc& tr);

// --- composition oracle -------------------------------------------------------

// Transport of a deformation along the t-motion of a second parameter tuple:
// substitutes W1 |-> e2 W1 + (e2-1) t + f2 in every coefficient. Composing a
// deformation with the motion of another is how the group laws arise.
TSW transport_images(const TSW& img, const NilElement& e2, const NilElement& f2,
                     int horizon, int wdeg);

// oracle check: transporting the y-image of (e1,f1,b1) along (e2,f2) yields
// the y-image of (matrix product, b1 substituted), and the series parts
// multiply (example 2) resp. add (example 3) kernel-wise
Report composition_oracle_report(ExampleId ex, const Trunc& tr,
                                 const NilAlgebraPtr& alg, int instances,
                                 uint64_t seed);

// --- hull data ----------------------------------------------------------------

struct GaloisHull {
    ExampleId example;
    std::vector<std::string> generator_names;
    Report closure;  // operator-closure witnesses at truncation
};
GaloisHull hull_generators(ExampleId ex, int xdeg, int horizon);

}  // namespace qsig

#endif
