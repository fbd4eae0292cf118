#ifndef QMETRIC_MODELS_HPP
#define QMETRIC_MODELS_HPP

#include <vector>

#include "qmetric/complex_matrix.hpp"
#include "qmetric/perturbation.hpp"
#include "qmetric/rational.hpp"
#include "qmetric/weyl.hpp"

namespace qmetric::models {

// ---- generalized 2x2 model -------------------------------------------

struct TwoByTwoParams {
    double r = 0, s = 1, t = 1, theta = 0, phi = 0;
};

enum class Branch { RealSpectrum, ComplexPair };

// Everything the closed forms give: Hamiltonian, the Hermitian involution S,
// the generalized parity, eigenvalues/eigenvectors (paper-normalized),
// projectors, generators, reference states and the closed-form metric.
struct TwoByTwoBundle {
    TwoByTwoParams params;
    Branch branch = Branch::RealSpectrum;
    double disc = 0;  // st - r^2 sin^2(theta); Q^2 or -Qtilde^2

    ComplexMatrix h, s_op, p_tilde;
    Complex e_first, e_second;       // (E+, E-) or (E, Ebar)
    ComplexMatrix eigenvectors;      // column 0 = first state, column 1 = second
    ComplexMatrix proj_first, proj_second;
    ComplexMatrix sigma_nontrivial;  // sigma_{E+} (real) / sigma_{Ebar} (complex)
    ComplexMatrix k_first, k_second;
    ComplexVector reference_psi;     // |psi>
    ComplexVector reference_phi;     // |phi> = q0 |psi>
    ComplexMatrix q0;
    ComplexMatrix q_closed_form;
};

// Throws DegenerateParameters near the exceptional point st = r^2 sin^2,
// ValidationError for s <= 0 or t <= 0.
TwoByTwoBundle two_by_two_bundle(const TwoByTwoParams& p);

struct TwoByTwoSymmetryChecks {
    double ptilde_idempotent;       // ||P~^2 - 1||
    double ptilde_hermiticity_gap;  // ||P~ - P~+||, > 0 when s != t
    double pt_invariance;           // ||P~ conj(H) P~ - H||
    double ptilde_conjugation;      // ||P~ H P~ - conj(H)||
    double ptilde_vs_dagger_gap;    // ||P~ H P~ - H+||, > 0 when s != t
    double pseudo_hermiticity;      // ||S H S^-1 - H+||
    double singlet_doublet;         // PT action on eigenstates, branch-appropriate
    double q0_normalization;        // |<psi|q0|psi> - 1|
    double k_annihilation;          // max over E of ||k_E+ |phi>||
};

TwoByTwoSymmetryChecks two_by_two_symmetry_checks(const TwoByTwoBundle& b);

// ---- harmonic oscillator ----------------------------------------------

struct HarmonicOscillatorBundle {
    int fock_dim = 0;                 // N
    std::vector<Rational> q_diagonal; // exact metric weights from the generator sum
    bool q_is_identity = false;
    bool generator_relation_exact = false; // H sigma_n = n sigma_n + sigma_n H, exact
    bool k_annihilates_reference = false;  // k_n |psi_0> = 0
};

HarmonicOscillatorBundle harmonic_oscillator_bundle(int fock_dim);

// Metric weights 1/(|c_n|^2 n!) for generators sigma_n = c_n (a+)^n,
// computed exactly through the generator sum.  Takes the squared magnitudes
// |c_n|^2 so the arithmetic stays rational end to end.  Throws ZeroScale.
std::vector<Rational> generator_scale_demo(const std::vector<Rational>& scale_abs2,
                                           int fock_dim);

// ---- cubic model golden data ------------------------------------------

// V = i x^3 in normal-ordered form.
weyl::WeylPolynomial cubic_perturbation();

// The published operator tables, exactly as printed, in x,p word form.
// Index 1..3 for R^(i); metric index 0..3 where index 0 is the identity.
const std::vector<std::string>& cubic_r_golden_xp();
const std::vector<std::string>& cubic_q_golden_xp();

// ---- shifted linear + cubic model -------------------------------------

struct ShiftedCubicParams {
    double alpha = 0;
    double epsilon = 0;
};

struct ShiftedCubicBundle {
    ShiftedCubicParams params;
    int fock_dim = 0;   // N
    int order = 0;
    int interior = 0;   // rows/cols the truncation-sensitive checks are limited to

    ComplexMatrix h0;               // shifted unperturbed Hamiltonian (Fock realization)
    ComplexMatrix v;                // i x^3
    ComplexMatrix exp_alpha_p;      // e^{alpha p}
    ComplexMatrix exp_half_neg;     // e^{-alpha p/2}
    ComplexMatrix exp_half_pos;     // e^{+alpha p/2}
    double similarity_residual = 0; // interior-block residual of the e^{-ap/2} H e^{ap/2} identity

    ComplexMatrix r_shifted;         // truncated R series conjugated into the shifted basis
    ComplexMatrix q_numeric;         // (Rs^-1)+ e^{alpha p} Rs^-1
    ComplexMatrix perturbed_states;  // column n = Rs e^{-alpha p/2}|n>
};

ShiftedCubicBundle shifted_cubic_bundle(const ShiftedCubicParams& p, int fock_dim, int order);

// ||G - 1||_max over the first `count` perturbed states under q_numeric.
double shifted_gram_residual(const ShiftedCubicBundle& b, int count);

} // namespace qmetric::models

#endif
