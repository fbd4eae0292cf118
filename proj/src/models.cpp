#include "qmetric/models.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "qmetric/fock.hpp"
#include "qmetric/linalg.hpp"

namespace qmetric::models {

using std::polar;
using std::sqrt;

namespace {

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

ComplexVector vec2(Complex a, Complex b) { return {a, b}; }

double vec_residual(const ComplexVector& a, const ComplexVector& b) {
    double r = 0;
    for (std::size_t k = 0; k < a.size(); ++k) r = std::max(r, std::abs(a[k] - b[k]));
    return r;
}

ComplexVector conj_vec(const ComplexVector& v) {
    ComplexVector r(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) r[k] = std::conj(v[k]);
    return r;
}

} // namespace

TwoByTwoBundle two_by_two_bundle(const TwoByTwoParams& p) {
    if (!(p.s > 0) || !(p.t > 0))
        throw ValidationError("two_by_two_bundle: s and t must be positive");

    const double rs = p.r * std::sin(p.theta);
    const double disc = p.s * p.t - rs * rs;
    const double eps_degenerate = 1e-10 * std::max(std::abs(p.s * p.t), rs * rs);
    if (std::abs(disc) <= eps_degenerate)
        throw DegenerateParameters("two_by_two_bundle: parameters at the exceptional point");

    TwoByTwoBundle b;
    b.params = p;
    b.disc = disc;
    b.branch = disc > 0 ? Branch::RealSpectrum : Branch::ComplexPair;

    const Complex eip = polar(1.0, p.phi);
    const Complex eip2 = polar(1.0, p.phi / 2);
    b.h = mat2(p.r * polar(1.0, p.theta), p.s * eip, p.t * std::conj(eip),
               p.r * polar(1.0, -p.theta));
    b.s_op = mat2(0, eip, std::conj(eip), 0);
    b.p_tilde = mat2(0, sqrt(p.s / p.t), sqrt(p.t / p.s), 0);

    const double st4 = std::pow(p.s / p.t, 0.25);
    const double ts4 = 1.0 / st4;
    const Complex i(0, 1);

    if (b.branch == Branch::RealSpectrum) {
        const double q = sqrt(disc);
        b.e_first = p.r * std::cos(p.theta) + q;   // E+
        b.e_second = p.r * std::cos(p.theta) - q;  // E-

        const Complex sp = std::sqrt(Complex(q, rs));   // sqrt(Q + i r sin)
        const Complex sm = std::sqrt(Complex(q, -rs));  // sqrt(Q - i r sin)
        const double norm = 1.0 / sqrt(p.s + p.t);
        ComplexVector plus = vec2(norm * st4 * sp * eip2, norm * ts4 * sm * std::conj(eip2));
        ComplexVector minus =
            vec2(i * norm * st4 * sm * eip2, -i * norm * ts4 * sp * std::conj(eip2));
        b.eigenvectors = ComplexMatrix(2);
        b.eigenvectors.set_column(0, plus);
        b.eigenvectors.set_column(1, minus);

        b.proj_first = Complex(1.0 / (2 * q)) *
                       mat2(Complex(q, rs), p.s * eip, p.t * std::conj(eip), Complex(q, -rs));
        b.proj_second = Complex(1.0 / (2 * q)) *
                        mat2(Complex(q, -rs), -p.s * eip, -p.t * std::conj(eip), Complex(q, rs));

        b.sigma_nontrivial = mat2(0, i * sqrt(p.s / p.t) * eip,
                                  -i * sqrt(p.t / p.s) * std::conj(eip), 0);
        b.k_first = Complex(-2 * q) * b.proj_first;  // k_{E+} = -2Q P_{E+}
        b.k_second = Complex(2 * q) * b.proj_first;  // k_{E-} = 2Q P_{E+}

        b.reference_psi = minus;
        b.q0 = Complex(-(p.s + p.t) / (2 * q)) * b.s_op;
        b.reference_phi = b.q0 * b.reference_psi;

        b.q_closed_form = Complex((p.s + p.t) / (2 * q * q)) *
                          mat2(p.t, -i * rs * eip, i * rs * std::conj(eip), p.s);
    } else {
        const double qt = sqrt(-disc);  // Qtilde
        b.e_first = Complex(p.r * std::cos(p.theta), -qt);  // E
        b.e_second = std::conj(b.e_first);                  // Ebar

        const Complex norm = 1.0 / std::sqrt(Complex((p.s + p.t) * rs + (p.s - p.t) * qt));
        ComplexVector psi_e, psi_ebar;
        {
            Complex c0 = i * std::sqrt(Complex(p.s * (rs - qt))) * eip2;
            Complex c1 = std::sqrt(Complex(p.t * (rs + qt))) * std::conj(eip2);
            psi_e = vec2(-i * norm * c0, -i * norm * c1);
        }
        {
            Complex c0 = std::sqrt(Complex(p.s * (rs + qt))) * eip2;
            Complex c1 = -i * std::sqrt(Complex(p.t * (rs - qt))) * std::conj(eip2);
            psi_ebar = vec2(i * norm * c0, i * norm * c1);
        }
        b.eigenvectors = ComplexMatrix(2);
        b.eigenvectors.set_column(0, psi_e);
        b.eigenvectors.set_column(1, psi_ebar);

        b.proj_first = Complex(1.0 / (2 * qt)) *
                       mat2(-(rs - qt), i * p.s * eip, i * p.t * std::conj(eip), rs + qt);
        b.proj_second = Complex(1.0 / (2 * qt)) *
                        mat2(rs + qt, -i * p.s * eip, -i * p.t * std::conj(eip), -(rs - qt));

        b.sigma_nontrivial =
            mat2(0, -sqrt(p.s / p.t) * eip, sqrt(p.t / p.s) * std::conj(eip), 0);
        b.k_first = Complex(2.0 * i * qt) * b.proj_second;   // k_E = 2i Qt P_Ebar
        b.k_second = Complex(-2.0 * i * qt) * b.proj_second; // k_Ebar

        b.reference_psi = psi_e;
        const double scale = ((p.s + p.t) * rs + (p.s - p.t) * qt) / (2 * sqrt(p.s * p.t) * qt);
        b.q0 = Complex(-scale) * mat2(sqrt(p.t / p.s), 0, 0, -sqrt(p.s / p.t));
        b.reference_phi = b.q0 * b.reference_psi;

        b.q_closed_form = Complex(-scale) * b.s_op;
    }
    return b;
}

TwoByTwoSymmetryChecks two_by_two_symmetry_checks(const TwoByTwoBundle& b) {
    TwoByTwoSymmetryChecks c{};
    const ComplexMatrix id = ComplexMatrix::identity(2);

    c.ptilde_idempotent = (b.p_tilde * b.p_tilde - id).max_norm();
    c.ptilde_hermiticity_gap = (b.p_tilde - b.p_tilde.adjoint()).max_norm();
    // Antilinear T is entrywise conjugation, so (P~T) H (P~T) = P~ conj(H) P~.
    ComplexMatrix php = b.p_tilde * (b.h.conjugate() * b.p_tilde);
    c.pt_invariance = (php - b.h).max_norm();
    ComplexMatrix php_lin = b.p_tilde * (b.h * b.p_tilde);
    c.ptilde_conjugation = (php_lin - b.h.conjugate()).max_norm();
    c.ptilde_vs_dagger_gap = (php_lin - b.h.adjoint()).max_norm();

    ComplexMatrix sinv = inverse(b.s_op);
    c.pseudo_hermiticity = (b.s_op * (b.h * sinv) - b.h.adjoint()).max_norm();

    ComplexVector first = b.eigenvectors.column(0);
    ComplexVector second = b.eigenvectors.column(1);
    if (b.branch == Branch::RealSpectrum) {
        // Singlets: P~T fixes each eigenstate.
        c.singlet_doublet = std::max(vec_residual(b.p_tilde * conj_vec(first), first),
                                     vec_residual(b.p_tilde * conj_vec(second), second));
    } else {
        // Doublet: P~T swaps the conjugate pair.
        c.singlet_doublet = std::max(vec_residual(b.p_tilde * conj_vec(first), second),
                                     vec_residual(b.p_tilde * conj_vec(second), first));
    }

    c.q0_normalization = std::abs(dot(b.reference_psi, b.reference_phi) - Complex(1.0));
    c.k_annihilation = std::max(max_abs(b.k_first.adjoint() * b.reference_phi),
                                max_abs(b.k_second.adjoint() * b.reference_phi));
    return c;
}

HarmonicOscillatorBundle harmonic_oscillator_bundle(int fock_dim) {
    if (fock_dim < 1) throw ValidationError("harmonic_oscillator_bundle: N must be >= 1");
    HarmonicOscillatorBundle b;
    b.fock_dim = fock_dim;

    // q = sum_n (sigma_n^-1)+ q0 sigma_n^-1 P_n with sigma_n = (a+)^n/sqrt(n!):
    // the n-th weight is <n|(a+)^n a^n|n> / n!, evaluated exactly.
    b.q_diagonal.reserve(fock_dim + 1);
    for (int n = 0; n <= fock_dim; ++n) {
        auto mono = weyl::WeylPolynomial::monomial(n, n, Coeff(1));
        std::vector<Coeff> diag = exact_diagonal_fock(mono, fock_dim);
        Coeff w = diag[n] / Coeff(Rational(factorial(n)));
        if (!w.is_rational() || w.rat.im != 0)
            throw NumericalFailure("harmonic oscillator weight left the rationals");
        b.q_diagonal.push_back(w.rat.re);
    }
    b.q_is_identity = std::all_of(b.q_diagonal.begin(), b.q_diagonal.end(),
                                  [](const Rational& r) { return r == 1; });

    // H sigma_n = n sigma_n + sigma_n H with sigma_n ~ (a+)^n, exact algebra.
    auto h0 = weyl::WeylPolynomial::number();
    b.generator_relation_exact = true;
    for (int n = 0; n <= std::min(fock_dim, 12); ++n) {
        auto sigma = weyl::WeylPolynomial::monomial(n, 0, Coeff(1));
        auto lhs = h0 * sigma - sigma * h0 - Coeff(Rational(n)) * sigma;
        if (!lhs.is_zero()) b.generator_relation_exact = false;
    }

    // k_n = H_h.o. annihilates the reference state |0>.
    ComplexVector k_on_ref = fock_apply_basis(h0, fock_dim, 0);
    b.k_annihilates_reference = max_abs(k_on_ref) == 0.0;
    return b;
}

std::vector<Rational> generator_scale_demo(const std::vector<Rational>& scale_abs2,
                                           int fock_dim) {
    if (static_cast<int>(scale_abs2.size()) != fock_dim + 1)
        throw ValidationError("generator_scale_demo: need one scale per level");
    std::vector<Rational> weights;
    weights.reserve(scale_abs2.size());
    for (int n = 0; n <= fock_dim; ++n) {
        if (scale_abs2[n] == 0) throw ZeroScale("generator_scale_demo: c_" +
                                                std::to_string(n) + " is zero");
        // sigma_n = c_n (a+)^n, sigma_n^-1 = a^n/(c_n n!), so the weight is
        // <n|(a+)^n a^n|n> / (|c_n|^2 (n!)^2) = 1/(|c_n|^2 n!).
        auto mono = weyl::WeylPolynomial::monomial(n, n, Coeff(1));
        Coeff elem = exact_diagonal_fock(mono, fock_dim)[n];
        Rational fact(factorial(n));
        weights.push_back(elem.rat.re / (scale_abs2[n] * fact * fact));
    }
    return weights;
}

weyl::WeylPolynomial cubic_perturbation() {
    return weyl::from_xp("i x^3");
}

const std::vector<std::string>& cubic_r_golden_xp() {
    static const std::vector<std::string> tables = {
        "1",  // R^(0)
        "-(2/3 p^3 + x^2 p - i x)",
        "23/288 p^6 + 23/96 x^2 p^4 - 1/48 i x p^3 + 7/96 x^4 p^2 - 1/16 p^2"
        " + 13/48 i x^3 p + 11/8 x^2 - 41/288 x^6",
        "59/1296 p^9 + 59/288 x^2 p^7 - 593/288 i x p^6 - 163/120 p^5"
        " + 109/288 x^4 p^5 - 1591/288 i x^3 p^4 - 769/48 x^2 p^3"
        " + 307/864 x^6 p^3 + 649/48 i x p^2 - 443/96 i x^5 p^2"
        " - 17/12 p - 13 x^4 p + 41/288 x^8 p + 685/72 i x^3 - 287/288 i x^7",
    };
    return tables;
}

const std::vector<std::string>& cubic_q_golden_xp() {
    static const std::vector<std::string> tables = {
        "1",
        "-(4/3 p^3 + 2 x p x)",
        "169/144 p^6 + 169/48 x p^4 x + 137/48 p x^4 p + 41/144 x^6 - 177/8 x^2",
        "-181/3 p - 41/36 x^4 p x^4 + 457/24 x^2 p x^2 - 523/108 x^3 p^3 x^3"
        " + 3463/60 p^5 + 5669/72 x p^3 x - 253/36 x^2 p^5 x^2"
        " - 155/36 x p^7 x - 155/162 p^9",
    };
    return tables;
}

ShiftedCubicBundle shifted_cubic_bundle(const ShiftedCubicParams& p, int fock_dim,
                                        int order) {
    if (fock_dim < 9 * std::max(order, 1))
        throw GuardBandViolation("shifted_cubic_bundle: truncation too small for order");

    ShiftedCubicBundle b;
    b.params = p;
    b.fock_dim = fock_dim;
    b.order = order;
    b.interior = fock_dim / 2;

    const auto p_op = weyl::from_xp("p");
    const auto x_op = weyl::from_xp("x");
    const auto h_ho = weyl::WeylPolynomial::number();

    ComplexMatrix p_mat = to_fock_matrix(p_op, fock_dim);
    ComplexMatrix x_mat = to_fock_matrix(x_op, fock_dim);
    ComplexMatrix h_ho_mat = to_fock_matrix(h_ho, fock_dim);
    const double a = p.alpha;

    b.exp_alpha_p = expm(Complex(a) * p_mat);
    b.exp_half_neg = expm(Complex(-a / 2) * p_mat);
    b.exp_half_pos = expm(Complex(a / 2) * p_mat);

    b.v = to_fock_matrix(cubic_perturbation(), fock_dim);
    b.h0 = b.exp_half_neg * (h_ho_mat * b.exp_half_pos) +
           Complex(a * a / 8) * ComplexMatrix::identity(fock_dim + 1);

    // Similarity identity, checked on the interior block only: the
    // exponentials have unbounded degree, so edge rows are truncation noise.
    // Since exp(-ap/2) x exp(ap/2) = x + ia/2, conjugating (p^2+x^2-1)/2
    // produces the oscillator plus i(a/2)x - a^2/8.
    {
        ComplexMatrix lhs = b.exp_half_neg * (h_ho_mat * b.exp_half_pos);
        ComplexMatrix rhs = h_ho_mat + Complex(0, a / 2) * x_mat -
                            Complex(a * a / 8) * ComplexMatrix::identity(fock_dim + 1);
        double worst = 0;
        for (int i = 0; i <= b.interior; ++i)
            for (int j = 0; j <= b.interior; ++j)
                worst = std::max(worst, std::abs(lhs(i, j) - rhs(i, j)));
        b.similarity_residual = worst;
    }

    // Truncated R series for the cubic model, realized on the Fock basis and
    // conjugated into the shifted basis.  q inverts the realized matrix
    // rather than truncating the inverse series, so the Gram identity holds
    // to rounding instead of O(eps^(order+1)).
    PerturbationSeries series = compute_series(cubic_perturbation(), order);
    ComplexMatrix r_mat = ComplexMatrix::identity(fock_dim + 1);
    double eps_pow = 1.0;
    for (int i = 1; i <= order; ++i) {
        eps_pow *= p.epsilon;
        r_mat += Complex(eps_pow) * to_fock_matrix(series.r.at(i), fock_dim);
    }
    b.r_shifted = b.exp_half_neg * (r_mat * b.exp_half_pos);

    ComplexMatrix rs_inv = inverse(b.r_shifted);
    b.q_numeric = rs_inv.adjoint() * (b.exp_alpha_p * rs_inv);

    b.perturbed_states = b.r_shifted * b.exp_half_neg;
    return b;
}

double shifted_gram_residual(const ShiftedCubicBundle& b, int count) {
    ComplexMatrix g = b.perturbed_states.adjoint() * (b.q_numeric * b.perturbed_states);
    double worst = 0;
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) {
            Complex expect = i == j ? Complex(1.0) : Complex(0.0);
            worst = std::max(worst, std::abs(g(i, j) - expect));
        }
    return worst;
}

} // namespace qmetric::models
