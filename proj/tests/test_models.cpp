#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qmetric/fock.hpp"
#include "qmetric/linalg.hpp"
#include "qmetric/models.hpp"
#include "qmetric/perturbation.hpp"
#include "qmetric/spectral.hpp"

using namespace qmetric;
using models::Branch;
using models::TwoByTwoParams;

namespace {

constexpr double kPi = 3.14159265358979323846;

Rational frac(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

} // namespace

TEST_CASE("2x2 real-branch reference point") {
    TwoByTwoParams p{1.0, 1.0, 1.0, kPi / 6, 0.0};
    auto b = models::two_by_two_bundle(p);
    CHECK(b.branch == Branch::RealSpectrum);
    CHECK(std::abs(b.e_first - Complex(std::sqrt(3.0))) < 1e-14);
    CHECK(std::abs(b.e_second) < 1e-14);

    ComplexMatrix expect(2);
    expect(0, 0) = 4.0 / 3.0;
    expect(0, 1) = Complex(0, -2.0 / 3.0);
    expect(1, 0) = Complex(0, 2.0 / 3.0);
    expect(1, 1) = 4.0 / 3.0;
    CHECK((b.q_closed_form - expect).max_norm() < 1e-14);
}

TEST_CASE("2x2 complex-branch reference point") {
    TwoByTwoParams p{1.0, 0.5, 0.5, kPi / 2, 0.0};
    auto b = models::two_by_two_bundle(p);
    CHECK(b.branch == Branch::ComplexPair);
    CHECK(std::abs(b.e_first - Complex(0, -std::sqrt(3.0) / 2)) < 1e-14);
    CHECK(std::abs(b.e_second - std::conj(b.e_first)) < 1e-15);

    double c = -2.0 / std::sqrt(3.0);
    CHECK(std::abs(b.q_closed_form(0, 1) - Complex(c)) < 1e-14);
    CHECK(std::abs(b.q_closed_form(1, 0) - Complex(c)) < 1e-14);
    CHECK(std::abs(b.q_closed_form(0, 0)) < 1e-14);
}

TEST_CASE("Hermitian limit gives the identity metric") {
    TwoByTwoParams p{0.7, 1.3, 1.3, 0.0, 0.0};
    auto b = models::two_by_two_bundle(p);
    CHECK((b.q_closed_form - ComplexMatrix::identity(2)).max_norm() < 1e-14);
}

TEST_CASE("2x2 closed form matches the eigenbasis construction, both branches") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> rd(-2.0, 2.0), td(0.2, 3.0),
        th(0.1, kPi - 0.1), ph(-kPi, kPi);
    int real_done = 0, complex_done = 0;
    while (real_done < 20 || complex_done < 20) {
        TwoByTwoParams p{rd(rng), td(rng), td(rng), th(rng), ph(rng)};
        double rs = p.r * std::sin(p.theta);
        double disc = p.s * p.t - rs * rs;
        if (std::abs(disc) < 0.1) continue;
        if (disc < 0) {
            if (complex_done >= 20) continue;
            if (rs <= 0) continue;  // closed form written for r sin(theta) > 0
            ++complex_done;
        } else {
            if (real_done >= 20) continue;
            ++real_done;
        }
        auto b = models::two_by_two_bundle(p);
        double tol = default_classification_tol(b.h);
        SpectralData sd = classify_spectrum(
            spectral_from_basis(b.h, {b.e_first, b.e_second}, b.eigenvectors, tol), tol);
        MetricResult m = metric_from_eigenbasis(sd);
        CAPTURE(p.r);
        CAPTURE(p.theta);
        CHECK((m.q - b.q_closed_form).max_norm() < 1e-12);
        CHECK(m.residuals.gram < 1e-12);
        CHECK(m.residuals.intertwining < 1e-12);

        auto sym = models::two_by_two_symmetry_checks(b);
        CHECK(sym.ptilde_idempotent < 1e-13);
        CHECK(sym.pt_invariance < 1e-13);
        CHECK(sym.ptilde_conjugation < 1e-13);
        CHECK(sym.pseudo_hermiticity < 1e-13);
        CHECK(sym.singlet_doublet < 1e-12);
        CHECK(sym.q0_normalization < 1e-12);
        CHECK(sym.k_annihilation < 1e-12);
        if (std::abs(p.s - p.t) > 0.05) {
            CHECK(sym.ptilde_hermiticity_gap > 1e-3);
            CHECK(sym.ptilde_vs_dagger_gap > 1e-6);
        }
    }
}

TEST_CASE("2x2 parameter validation") {
    CHECK_THROWS_AS(models::two_by_two_bundle({1.0, -1.0, 1.0, 0.3, 0.0}), ValidationError);
    // exceptional point: st = r^2 sin^2(theta)
    CHECK_THROWS_AS(models::two_by_two_bundle({1.0, 1.0, 1.0, kPi / 2, 0.0}),
                    DegenerateParameters);
}

TEST_CASE("harmonic oscillator metric is exactly the identity") {
    auto b = models::harmonic_oscillator_bundle(20);
    CHECK(b.q_is_identity);
    CHECK(b.generator_relation_exact);
    CHECK(b.k_annihilates_reference);
    for (const Rational& w : b.q_diagonal) CHECK(w == 1);
}

TEST_CASE("generator scale demo reproduces the weight formula") {
    const int N = 10;
    // |c_n|^2 = 1 -> weights 1/n!
    std::vector<Rational> ones(N + 1, Rational(1));
    auto w = models::generator_scale_demo(ones, N);
    for (int n = 0; n <= N; ++n) CHECK(w[n] == Rational(1) / Rational(factorial(n)));

    // |c_n|^2 = 1/n! -> identity weights
    std::vector<Rational> canonical(N + 1);
    for (int n = 0; n <= N; ++n) canonical[n] = Rational(1) / Rational(factorial(n));
    w = models::generator_scale_demo(canonical, N);
    for (int n = 0; n <= N; ++n) CHECK(w[n] == 1);

    // |c_n|^2 = 4/n! -> uniform 1/4
    std::vector<Rational> scaled(N + 1);
    for (int n = 0; n <= N; ++n) scaled[n] = Rational(4) / Rational(factorial(n));
    w = models::generator_scale_demo(scaled, N);
    for (int n = 0; n <= N; ++n) CHECK(w[n] == frac(1, 4));

    std::vector<Rational> with_zero(N + 1, Rational(1));
    with_zero[3] = 0;
    CHECK_THROWS_AS(models::generator_scale_demo(with_zero, N), ZeroScale);
}

TEST_CASE("shifted model: free case gives q = exp(alpha p)") {
    auto b = models::shifted_cubic_bundle({0.25, 0.0}, 40, 1);
    // R = 1, so q = exp(alpha p) exactly (same exponential both ways).
    CHECK((b.q_numeric - b.exp_alpha_p).max_norm() < 1e-12);
    CHECK(models::shifted_gram_residual(b, 6) < 1e-10);
}

TEST_CASE("shifted model: alpha = 0 reduces to the cubic-series metric") {
    const int N = 40;
    const double eps = 0.05;
    auto b = models::shifted_cubic_bundle({0.0, eps}, N, 2);

    auto series = compute_series(models::cubic_perturbation(), 2);
    ComplexMatrix r_mat = ComplexMatrix::identity(N + 1);
    double ep = 1.0;
    for (int i = 1; i <= 2; ++i) {
        ep *= eps;
        r_mat += Complex(ep) * to_fock_matrix(series.r.at(i), N);
    }
    ComplexMatrix rinv = inverse(r_mat);
    ComplexMatrix q_ref = rinv.adjoint() * rinv;
    CHECK((b.q_numeric - q_ref).max_norm() < 1e-10);
}

TEST_CASE("shifted model rejects truncations below the guard band") {
    CHECK_THROWS_AS(models::shifted_cubic_bundle({0.1, 0.05}, 8, 2), GuardBandViolation);
}
