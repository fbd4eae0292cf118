#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "qmetric/kernels.hpp"
#include "qmetric/linalg.hpp"

using qmetric::kernels::Complex;

namespace {

std::vector<Complex> random_block(std::size_t count, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Complex> v(count);
    for (Complex& z : v) z = Complex(dist(rng), dist(rng));
    return v;
}

} // namespace

TEST_CASE("parallel kernels agree with the serial reference") {
    std::mt19937 rng(41);
    for (int n : {1, 2, 7, 16, 33, 64}) {
        auto a = random_block(static_cast<std::size_t>(n) * n, rng);
        auto b = random_block(static_cast<std::size_t>(n) * n, rng);
        auto x = random_block(n, rng);

        std::vector<Complex> c1(a.size()), c2(a.size());
        qmetric::kernels::matmul_serial(a.data(), b.data(), c1.data(), n);
        qmetric::kernels::matmul(a.data(), b.data(), c2.data(), n);
        for (std::size_t k = 0; k < c1.size(); ++k) CHECK(std::abs(c1[k] - c2[k]) < 1e-13);

        std::vector<Complex> y1(n), y2(n);
        qmetric::kernels::matvec_serial(a.data(), x.data(), y1.data(), n);
        qmetric::kernels::matvec(a.data(), x.data(), y2.data(), n);
        for (int k = 0; k < n; ++k) CHECK(std::abs(y1[k] - y2[k]) < 1e-13);

        std::vector<Complex> z1(a.size()), z2(a.size());
        Complex alpha(0.3, -0.7);
        qmetric::kernels::axpby_serial(alpha, a.data(), b.data(), z1.data(),
                                       static_cast<int>(a.size()));
        qmetric::kernels::axpby(alpha, a.data(), b.data(), z2.data(),
                                static_cast<int>(a.size()));
        for (std::size_t k = 0; k < z1.size(); ++k) CHECK(std::abs(z1[k] - z2[k]) < 1e-15);
    }
}

TEST_CASE("matrix exponential matches known closed forms") {
    using qmetric::ComplexMatrix;
    // exp of a nilpotent 2x2: 1 + N
    ComplexMatrix n2(2);
    n2(0, 1) = 3.0;
    ComplexMatrix e = qmetric::expm(n2);
    CHECK(std::abs(e(0, 0) - Complex(1.0)) < 1e-14);
    CHECK(std::abs(e(0, 1) - Complex(3.0)) < 1e-14);
    CHECK(std::abs(e(1, 0)) < 1e-14);

    // exp(i theta sigma_x) = cos(theta) 1 + i sin(theta) sigma_x
    double theta = 0.8;
    ComplexMatrix sx(2);
    sx(0, 1) = Complex(0, theta);
    sx(1, 0) = Complex(0, theta);
    e = qmetric::expm(sx);
    CHECK(std::abs(e(0, 0) - Complex(std::cos(theta))) < 1e-13);
    CHECK(std::abs(e(0, 1) - Complex(0, std::sin(theta))) < 1e-13);

    // exp(A) exp(-A) = 1 for a random dense matrix
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexMatrix a(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) a(i, j) = 0.4 * Complex(dist(rng), dist(rng));
    ComplexMatrix neg = Complex(-1.0) * a;
    ComplexMatrix prod = qmetric::expm(a) * qmetric::expm(neg);
    CHECK((prod - ComplexMatrix::identity(8)).max_norm() < 1e-12);
}
