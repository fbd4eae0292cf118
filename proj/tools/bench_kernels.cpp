// Compares the OpenMP dense kernels against the serial reference:
// same results, wall-clock side by side.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qmetric/kernels.hpp"

using qmetric::kernels::Complex;

namespace {

double now() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::vector<Complex> random_matrix(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Complex> m(static_cast<std::size_t>(n) * n);
    for (Complex& z : m) z = Complex(dist(rng), dist(rng));
    return m;
}

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double d = 0;
    for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
    return d;
}

} // namespace

int main(int argc, char** argv) {
    int reps = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
    std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled at build time\n");
#endif

    std::mt19937 rng(12345);
    for (int n : {64, 128, 256, 512}) {
        auto a = random_matrix(n, rng);
        auto b = random_matrix(n, rng);
        std::vector<Complex> c_serial(a.size()), c_par(a.size());

        double t0 = now();
        for (int r = 0; r < reps; ++r)
            qmetric::kernels::matmul_serial(a.data(), b.data(), c_serial.data(), n);
        double t_serial = (now() - t0) / reps;

        t0 = now();
        for (int r = 0; r < reps; ++r)
            qmetric::kernels::matmul(a.data(), b.data(), c_par.data(), n);
        double t_par = (now() - t0) / reps;

        std::printf("matmul n=%4d  serial %.4fs  parallel %.4fs  speedup %.2fx  maxdiff %.2e\n",
                    n, t_serial, t_par, t_serial / t_par, max_diff(c_serial, c_par));
    }
    return 0;
}
