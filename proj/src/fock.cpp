#include "qmetric/fock.hpp"

#include <cmath>

namespace qmetric {

namespace {

// sqrt(n!/(n-k)!) in double; exact falling factorial under the root.
double ladder_amplitude(unsigned long n, unsigned long k) {
    double f = 1.0;
    for (unsigned long j = 0; j < k; ++j) f *= static_cast<double>(n - j);
    return std::sqrt(f);
}

} // namespace

ComplexMatrix to_fock_matrix(const weyl::WeylPolynomial& p, int N) {
    if (N < static_cast<int>(p.degree()))
        throw ValidationError("to_fock_matrix: truncation N below operator degree");
    ComplexMatrix out(N + 1);
    for (const auto& [key, c] : p.terms()) {
        const auto [j, k] = key;
        Complex cz = c.to_complex();
        for (int n = static_cast<int>(k); n <= N; ++n) {
            int m = n - static_cast<int>(k) + static_cast<int>(j);
            if (m > N) continue;
            double amp = ladder_amplitude(n, k) * ladder_amplitude(m, j);
            out(m, n) += cz * amp;
        }
    }
    return out;
}

ComplexVector fock_apply_basis(const weyl::WeylPolynomial& p, int N, int n) {
    ComplexVector out(N + 1, Complex(0.0));
    for (const auto& [key, c] : p.terms()) {
        const auto [j, k] = key;
        if (static_cast<int>(k) > n) continue;
        int m = n - static_cast<int>(k) + static_cast<int>(j);
        if (m > N) continue;
        double amp = ladder_amplitude(n, k) * ladder_amplitude(m, j);
        out[m] += c.to_complex() * amp;
    }
    return out;
}

std::vector<Coeff> exact_diagonal_fock(const weyl::WeylPolynomial& p, int N) {
    if (!p.is_diagonal())
        throw NotDiagonal("exact_diagonal_fock: polynomial has off-diagonal terms");
    std::vector<Coeff> diag(N + 1);
    for (const auto& [key, c] : p.terms()) {
        unsigned k = key.first;
        for (int n = 0; n <= N; ++n) {
            Integer ff = falling_factorial(static_cast<unsigned long>(n), k);
            diag[n] += Coeff(Rational(ff)) * c;
        }
    }
    return diag;
}

} // namespace qmetric
