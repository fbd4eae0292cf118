#include "qmetric/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qmetric::kernels {

void matmul_serial(const Complex* a, const Complex* b, Complex* c, int n) {
    // i-k-j order keeps the inner loop contiguous in b and c.
    for (int i = 0; i < n; ++i) {
        Complex* ci = c + static_cast<std::size_t>(i) * n;
        for (int j = 0; j < n; ++j) ci[j] = 0.0;
        for (int k = 0; k < n; ++k) {
            Complex aik = a[static_cast<std::size_t>(i) * n + k];
            if (aik == Complex(0.0)) continue;
            const Complex* bk = b + static_cast<std::size_t>(k) * n;
            for (int j = 0; j < n; ++j) ci[j] += aik * bk[j];
        }
    }
}

void matmul(const Complex* a, const Complex* b, Complex* c, int n) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        Complex* ci = c + static_cast<std::size_t>(i) * n;
        for (int j = 0; j < n; ++j) ci[j] = 0.0;
        for (int k = 0; k < n; ++k) {
            Complex aik = a[static_cast<std::size_t>(i) * n + k];
            if (aik == Complex(0.0)) continue;
            const Complex* bk = b + static_cast<std::size_t>(k) * n;
            for (int j = 0; j < n; ++j) ci[j] += aik * bk[j];
        }
    }
}

void matvec_serial(const Complex* a, const Complex* x, Complex* y, int n) {
    for (int i = 0; i < n; ++i) {
        Complex s = 0.0;
        const Complex* ai = a + static_cast<std::size_t>(i) * n;
        for (int j = 0; j < n; ++j) s += ai[j] * x[j];
        y[i] = s;
    }
}

void matvec(const Complex* a, const Complex* x, Complex* y, int n) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        Complex s = 0.0;
        const Complex* ai = a + static_cast<std::size_t>(i) * n;
        for (int j = 0; j < n; ++j) s += ai[j] * x[j];
        y[i] = s;
    }
}

void axpby_serial(Complex alpha, const Complex* a, const Complex* b, Complex* c, int n2) {
    for (int k = 0; k < n2; ++k) c[k] = alpha * a[k] + b[k];
}

void axpby(Complex alpha, const Complex* a, const Complex* b, Complex* c, int n2) {
#pragma omp parallel for schedule(static)
    for (int k = 0; k < n2; ++k) c[k] = alpha * a[k] + b[k];
}

} // namespace qmetric::kernels
