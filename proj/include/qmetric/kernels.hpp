#ifndef QMETRIC_KERNELS_HPP
#define QMETRIC_KERNELS_HPP

#include <complex>

namespace qmetric::kernels {

using Complex = std::complex<double>;

// Dense row-major square kernels.  The plain names parallelize the outer
// loop with OpenMP when available; the *_serial variants are the reference
// implementations the tests and the benchmark compare against.

void matmul_serial(const Complex* a, const Complex* b, Complex* c, int n);
void matmul(const Complex* a, const Complex* b, Complex* c, int n);

void matvec_serial(const Complex* a, const Complex* x, Complex* y, int n);
void matvec(const Complex* a, const Complex* x, Complex* y, int n);

// c = alpha*a + b
void axpby_serial(Complex alpha, const Complex* a, const Complex* b, Complex* c, int n2);
void axpby(Complex alpha, const Complex* a, const Complex* b, Complex* c, int n2);

} // namespace qmetric::kernels

#endif
