#ifndef QMETRIC_COMPLEX_MATRIX_HPP
#define QMETRIC_COMPLEX_MATRIX_HPP

#include <complex>
#include <vector>

#include "qmetric/errors.hpp"

namespace qmetric {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Dense square complex matrix, row-major.  Products go through the kernels
// in kernels.hpp (OpenMP with a serial reference); factorizations are
// delegated to Eigen in linalg.hpp.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}

    static ComplexMatrix identity(int dim);
    static ComplexMatrix diagonal(const ComplexVector& d);

    int dim() const { return dim_; }

    Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    const Complex& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * dim_ + j];
    }

    Complex* data() { return a_.data(); }
    const Complex* data() const { return a_.data(); }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;

    ComplexVector column(int j) const;
    void set_column(int j, const ComplexVector& v);

    double max_norm() const;  // max |a_ij|
    bool is_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix& m);
    friend ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v);

private:
    int dim_ = 0;
    std::vector<Complex> a_;
};

inline Complex dot(const ComplexVector& a, const ComplexVector& b) {
    Complex s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
    return s;
}

double max_abs(const ComplexVector& v);

} // namespace qmetric

#endif
