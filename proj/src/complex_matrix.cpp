#include "qmetric/complex_matrix.hpp"

#include <cmath>

#include "qmetric/kernels.hpp"

namespace qmetric {

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const ComplexVector& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(i, j));
    return m;
}

ComplexVector ComplexMatrix::column(int j) const {
    ComplexVector v(dim_);
    for (int i = 0; i < dim_; ++i) v[i] = (*this)(i, j);
    return v;
}

void ComplexMatrix::set_column(int j, const ComplexVector& v) {
    for (int i = 0; i < dim_; ++i) (*this)(i, j) = v[i];
}

double ComplexMatrix::max_norm() const {
    double m = 0.0;
    for (const Complex& z : a_) m = std::max(m, std::abs(z));
    return m;
}

bool ComplexMatrix::is_finite() const {
    for (const Complex& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.dim_);
    kernels::matmul(a.data(), b.data(), c.data(), a.dim_);
    return c;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
    ComplexMatrix r = m;
    for (Complex& z : r.a_) z *= s;
    return r;
}

ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v) {
    ComplexVector y(m.dim_);
    kernels::matvec(m.data(), v.data(), y.data(), m.dim_);
    return y;
}

double max_abs(const ComplexVector& v) {
    double m = 0.0;
    for (const Complex& z : v) m = std::max(m, std::abs(z));
    return m;
}

} // namespace qmetric
