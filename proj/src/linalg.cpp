#include "qmetric/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "qmetric/kernels.hpp"

namespace qmetric {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
    Eigen::MatrixXcd e(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) e(i, j) = m(i, j);
    return e;
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd& e) {
    ComplexMatrix m(static_cast<int>(e.rows()));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) m(i, j) = e(i, j);
    return m;
}

} // namespace

EigResult eigensolve(const ComplexMatrix& m) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), true);
    if (solver.info() != Eigen::Success)
        throw NumericalFailure("eigensolve: complex eigen-solver did not converge");
    EigResult r;
    r.values.resize(m.dim());
    for (int i = 0; i < m.dim(); ++i) r.values[i] = solver.eigenvalues()(i);
    r.vectors = from_eigen(solver.eigenvectors());
    return r;
}

ComplexMatrix inverse(const ComplexMatrix& m) {
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(to_eigen(m));
    if (!lu.isInvertible())
        throw NumericalFailure("inverse: matrix is numerically singular");
    return from_eigen(lu.inverse());
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m),
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalFailure("hermitian_eigenvalues: solver did not converge");
    std::vector<double> v(m.dim());
    for (int i = 0; i < m.dim(); ++i) v[i] = solver.eigenvalues()(i);
    return v;
}

ComplexMatrix expm(const ComplexMatrix& m) {
    const int n = m.dim();
    double norm = 0.0;  // 1-norm
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += std::abs(m(i, j));
        norm = std::max(norm, s);
    }
    int squarings = 0;
    double scale = 1.0;
    while (norm * scale > 0.5) {
        ++squarings;
        scale *= 0.5;
    }

    ComplexMatrix a = Complex(scale) * m;
    ComplexMatrix sum = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    // ||a|| <= 1/2, so ~30 terms push the truncation error below 1e-30.
    for (int k = 1; k <= 30; ++k) {
        ComplexMatrix next(n);
        kernels::matmul(term.data(), a.data(), next.data(), n);
        term = Complex(1.0 / k) * next;
        sum += term;
        if (term.max_norm() < 1e-300) break;
    }
    for (int s = 0; s < squarings; ++s) {
        ComplexMatrix sq(n);
        kernels::matmul(sum.data(), sum.data(), sq.data(), n);
        sum = sq;
    }
    return sum;
}

} // namespace qmetric
