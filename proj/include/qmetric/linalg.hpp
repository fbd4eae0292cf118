#ifndef QMETRIC_LINALG_HPP
#define QMETRIC_LINALG_HPP

#include <vector>

#include "qmetric/complex_matrix.hpp"

namespace qmetric {

struct EigResult {
    ComplexVector values;
    ComplexMatrix vectors;  // column i = right eigenvector for values[i]
};

// Unsorted eigendecomposition (Eigen's ComplexEigenSolver behind the scenes).
// Throws NumericalFailure if the solver does not converge.
EigResult eigensolve(const ComplexMatrix& m);

// Throws NumericalFailure when the matrix is numerically singular.
ComplexMatrix inverse(const ComplexMatrix& m);

// Eigenvalues of a Hermitian matrix, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Matrix exponential by scaling and squaring: scale so the scaled norm is
// <= 1/2, sum the Taylor series to machine precision, square back up.
ComplexMatrix expm(const ComplexMatrix& m);

} // namespace qmetric

#endif
