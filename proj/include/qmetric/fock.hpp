#ifndef QMETRIC_FOCK_HPP
#define QMETRIC_FOCK_HPP

#include <vector>

#include "qmetric/complex_matrix.hpp"
#include "qmetric/weyl.hpp"

namespace qmetric {

// (N+1)x(N+1) truncated Fock realization, <m|a+^j a^k|n> ladder elements.
// Entries are exact up to the float conversion at the boundary.  Products
// of truncations are only trustworthy on the interior block: rows/cols
// <= N - deg(P) - deg(Q).
ComplexMatrix to_fock_matrix(const weyl::WeylPolynomial& p, int N);

// Action on a basis column, |out> = p |n>, without building the matrix.
ComplexVector fock_apply_basis(const weyl::WeylPolynomial& p, int N, int n);

// Exact diagonal entries <n|p|n>, n = 0..N, for a diagonal polynomial.
// Throws NotDiagonal otherwise.
std::vector<Coeff> exact_diagonal_fock(const weyl::WeylPolynomial& p, int N);

} // namespace qmetric

#endif
