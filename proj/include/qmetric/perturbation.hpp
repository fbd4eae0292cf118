#ifndef QMETRIC_PERTURBATION_HPP
#define QMETRIC_PERTURBATION_HPP

#include <utility>
#include <vector>

#include "qmetric/complex_matrix.hpp"
#include "qmetric/weyl.hpp"

namespace qmetric {

// Truncated power series in the coupling, coefficients are normal-ordered
// operator polynomials.  coeffs[0] is the identity for R and R^-1.
struct OperatorSeries {
    std::vector<weyl::WeylPolynomial> coeffs;

    int max_order() const { return static_cast<int>(coeffs.size()) - 1; }
    const weyl::WeylPolynomial& at(int i) const { return coeffs.at(i); }
};

// Energy corrections per order as exact polynomials in the level n.
struct EnergySeries {
    std::vector<weyl::NumberPolynomial> per_order;

    int max_order() const { return static_cast<int>(per_order.size()) - 1; }
    const weyl::NumberPolynomial& at(int i) const { return per_order.at(i); }
};

// One step of the operator-level recursion around H0 = a+a: builds the
// right side Y = -V R^(i-1) + sum_j R^(i-j) E^(j)(a+a), extracts the energy
// counterterm that cancels its diagonal part, and solves [H0, R^(i)] = Y +
// E^(i)(a+a) in the zero-diagonal gauge.  Inputs must be complete through
// order i-1.
std::pair<weyl::WeylPolynomial, weyl::NumberPolynomial> solve_order(
    const weyl::WeylPolynomial& v, const OperatorSeries& series,
    const EnergySeries& energies, int i);

struct PerturbationSeries {
    OperatorSeries r;
    EnergySeries energies;
};

// Runs solve_order from 1 through max_order starting at R^(0) = 1, E^(0) = n.
PerturbationSeries compute_series(const weyl::WeylPolynomial& v, int max_order);

// Neumann recursion for the series inverse; R * R^-1 = 1 + O(eps^k+1)
// exactly.  Throws NotUnitLeading unless coeffs[0] = 1.
OperatorSeries invert_series(const OperatorSeries& r);

// q^(k) = sum_{i+j=k} (Rinv^(i))+ Rinv^(j); Hermitian term by term.
OperatorSeries metric_series(const OperatorSeries& rinv);

// State-space Rayleigh-Schrodinger oracle on the truncated Fock basis:
// the literal sum over unperturbed levels E' != E.
struct NumericPerturbation {
    int fock_dim = 0;    // N
    int state_index = 0; // n
    int order = 0;
    std::vector<ComplexVector> corrections;  // [i] = |psi_n^(i)>, [0] = basis vector
    ComplexVector energies;                  // [i] = E_n^(i)
};

NumericPerturbation numeric_rs(const ComplexMatrix& h0, const ComplexMatrix& v, int n,
                               int order);

// max over n <= n_max, i <= order of the infinity-norm gap between the
// symbolic R^(i)|n> and the numeric |psi_n^(i)>.
double cross_validate(const OperatorSeries& symbolic, const ComplexMatrix& h0,
                      const ComplexMatrix& v, int fock_dim, int n_max, int order);

} // namespace qmetric

#endif
