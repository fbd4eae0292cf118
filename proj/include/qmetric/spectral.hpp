#ifndef QMETRIC_SPECTRAL_HPP
#define QMETRIC_SPECTRAL_HPP

#include <vector>

#include "qmetric/complex_matrix.hpp"

namespace qmetric {

enum class SpectralCharacter { PositiveDefinite, IndefinitePairing };

// Eigendecomposition of a (pseudo-Hermitian) matrix Hamiltonian plus the
// real/conjugate-pair classification of its spectrum.
struct SpectralData {
    ComplexMatrix hamiltonian;
    ComplexVector eigenvalues;          // sorted by (Re, Im)
    std::vector<int> partner;           // -1 real simple, else conjugate index
    ComplexMatrix eigenbasis;           // R, column i = right eigenvector
    ComplexMatrix eigenbasis_inverse;   // R^-1
    double tolerance = 0.0;
    double residual_eigen = 0.0;        // ||H R - R diag(E)||_max
    double residual_inverse = 0.0;      // ||R R^-1 - 1||_max
    bool classified = false;

    bool all_real() const;
};

struct MetricResiduals {
    double hermiticity = 0.0;   // pre-hermitization asymmetry ||q - q+||_max
    double intertwining = 0.0;  // ||q H - H+ q||_max
    double gram = 0.0;          // ||R+ q R - Pi||_max
};

struct MetricResult {
    ComplexMatrix q;
    SpectralCharacter character = SpectralCharacter::PositiveDefinite;
    MetricResiduals residuals;
};

// Scale-relative default: 1e-8 * ||H||_max.
double default_classification_tol(const ComplexMatrix& h);

// Throws DegenerateSpectrum when two eigenvalues are closer than tol and
// NumericalFailure when the eigen-solver fails.  The result is unclassified.
SpectralData eigendecompose(const ComplexMatrix& h, double tol);

// Same contract, but takes the eigenbasis as given (e.g. the closed-form
// model eigenvectors) instead of running a solver.
SpectralData spectral_from_basis(const ComplexMatrix& h, const ComplexVector& eigenvalues,
                                 const ComplexMatrix& r, double tol);

// Tags each eigenvalue real or pairs it with its conjugate partner.
// Throws UnpairedComplexEigenvalue when no partner exists within tol and
// DegenerateSpectrum when the nearest-conjugate match is ambiguous.
SpectralData classify_spectrum(SpectralData sd, double tol);

// Permutation Pi induced by the classification: identity on real indices,
// transposition on each conjugate pair.
ComplexMatrix pair_permutation(const SpectralData& sd);

// q = (R^-1)+ Pi R^-1, hermitized, with all residuals recorded.
MetricResult metric_from_eigenbasis(const SpectralData& sd);

// ||S H S^-1 - H+||_max; throws SingularS.
double verify_pseudo_hermiticity(const ComplexMatrix& h, const ComplexMatrix& s);

// ||q H - H+ q||_max
double verify_intertwining(const ComplexMatrix& h, const ComplexMatrix& q);

// G = R+ q R
ComplexMatrix gram_matrix(const SpectralData& sd, const ComplexMatrix& q);

// Rebuilds q through the cyclic-generator sum (shift matrix t, sigma =
// R t R^-1, reference state = last eigenvector) and returns the max-norm
// difference from (R^-1)+ R^-1.  Real spectra only.
double cyclic_generator_check(const SpectralData& sd);

} // namespace qmetric

#endif
