#include "qmetric/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qmetric/linalg.hpp"

namespace qmetric {

namespace {

void check_distinct(const ComplexVector& values, double tol) {
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (std::abs(values[i] - values[j]) < tol)
                throw DegenerateSpectrum("eigenvalues " + std::to_string(i) + " and " +
                                         std::to_string(j) + " are closer than tol");
}

SpectralData finish(const ComplexMatrix& h, ComplexVector values, ComplexMatrix r, double tol) {
    SpectralData sd;
    sd.hamiltonian = h;
    sd.eigenvalues = std::move(values);
    sd.eigenbasis = std::move(r);
    sd.eigenbasis_inverse = inverse(sd.eigenbasis);
    sd.tolerance = tol;
    sd.partner.assign(sd.eigenvalues.size(), -1);
    sd.classified = false;

    const int n = h.dim();
    ComplexMatrix hr = h * sd.eigenbasis;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            Complex resid = hr(i, j) - sd.eigenvalues[j] * sd.eigenbasis(i, j);
            sd.residual_eigen = std::max(sd.residual_eigen, std::abs(resid));
        }
    ComplexMatrix rr = sd.eigenbasis * sd.eigenbasis_inverse;
    sd.residual_inverse = (rr - ComplexMatrix::identity(n)).max_norm();
    return sd;
}

} // namespace

bool SpectralData::all_real() const {
    return std::all_of(partner.begin(), partner.end(), [](int p) { return p < 0; });
}

double default_classification_tol(const ComplexMatrix& h) {
    return 1e-8 * h.max_norm();
}

SpectralData eigendecompose(const ComplexMatrix& h, double tol) {
    if (tol <= 0) throw ValidationError("eigendecompose: tol must be positive");
    if (!h.is_finite()) throw ValidationError("eigendecompose: non-finite entries");

    EigResult eig = eigensolve(h);
    check_distinct(eig.values, tol);

    // Deterministic order: sort by (Re, Im), permuting columns along.
    const int n = h.dim();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        if (eig.values[a].real() != eig.values[b].real())
            return eig.values[a].real() < eig.values[b].real();
        return eig.values[a].imag() < eig.values[b].imag();
    });
    ComplexVector values(n);
    ComplexMatrix r(n);
    for (int j = 0; j < n; ++j) {
        values[j] = eig.values[perm[j]];
        r.set_column(j, eig.vectors.column(perm[j]));
    }
    return finish(h, std::move(values), std::move(r), tol);
}

SpectralData spectral_from_basis(const ComplexMatrix& h, const ComplexVector& eigenvalues,
                                 const ComplexMatrix& r, double tol) {
    if (tol <= 0) throw ValidationError("spectral_from_basis: tol must be positive");
    check_distinct(eigenvalues, tol);
    return finish(h, eigenvalues, r, tol);
}

SpectralData classify_spectrum(SpectralData sd, double tol) {
    const int n = static_cast<int>(sd.eigenvalues.size());
    std::vector<int> partner(n, -2);
    for (int i = 0; i < n; ++i) {
        if (partner[i] != -2) continue;
        if (std::abs(sd.eigenvalues[i].imag()) < tol) {
            partner[i] = -1;
            continue;
        }
        // Nearest-conjugate search among the still unassigned indices.
        Complex target = std::conj(sd.eigenvalues[i]);
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        double second_d = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            if (j == i || partner[j] != -2) continue;
            double d = std::abs(sd.eigenvalues[j] - target);
            if (d < best_d) {
                second_d = best_d;
                best_d = d;
                best = j;
            } else {
                second_d = std::min(second_d, d);
            }
        }
        if (best < 0 || best_d > tol)
            throw UnpairedComplexEigenvalue("complex eigenvalue " + std::to_string(i) +
                                            " has no conjugate partner within tol");
        if (second_d - best_d < tol)
            throw DegenerateSpectrum("ambiguous conjugate match for eigenvalue " +
                                     std::to_string(i));
        partner[i] = best;
        partner[best] = i;
    }
    sd.partner = std::move(partner);
    sd.classified = true;
    return sd;
}

ComplexMatrix pair_permutation(const SpectralData& sd) {
    const int n = static_cast<int>(sd.partner.size());
    ComplexMatrix pi(n);
    for (int i = 0; i < n; ++i) pi(sd.partner[i] < 0 ? i : sd.partner[i], i) = 1.0;
    return pi;
}

MetricResult metric_from_eigenbasis(const SpectralData& sd) {
    if (!sd.classified)
        throw ValidationError("metric_from_eigenbasis: spectrum not classified");
    if (sd.residual_inverse > std::max(1e-6, sd.tolerance))
        throw SingularBasis("metric_from_eigenbasis: eigenbasis inverse residual " +
                            std::to_string(sd.residual_inverse));

    const ComplexMatrix& rinv = sd.eigenbasis_inverse;
    ComplexMatrix pi = pair_permutation(sd);
    ComplexMatrix q = rinv.adjoint() * (pi * rinv);

    MetricResult res;
    res.residuals.hermiticity = (q - q.adjoint()).max_norm();
    q = Complex(0.5) * (q + q.adjoint());
    res.q = q;
    res.character = sd.all_real() ? SpectralCharacter::PositiveDefinite
                                  : SpectralCharacter::IndefinitePairing;
    res.residuals.intertwining = verify_intertwining(sd.hamiltonian, q);
    res.residuals.gram = (gram_matrix(sd, q) - pi).max_norm();
    return res;
}

double verify_pseudo_hermiticity(const ComplexMatrix& h, const ComplexMatrix& s) {
    ComplexMatrix sinv;
    try {
        sinv = inverse(s);
    } catch (const NumericalFailure&) {
        throw SingularS("verify_pseudo_hermiticity: S is not invertible");
    }
    return (s * (h * sinv) - h.adjoint()).max_norm();
}

double verify_intertwining(const ComplexMatrix& h, const ComplexMatrix& q) {
    return (q * h - h.adjoint() * q).max_norm();
}

ComplexMatrix gram_matrix(const SpectralData& sd, const ComplexMatrix& q) {
    return sd.eigenbasis.adjoint() * (q * sd.eigenbasis);
}

double cyclic_generator_check(const SpectralData& sd) {
    if (!sd.classified || !sd.all_real())
        throw ValidationError("cyclic_generator_check: requires a classified real spectrum");

    const int n = static_cast<int>(sd.eigenvalues.size());
    const ComplexMatrix& r = sd.eigenbasis;
    const ComplexMatrix& rinv = sd.eigenbasis_inverse;

    // Cyclic shift t |v_i> = |v_{i+1}>, wrapping the last basis vector to
    // the first; t is unitary, so sigma^-1 = R t^-1 R^-1 with t^-1 = t^T.
    ComplexMatrix t(n);
    for (int i = 0; i < n; ++i) t((i + 1) % n, i) = 1.0;
    ComplexMatrix tinv = t.adjoint();

    ComplexMatrix q = rinv.adjoint() * rinv;

    // Reference state = last eigenvector; q0 agrees with q on it and is the
    // identity elsewhere, which is all the identity q0 P_n = q P_n pins down.
    ComplexMatrix pn(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) pn(a, b) = r(a, n - 1) * rinv(n - 1, b);
    ComplexMatrix q0 = q * pn + (ComplexMatrix::identity(n) - pn);

    // sigma^i maps the reference onto eigenvector i-1 (0-based), so the
    // i-th summand carries the projector onto that column.
    ComplexMatrix sum(n);
    ComplexMatrix tpow = ComplexMatrix::identity(n);
    for (int i = 1; i <= n; ++i) {
        tpow = tpow * tinv;  // t^-i
        ComplexMatrix sigma_inv_i = r * (tpow * rinv);
        int idx = i - 1;
        ComplexMatrix proj(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) proj(a, b) = r(a, idx) * rinv(idx, b);
        sum += sigma_inv_i.adjoint() * (q0 * (sigma_inv_i * proj));
    }
    return (sum - q).max_norm();
}

} // namespace qmetric
