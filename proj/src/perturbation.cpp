#include "qmetric/perturbation.hpp"

#include <cmath>
#include <string>

#include "qmetric/fock.hpp"

namespace qmetric {

using weyl::NumberPolynomial;
using weyl::WeylPolynomial;

std::pair<WeylPolynomial, NumberPolynomial> solve_order(const WeylPolynomial& v,
                                                        const OperatorSeries& series,
                                                        const EnergySeries& energies, int i) {
    if (i < 1) throw ValidationError("solve_order: order must be positive");
    if (series.max_order() < i - 1 || energies.max_order() < i - 1)
        throw ValidationError("solve_order: series incomplete through order " +
                              std::to_string(i - 1));
    if (!(series.at(0) == WeylPolynomial::identity()))
        throw NotUnitLeading("solve_order: R^(0) must be the identity");

    WeylPolynomial y = -(v * series.at(i - 1));
    for (int j = 1; j <= i - 1; ++j) {
        WeylPolynomial counter = weyl::number_polynomial_to_operator(energies.at(j));
        y += series.at(i - j) * counter;
    }

    NumberPolynomial e_i = -weyl::diagonal_as_number_polynomial(weyl::diagonal_part(y));
    WeylPolynomial rhs = y + weyl::number_polynomial_to_operator(e_i);
    // rhs is purely off-diagonal by construction of the counterterm.
    return {weyl::ad_h0_solve(rhs), e_i};
}

PerturbationSeries compute_series(const WeylPolynomial& v, int max_order) {
    PerturbationSeries s;
    s.r.coeffs.push_back(WeylPolynomial::identity());
    s.energies.per_order.push_back(weyl::NumberPolynomial::variable());  // E^(0)(n) = n
    for (int i = 1; i <= max_order; ++i) {
        auto [ri, ei] = solve_order(v, s.r, s.energies, i);
        s.r.coeffs.push_back(std::move(ri));
        s.energies.per_order.push_back(std::move(ei));
    }
    return s;
}

OperatorSeries invert_series(const OperatorSeries& r) {
    if (r.coeffs.empty() || !(r.at(0) == WeylPolynomial::identity()))
        throw NotUnitLeading("invert_series: leading coefficient must be the identity");
    OperatorSeries inv;
    inv.coeffs.push_back(WeylPolynomial::identity());
    for (int k = 1; k <= r.max_order(); ++k) {
        WeylPolynomial acc;
        for (int j = 1; j <= k; ++j) acc += r.at(j) * inv.at(k - j);
        inv.coeffs.push_back(-acc);
    }
    return inv;
}

OperatorSeries metric_series(const OperatorSeries& rinv) {
    OperatorSeries q;
    for (int k = 0; k <= rinv.max_order(); ++k) {
        WeylPolynomial qk;
        for (int i = 0; i <= k; ++i) qk += weyl::adjoint(rinv.at(i)) * rinv.at(k - i);
        q.coeffs.push_back(std::move(qk));
    }
    return q;
}

namespace {

int coupling_bandwidth(const ComplexMatrix& v) {
    int band = 0;
    for (int i = 0; i < v.dim(); ++i)
        for (int j = 0; j < v.dim(); ++j)
            if (v(i, j) != Complex(0.0)) band = std::max(band, std::abs(i - j));
    return band;
}

} // namespace

NumericPerturbation numeric_rs(const ComplexMatrix& h0, const ComplexMatrix& v, int n,
                               int order) {
    const int dim = h0.dim();
    const int top = dim - 1;  // Fock truncation N
    if (v.dim() != dim) throw ValidationError("numeric_rs: dimension mismatch");
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (i != j && h0(i, j) != Complex(0.0))
                throw ValidationError("numeric_rs: H0 must be diagonal");
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (std::abs(h0(i, i) - h0(j, j)) < 1e-12)
                throw ValidationError("numeric_rs: H0 levels must be distinct");

    int band = coupling_bandwidth(v);
    if (n + band * order > top)
        throw GuardBandViolation("numeric_rs: level " + std::to_string(n) + " at order " +
                                 std::to_string(order) + " reaches past the truncation");

    NumericPerturbation out;
    out.fock_dim = top;
    out.state_index = n;
    out.order = order;
    out.corrections.assign(order + 1, ComplexVector(dim, Complex(0.0)));
    out.energies.assign(order + 1, Complex(0.0));
    out.corrections[0][n] = 1.0;
    out.energies[0] = h0(n, n);

    for (int i = 1; i <= order; ++i) {
        ComplexVector w = v * out.corrections[i - 1];
        out.energies[i] = w[n];  // <psi^(0)|V|psi^(i-1)>
        ComplexVector psi(dim, Complex(0.0));
        for (int m = 0; m < dim; ++m) {
            if (m == n) continue;  // gauge <psi^(0)|psi^(i)> = 0
            Complex num = w[m];
            for (int j = 1; j <= i - 1; ++j) num -= out.energies[j] * out.corrections[i - j][m];
            psi[m] = num / (out.energies[0] - h0(m, m));
        }
        out.corrections[i] = std::move(psi);
    }
    return out;
}

double cross_validate(const OperatorSeries& symbolic, const ComplexMatrix& h0,
                      const ComplexMatrix& v, int fock_dim, int n_max, int order) {
    if (h0.dim() != fock_dim + 1 || v.dim() != fock_dim + 1)
        throw ValidationError("cross_validate: matrix dimensions must be fock_dim + 1");
    if (order > symbolic.max_order())
        throw ValidationError("cross_validate: symbolic series too short");

    double worst = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        NumericPerturbation num = numeric_rs(h0, v, n, order);
        for (int i = 0; i <= order; ++i) {
            ComplexVector sym = fock_apply_basis(symbolic.at(i), fock_dim, n);
            for (int m = 0; m <= fock_dim; ++m)
                worst = std::max(worst, std::abs(sym[m] - num.corrections[i][m]));
        }
    }
    return worst;
}

} // namespace qmetric
