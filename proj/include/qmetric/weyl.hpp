#ifndef QMETRIC_WEYL_HPP
#define QMETRIC_WEYL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qmetric/rational.hpp"

namespace qmetric::weyl {

// Polynomial in the oscillator level n with exact coefficients, c_[k] * n^k.
// Energy corrections E^(i)(n) live here.
class NumberPolynomial {
public:
    NumberPolynomial() = default;
    explicit NumberPolynomial(std::vector<Coeff> monomial_coeffs)
        : c_(std::move(monomial_coeffs)) {
        trim();
    }

    static NumberPolynomial zero() { return {}; }
    static NumberPolynomial constant(Coeff c);
    static NumberPolynomial variable();  // the polynomial "n"

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Coeff coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Coeff(); }
    const std::vector<Coeff>& coeffs() const { return c_; }

    Coeff evaluate(unsigned long n) const;
    bool has_real_coefficients() const;

    NumberPolynomial operator-() const;
    friend NumberPolynomial operator+(const NumberPolynomial& a, const NumberPolynomial& b);
    friend NumberPolynomial operator-(const NumberPolynomial& a, const NumberPolynomial& b);
    friend NumberPolynomial operator*(const NumberPolynomial& a, const NumberPolynomial& b);
    friend NumberPolynomial operator*(const Coeff& s, const NumberPolynomial& p);
    friend bool operator==(const NumberPolynomial& a, const NumberPolynomial& b) {
        return a.c_ == b.c_;
    }

    std::string to_string() const;

private:
    void trim();
    std::vector<Coeff> c_;
};

// Normal-ordered polynomial sum c_{mn} a+^m a^n with exact coefficients.
// The term map is the canonical form: zero coefficients are never stored,
// so operator== is structural equality.
class WeylPolynomial {
public:
    using Key = std::pair<unsigned, unsigned>;  // (m, n) = (a+ power, a power)
    using TermMap = std::map<Key, Coeff>;

    WeylPolynomial() = default;

    static WeylPolynomial zero() { return {}; }
    static WeylPolynomial identity() { return monomial(0, 0, Coeff(1)); }
    static WeylPolynomial annihilation() { return monomial(0, 1, Coeff(1)); }
    static WeylPolynomial creation() { return monomial(1, 0, Coeff(1)); }
    static WeylPolynomial number() { return monomial(1, 1, Coeff(1)); }  // a+ a
    static WeylPolynomial monomial(unsigned m, unsigned n, Coeff c);

    void add_term(unsigned m, unsigned n, const Coeff& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    unsigned degree() const;
    bool is_diagonal() const;
    bool has_rational_coefficients() const;

    WeylPolynomial operator-() const;
    WeylPolynomial& operator+=(const WeylPolynomial& o);
    WeylPolynomial& operator-=(const WeylPolynomial& o);
    friend WeylPolynomial operator+(WeylPolynomial a, const WeylPolynomial& b) { return a += b; }
    friend WeylPolynomial operator-(WeylPolynomial a, const WeylPolynomial& b) { return a -= b; }
    friend WeylPolynomial operator*(const Coeff& s, const WeylPolynomial& p);
    friend bool operator==(const WeylPolynomial& a, const WeylPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    // Terms sorted by (m+n, m), exact fractions, e.g. "3/2·a+^2 a - i·1".
    std::string to_string() const;

private:
    TermMap terms_;
};

// Normal-ordered product via a^n a+^m = sum_k k! C(n,k) C(m,k) a+^(m-k) a^(n-k).
WeylPolynomial multiply(const WeylPolynomial& lhs, const WeylPolynomial& rhs);

inline WeylPolynomial operator*(const WeylPolynomial& a, const WeylPolynomial& b) {
    return multiply(a, b);
}

WeylPolynomial adjoint(const WeylPolynomial& p);
WeylPolynomial commutator(const WeylPolynomial& lhs, const WeylPolynomial& rhs);

// Sub-polynomial with m == n.
WeylPolynomial diagonal_part(const WeylPolynomial& p);

// <n|p|n> as an exact polynomial in n (falling-factorial expansion).
// Throws NotDiagonal when p has off-diagonal terms.
NumberPolynomial diagonal_as_number_polynomial(const WeylPolynomial& p);

// Inverse of the above: monomials n^k expanded in the falling-factorial
// basis, each n(n-1)...(n-k+1) realized as a+^k a^k.
WeylPolynomial number_polynomial_to_operator(const NumberPolynomial& e);

// Solves [a+a, X] = y, requires diagonal_part(y) == 0.  ad_{a+a} has
// eigenvalue m-n on the (m,n) monomial, so X is y with each coefficient
// divided by m-n; the solution has zero diagonal part by construction.
WeylPolynomial ad_h0_solve(const WeylPolynomial& y);

// ---- x,p expressions -------------------------------------------------

// One product word, e.g. 2*x*p*x with exact prefactor.  Order matters.
struct XPWord {
    Coeff coeff;
    std::string ops;  // characters 'x' and 'p'
};

class XPExpression {
public:
    XPExpression() = default;
    explicit XPExpression(std::vector<XPWord> words) : words_(std::move(words)) {}

    static XPExpression term(Coeff c, const std::string& ops);

    const std::vector<XPWord>& words() const { return words_; }

    XPExpression operator-() const;
    friend XPExpression operator+(const XPExpression& a, const XPExpression& b);
    friend XPExpression operator*(const XPExpression& a, const XPExpression& b);

private:
    std::vector<XPWord> words_;
};

// Parses expressions as printed in the golden tables, e.g.
//   "-(2/3 p^3 + x^2 p - i x)", "169/144 p^6 + 169/48 x p^4 x".
// Grammar: sums of products of {rational, i, x[^k], p[^k], (expr)}.
XPExpression parse_xp(const std::string& text);

// Substitutes x = (a + a+)/sqrt2, p = (a - a+)/(i sqrt2) and normal-orders.
WeylPolynomial from_xp(const XPExpression& e);
WeylPolynomial from_xp(const std::string& text);

} // namespace qmetric::weyl

#endif
