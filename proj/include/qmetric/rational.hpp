#ifndef QMETRIC_RATIONAL_HPP
#define QMETRIC_RATIONAL_HPP

#include <complex>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "qmetric/errors.hpp"

namespace qmetric {

using Rational = mpq_class;
using Integer = mpz_class;

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Falling factorial n(n-1)...(n-k+1) for integer n >= 0.
inline Integer falling_factorial(unsigned long n, unsigned long k) {
    if (k > n) return Integer(0);
    Integer r(1);
    for (unsigned long j = 0; j < k; ++j) r *= Integer(n - j);
    return r;
}

// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }

    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational d = b.re * b.re + b.im * b.im;
        if (d == 0) throw NumericalFailure("GaussianRational division by zero");
        GaussianRational n = a * b.conj();
        return {n.re / d, n.im / d};
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

// Element of Q(i)[sqrt(2)]: rat + srt*sqrt(2).  The x,p <-> a,a+ change of
// basis introduces powers of 2^(1/2); everything the paper prints collapses
// back into the rational part, which callers can assert via is_rational().
struct Coeff {
    GaussianRational rat;  // rational part
    GaussianRational srt;  // coefficient of sqrt(2)

    Coeff() = default;
    Coeff(GaussianRational r) : rat(std::move(r)) {}
    Coeff(GaussianRational r, GaussianRational s) : rat(std::move(r)), srt(std::move(s)) {}
    Coeff(long r) : rat(r) {}
    Coeff(Rational r) : rat(std::move(r)) {}

    static Coeff i() { return Coeff(GaussianRational::i()); }
    static Coeff sqrt2() { return {GaussianRational(0), GaussianRational(1)}; }

    bool is_zero() const { return rat.is_zero() && srt.is_zero(); }
    bool is_rational() const { return srt.is_zero(); }

    Coeff conj() const { return {rat.conj(), srt.conj()}; }

    Coeff operator-() const { return {-rat, -srt}; }

    Coeff& operator+=(const Coeff& o) {
        rat += o.rat;
        srt += o.srt;
        return *this;
    }
    Coeff& operator-=(const Coeff& o) {
        rat -= o.rat;
        srt -= o.srt;
        return *this;
    }

    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }

    friend Coeff operator*(const Coeff& a, const Coeff& b) {
        GaussianRational two(Rational(2));
        return {a.rat * b.rat + two * a.srt * b.srt, a.rat * b.srt + a.srt * b.rat};
    }

    friend Coeff operator/(const Coeff& a, const Coeff& b) {
        // 1/(u + v*sqrt2) = (u - v*sqrt2)/(u^2 - 2 v^2); the norm vanishes
        // only for u = v = 0 since sqrt2 is irrational over Q(i).
        GaussianRational two(Rational(2));
        GaussianRational norm = b.rat * b.rat - two * b.srt * b.srt;
        if (norm.is_zero()) throw NumericalFailure("Coeff division by zero");
        Coeff n = a * Coeff{b.rat, -b.srt};
        return {n.rat / norm, n.srt / norm};
    }

    friend bool operator==(const Coeff& a, const Coeff& b) {
        return a.rat == b.rat && a.srt == b.srt;
    }

    std::complex<double> to_complex() const {
        constexpr double kSqrt2 = 1.4142135623730950488;
        return rat.to_complex() + kSqrt2 * srt.to_complex();
    }

    std::string to_string() const;
};

std::string rational_to_string(const Rational& r);
std::string gaussian_to_string(const GaussianRational& g);

} // namespace qmetric

#endif
