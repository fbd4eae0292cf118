#include "qmetric/weyl.hpp"

#include <algorithm>
#include <sstream>

namespace qmetric::weyl {

// ---- NumberPolynomial -------------------------------------------------

void NumberPolynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

NumberPolynomial NumberPolynomial::constant(Coeff c) {
    return NumberPolynomial({std::move(c)});
}

NumberPolynomial NumberPolynomial::variable() {
    return NumberPolynomial({Coeff(0), Coeff(1)});
}

Coeff NumberPolynomial::evaluate(unsigned long n) const {
    Coeff acc;
    Coeff pw(1);
    Coeff nn(Rational(static_cast<long>(n)));
    for (const Coeff& c : c_) {
        acc += c * pw;
        pw = pw * nn;
    }
    return acc;
}

bool NumberPolynomial::has_real_coefficients() const {
    return std::all_of(c_.begin(), c_.end(), [](const Coeff& c) {
        return c.rat.im == 0 && c.srt.im == 0;
    });
}

NumberPolynomial NumberPolynomial::operator-() const {
    std::vector<Coeff> r;
    r.reserve(c_.size());
    for (const Coeff& c : c_) r.push_back(-c);
    return NumberPolynomial(std::move(r));
}

NumberPolynomial operator+(const NumberPolynomial& a, const NumberPolynomial& b) {
    std::vector<Coeff> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
    return NumberPolynomial(std::move(r));
}

NumberPolynomial operator-(const NumberPolynomial& a, const NumberPolynomial& b) {
    return a + (-b);
}

NumberPolynomial operator*(const NumberPolynomial& a, const NumberPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return NumberPolynomial(std::move(r));
}

NumberPolynomial operator*(const Coeff& s, const NumberPolynomial& p) {
    std::vector<Coeff> r;
    r.reserve(p.c_.size());
    for (const Coeff& c : p.c_) r.push_back(s * c);
    return NumberPolynomial(std::move(r));
}

std::string NumberPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[k].to_string() << ")";
        if (k == 1) os << "·n";
        if (k > 1) os << "·n^" << k;
    }
    return os.str();
}

// ---- WeylPolynomial ---------------------------------------------------

WeylPolynomial WeylPolynomial::monomial(unsigned m, unsigned n, Coeff c) {
    WeylPolynomial p;
    p.add_term(m, n, c);
    return p;
}

void WeylPolynomial::add_term(unsigned m, unsigned n, const Coeff& c) {
    if (c.is_zero()) return;
    auto key = Key{m, n};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

unsigned WeylPolynomial::degree() const {
    unsigned d = 0;
    for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
    return d;
}

bool WeylPolynomial::is_diagonal() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.first == t.first.second; });
}

bool WeylPolynomial::has_rational_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_rational(); });
}

WeylPolynomial WeylPolynomial::operator-() const {
    WeylPolynomial r;
    for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
    return r;
}

WeylPolynomial& WeylPolynomial::operator+=(const WeylPolynomial& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

WeylPolynomial& WeylPolynomial::operator-=(const WeylPolynomial& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

WeylPolynomial operator*(const Coeff& s, const WeylPolynomial& p) {
    WeylPolynomial r;
    if (s.is_zero()) return r;
    for (const auto& [key, c] : p.terms()) r.add_term(key.first, key.second, s * c);
    return r;
}

std::string WeylPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Key, Coeff>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        unsigned da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da < db;
        return a.first.first < b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : sorted) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (key.first == 1) os << "·a+";
        if (key.first > 1) os << "·a+^" << key.first;
        if (key.second == 1) os << "·a";
        if (key.second > 1) os << "·a^" << key.second;
    }
    return os.str();
}

WeylPolynomial multiply(const WeylPolynomial& lhs, const WeylPolynomial& rhs) {
    WeylPolynomial out;
    for (const auto& [kl, cl] : lhs.terms()) {
        const auto [m1, n1] = kl;
        for (const auto& [kr, cr] : rhs.terms()) {
            const auto [m2, n2] = kr;
            Coeff c = cl * cr;
            // a^n1 a+^m2 = sum_k k! C(n1,k) C(m2,k) a+^(m2-k) a^(n1-k)
            unsigned kmax = std::min(n1, m2);
            for (unsigned k = 0; k <= kmax; ++k) {
                Integer w = factorial(k) * binomial(n1, k) * binomial(m2, k);
                Coeff term = Coeff(Rational(w)) * c;
                out.add_term(m1 + m2 - k, n1 + n2 - k, term);
            }
        }
    }
    return out;
}

WeylPolynomial adjoint(const WeylPolynomial& p) {
    WeylPolynomial r;
    for (const auto& [key, c] : p.terms()) r.add_term(key.second, key.first, c.conj());
    return r;
}

WeylPolynomial commutator(const WeylPolynomial& lhs, const WeylPolynomial& rhs) {
    return multiply(lhs, rhs) - multiply(rhs, lhs);
}

WeylPolynomial diagonal_part(const WeylPolynomial& p) {
    WeylPolynomial r;
    for (const auto& [key, c] : p.terms())
        if (key.first == key.second) r.add_term(key.first, key.second, c);
    return r;
}

namespace {

// n(n-1)...(n-k+1) as a polynomial in n.
NumberPolynomial falling_factorial_poly(unsigned k) {
    NumberPolynomial p = NumberPolynomial::constant(Coeff(1));
    for (unsigned j = 0; j < k; ++j) {
        NumberPolynomial factor =
            NumberPolynomial::variable() - NumberPolynomial::constant(Coeff(Rational(static_cast<long>(j))));
        p = p * factor;
    }
    return p;
}

} // namespace

NumberPolynomial diagonal_as_number_polynomial(const WeylPolynomial& p) {
    NumberPolynomial e;
    for (const auto& [key, c] : p.terms()) {
        if (key.first != key.second)
            throw NotDiagonal("diagonal_as_number_polynomial: off-diagonal term a+^" +
                              std::to_string(key.first) + " a^" + std::to_string(key.second));
        e = e + c * falling_factorial_poly(key.first);
    }
    return e;
}

WeylPolynomial number_polynomial_to_operator(const NumberPolynomial& e) {
    // Peel off the leading coefficient against the matching falling factorial.
    WeylPolynomial out;
    NumberPolynomial rest = e;
    while (!rest.is_zero()) {
        unsigned k = static_cast<unsigned>(rest.degree());
        Coeff lead = rest.coeff(k);  // falling factorial ff_k is monic
        out.add_term(k, k, lead);
        rest = rest - lead * falling_factorial_poly(k);
        if (!rest.is_zero() && rest.degree() >= static_cast<int>(k))
            throw NumericalFailure("number_polynomial_to_operator: reduction did not lower degree");
    }
    return out;
}

WeylPolynomial ad_h0_solve(const WeylPolynomial& y) {
    WeylPolynomial x;
    for (const auto& [key, c] : y.terms()) {
        long diff = static_cast<long>(key.first) - static_cast<long>(key.second);
        if (diff == 0)
            throw DiagonalObstruction("ad_h0_solve: right side has a diagonal term a+^" +
                                      std::to_string(key.first) + " a^" + std::to_string(key.second));
        x.add_term(key.first, key.second, c / Coeff(Rational(diff)));
    }
    return x;
}

// ---- x,p conversion ---------------------------------------------------

XPExpression XPExpression::term(Coeff c, const std::string& ops) {
    return XPExpression({XPWord{std::move(c), ops}});
}

XPExpression XPExpression::operator-() const {
    std::vector<XPWord> w = words_;
    for (XPWord& word : w) word.coeff = -word.coeff;
    return XPExpression(std::move(w));
}

XPExpression operator+(const XPExpression& a, const XPExpression& b) {
    std::vector<XPWord> w = a.words_;
    w.insert(w.end(), b.words_.begin(), b.words_.end());
    return XPExpression(std::move(w));
}

XPExpression operator*(const XPExpression& a, const XPExpression& b) {
    std::vector<XPWord> w;
    w.reserve(a.words_.size() * b.words_.size());
    for (const XPWord& wa : a.words_)
        for (const XPWord& wb : b.words_)
            w.push_back(XPWord{wa.coeff * wb.coeff, wa.ops + wb.ops});
    return XPExpression(std::move(w));
}

WeylPolynomial from_xp(const XPExpression& e) {
    // x = (a + a+)·(sqrt2/2),  p = (a - a+)·(-i)·(sqrt2/2)
    const Coeff half_sqrt2{GaussianRational(0), GaussianRational(Rational(1, 2))};
    WeylPolynomial x_op = half_sqrt2 * (WeylPolynomial::annihilation() + WeylPolynomial::creation());
    WeylPolynomial p_op = (-Coeff::i() * half_sqrt2) *
                          (WeylPolynomial::annihilation() - WeylPolynomial::creation());

    WeylPolynomial out;
    for (const XPWord& w : e.words()) {
        WeylPolynomial prod = WeylPolynomial::identity();
        for (char op : w.ops) prod = multiply(prod, op == 'x' ? x_op : p_op);
        out += w.coeff * prod;
    }
    return out;
}

WeylPolynomial from_xp(const std::string& text) {
    return from_xp(parse_xp(text));
}

} // namespace qmetric::weyl
