#include <cctype>
#include <string>

#include "qmetric/weyl.hpp"

namespace qmetric::weyl {

namespace {

// Recursive-descent parser for sums of products of
//   number ("2", "23/288"), "i", "x"/"p" with optional "^k", "(expr)".
// Multiplication is implicit (whitespace or adjacency).
class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    XPExpression parse() {
        XPExpression e = expression();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

private:
    XPExpression expression() {
        skip_ws();
        bool neg = consume_sign();
        XPExpression acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
            bool minus = s_[pos_] == '-';
            ++pos_;
            XPExpression t = term();
            acc = acc + (minus ? -t : t);
        }
        return acc;
    }

    XPExpression term() {
        XPExpression prod = factor();
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            char c = s_[pos_];
            if (c == '+' || c == '-' || c == ')') break;
            prod = prod * factor();
        }
        return prod;
    }

    XPExpression factor() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            XPExpression e = expression();
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
            ++pos_;
            return e;
        }
        if (c == 'i') {
            ++pos_;
            return XPExpression::term(Coeff::i(), "");
        }
        if (c == 'x' || c == 'p') {
            ++pos_;
            unsigned k = 1;
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                k = static_cast<unsigned>(integer());
            }
            return XPExpression::term(Coeff(1), std::string(k, c));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = integer();
            long den = 1;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                den = integer();
            }
            return XPExpression::term(Coeff(Rational(num, den)), "");
        }
        fail(std::string("unexpected character '") + c + "'");
        return {};
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    bool consume_sign() {
        skip_ws();
        bool neg = false;
        while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            if (s_[pos_] == '-') neg = !neg;
            ++pos_;
            skip_ws();
        }
        return neg;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("xp expression at position " + std::to_string(pos_) + ": " + msg +
                         " in \"" + s_ + "\"");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

XPExpression parse_xp(const std::string& text) {
    return Parser(text).parse();
}

} // namespace qmetric::weyl
