#include "qmetric/rational.hpp"

namespace qmetric {

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

std::string gaussian_to_string(const GaussianRational& g) {
    if (g.im == 0) return rational_to_string(g.re);
    std::string im = rational_to_string(g.im) + "·i";
    if (g.re == 0) return im;
    if (g.im > 0) return rational_to_string(g.re) + " + " + im;
    return rational_to_string(g.re) + " - " + rational_to_string(-g.im) + "·i";
}

std::string Coeff::to_string() const {
    if (srt.is_zero()) return gaussian_to_string(rat);
    std::string s = "(" + gaussian_to_string(srt) + ")·√2";
    if (rat.is_zero()) return s;
    return "(" + gaussian_to_string(rat) + ") + " + s;
}

} // namespace qmetric
