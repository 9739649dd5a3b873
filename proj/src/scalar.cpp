#include "leibrack/scalar.hpp"

#include <cctype>
#include <cstddef>

namespace leibrack {

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_string(const GaussianRational& x) {
    if (is_zero(x.im)) return to_string(x.re);
    std::string im_mag = Rational(abs(x.im)).get_str();
    std::string im_part = (im_mag == "1") ? "i" : im_mag + "i";
    if (is_zero(x.re)) return (sgn(x.im) < 0 ? "-" : "") + im_part;
    return to_string(x.re) + (sgn(x.im) < 0 ? "-" : "+") + im_part;
}

namespace {

// One signed fraction with optional trailing 'i': "-3/4i", "7", "i".
// Returns the number of consumed characters, 0 on failure.
struct Term {
    Rational value;
    bool imaginary = false;
};

std::size_t parse_term(const std::string& s, std::size_t pos, Term& out) {
    std::size_t p = pos;
    bool neg = false;
    if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
        neg = s[p] == '-';
        ++p;
    }
    std::string digits;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) digits += s[p++];
    std::string denom;
    if (p < s.size() && s[p] == '/') {
        ++p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) denom += s[p++];
        if (denom.empty()) return 0;
    }
    bool imag = false;
    if (p < s.size() && s[p] == 'i') {
        imag = true;
        ++p;
    }
    if (digits.empty()) {
        // bare "i" / "-i"
        if (!imag) return 0;
        digits = "1";
    }
    Integer num(digits);
    Integer den = denom.empty() ? Integer(1) : Integer(denom);
    if (den == 0) return 0;
    out.value = rat(neg ? Integer(-num) : num, den);
    out.imaginary = imag;
    return p - pos;
}

}  // namespace

GaussianRational parse_gaussian(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw input_error("empty scalar literal");

    GaussianRational acc;
    bool seen_re = false, seen_im = false;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (pos > 0 && s[pos] != '+' && s[pos] != '-')
            throw input_error("malformed scalar literal: '" + text + "'");
        Term t;
        std::size_t used = parse_term(s, pos, t);
        if (used == 0) throw input_error("malformed scalar literal: '" + text + "'");
        if (t.imaginary) {
            if (seen_im) throw input_error("malformed scalar literal: '" + text + "'");
            seen_im = true;
            acc.im += t.value;
        } else {
            if (seen_re) throw input_error("malformed scalar literal: '" + text + "'");
            seen_re = true;
            acc.re += t.value;
        }
        pos += used;
    }
    return acc;
}

Rational parse_rational(const std::string& text) {
    GaussianRational g = parse_gaussian(text);
    if (!is_zero(g.im)) throw input_error("expected a rational, got '" + text + "'");
    return g.re;
}

}  // namespace leibrack
