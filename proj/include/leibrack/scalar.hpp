#pragma once

// Exact scalar arithmetic for the two ground fields of the library:
// the rationals Q (GMP mpq_class) and the Gaussian rationals Q(i).
// Every scalar is kept in canonical reduced form.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "leibrack/error.hpp"

namespace leibrack {

using Rational = mpq_class;
using Integer = mpz_class;

// Reduced fraction n/d with d > 0.
inline Rational rat(long n, long d = 1) {
    if (d == 0) throw input_error("rational with zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& n, const Integer& d) {
    if (d == 0) throw input_error("rational with zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational conj(const Rational& x) { return x; }

// True iff x = y*y for some rational y; writes the nonnegative root.
inline bool rational_sqrt(const Rational& x, Rational& root) {
    if (sgn(x) < 0) return false;
    const Integer num = x.get_num(), den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = rat(rn, rd);
    return true;
}

// Element of Q(i), componentwise reduced.
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(int n) : re(n), im(0) {}           // NOLINT: implicit by design
    GaussianRational(const Rational& r) : re(r), im(0) {}  // NOLINT
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    GaussianRational operator-() const { return {Rational(-re), Rational(-im)}; }

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
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = r;
        im = i;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n = o.re * o.re + o.im * o.im;
        if (is_zero(n)) throw singular_error("division by zero in Q(i)");
        Rational r = (re * o.re + im * o.im) / n;
        Rational i = (im * o.re - re * o.im) / n;
        re = r;
        im = i;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
};

inline bool is_zero(const GaussianRational& x) { return is_zero(x.re) && is_zero(x.im); }
inline GaussianRational conj(const GaussianRational& x) { return {x.re, Rational(-x.im)}; }
inline Rational norm(const GaussianRational& x) { return x.re * x.re + x.im * x.im; }

// Total orders used only for canonical normalization and sorting, not algebra.
inline int compare(const Rational& a, const Rational& b) { return cmp(a, b); }
inline int compare(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c;
    return cmp(a.im, b.im);
}

template <typename K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static constexpr const char* name = "Q";
    static constexpr bool is_complex = false;
};

template <>
struct FieldTraits<GaussianRational> {
    static constexpr const char* name = "Qi";
    static constexpr bool is_complex = true;
};

std::string to_string(const Rational& x);
std::string to_string(const GaussianRational& x);

// Parses "-3/2" style rational literals. Throws input_error on garbage.
Rational parse_rational(const std::string& text);

// Parses Gaussian rational literals: "2", "-1/2", "i", "-i", "1+i",
// "2-i", "1/2-3/4i", "3i". Throws input_error on garbage.
GaussianRational parse_gaussian(const std::string& text);

}  // namespace leibrack
