#pragma once

// Univariate polynomials with exact field coefficients, stored dense,
// lowest degree first, with no trailing zero coefficients.

#include <cstddef>
#include <string>
#include <vector>

#include "leibrack/error.hpp"
#include "leibrack/scalar.hpp"

namespace leibrack {

template <typename K>
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(int c) { set_constant(K(c)); }  // NOLINT: implicit by design
    Polynomial(const K& c) { set_constant(c); }  // NOLINT

    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial x() { return Polynomial(std::vector<K>{K(0), K(1)}); }

    // x - a
    static Polynomial linear(const K& a) { return Polynomial(std::vector<K>{-a, K(1)}); }

    const std::vector<K>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const K& leading() const {
        if (c_.empty()) throw dimension_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == K(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                K t = a.c_[i] * b.c_[j];
                r[i + j] += t;
            }
        }
        return Polynomial(std::move(r));
    }

    Polynomial operator*(const K& s) const {
        Polynomial r = *this;
        for (auto& v : r.c_) v *= s;
        r.trim();
        return r;
    }

    K eval(const K& x) const {
        K acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            K t = acc * x + c_[i];
            acc = t;
        }
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<K> r(c_.size() - 1, K(0));
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<int>(i));
        return Polynomial(std::move(r));
    }

    // p(-x)
    Polynomial reflect() const {
        Polynomial r = *this;
        for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        K inv = K(1) / leading();
        return *this * inv;
    }

    Polynomial pow(std::size_t e) const {
        Polynomial r(1), base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

  private:
    void set_constant(const K& c) {
        if (!(c == K(0))) c_.push_back(c);
    }
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }

    std::vector<K> c_;
};

template <typename K>
void divmod(const Polynomial<K>& a, const Polynomial<K>& b, Polynomial<K>& q, Polynomial<K>& r) {
    if (b.is_zero()) throw singular_error("polynomial division by zero");
    std::vector<K> rem(a.coeffs());
    const int db = b.degree();
    std::vector<K> quot;
    if (static_cast<int>(rem.size()) - 1 >= db) quot.assign(rem.size() - db, K(0));
    K lead_inv = K(1) / b.leading();
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        K f = rem[i] * lead_inv;
        if (f == K(0)) continue;
        quot[i - db] = f;
        for (int j = 0; j <= db; ++j) {
            K t = rem[i - db + j] - f * b.coeff(j);
            rem[i - db + j] = t;
        }
    }
    q = Polynomial<K>(std::move(quot));
    r = Polynomial<K>(std::move(rem));
}

template <typename K>
Polynomial<K> operator/(const Polynomial<K>& a, const Polynomial<K>& b) {
    Polynomial<K> q, r;
    divmod(a, b, q, r);
    return q;
}

template <typename K>
Polynomial<K> operator%(const Polynomial<K>& a, const Polynomial<K>& b) {
    Polynomial<K> q, r;
    divmod(a, b, q, r);
    return r;
}

template <typename K>
bool divides(const Polynomial<K>& d, const Polynomial<K>& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

// Monic gcd.
template <typename K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
    while (!b.is_zero()) {
        Polynomial<K> r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

// Monic g = gcd(a, b) together with s, t satisfying s*a + t*b = g.
template <typename K>
Polynomial<K> ext_gcd(const Polynomial<K>& a, const Polynomial<K>& b, Polynomial<K>& s,
                      Polynomial<K>& t) {
    Polynomial<K> r0 = a, r1 = b;
    Polynomial<K> s0(1), s1, t0, t1(1);
    while (!r1.is_zero()) {
        Polynomial<K> q, r;
        divmod(r0, r1, q, r);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial<K> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Polynomial<K> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = {};
        t = {};
        return {};
    }
    K inv = K(1) / r0.leading();
    s = s0 * inv;
    t = t0 * inv;
    return r0 * inv;
}

// Unique polynomial of degree < xs.size() through the points (xs[i], ys[i]),
// via Newton divided differences.
template <typename K>
Polynomial<K> interpolate(const std::vector<K>& xs, const std::vector<K>& ys) {
    if (xs.size() != ys.size()) throw dimension_error("interpolation data size mismatch");
    const std::size_t n = xs.size();
    if (n == 0) return {};
    std::vector<K> dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n; i-- > level;) {
            K den = xs[i] - xs[i - level];
            if (den == K(0)) throw precondition_error("interpolation nodes must be distinct");
            K t = (dd[i] - dd[i - 1]) / den;
            dd[i] = t;
        }
    Polynomial<K> p(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;)
        p = p * Polynomial<K>::linear(xs[i]) + Polynomial<K>(dd[i]);
    return p;
}

template <typename K>
Polynomial<K> conj(const Polynomial<K>& p) {
    std::vector<K> c = p.coeffs();
    for (auto& v : c) v = conj(v);
    return Polynomial<K>(std::move(c));
}

// Total order on polynomials: degree first, then coefficients from the
// highest degree down, using the scalar normalization order.
template <typename K>
int compare(const Polynomial<K>& a, const Polynomial<K>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        int c = compare(a.coeff(i), b.coeff(i));
        if (c != 0) return c;
    }
    return 0;
}

template <typename K>
std::string to_string(const Polynomial<K>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        K c = p.coeff(i);
        if (c == K(0)) continue;
        std::string cs = to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (neg) cs = cs.substr(1);
        bool needs_coeff = (cs != "1") || i == 0;
        if (cs.find('+') != std::string::npos || cs.find('-') != std::string::npos ||
            (cs.find('i') != std::string::npos && i > 0))
            cs = "(" + cs + ")";
        if (needs_coeff) out += cs;
        if (i > 0) {
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace leibrack
