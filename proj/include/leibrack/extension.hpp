#pragma once

// Arithmetic in K[t]/(f) for a monic irreducible modulus f. Elements share
// the modulus through a shared_ptr so that matrices of extension scalars
// work with the generic elimination routines; the constants those routines
// create (T(0), T(1)) carry no modulus and adopt one on first contact.

#include <memory>
#include <utility>

#include "leibrack/error.hpp"
#include "leibrack/polynomial.hpp"

namespace leibrack {

template <typename K>
class ExtScalar {
  public:
    using Modulus = std::shared_ptr<const Polynomial<K>>;

    ExtScalar() = default;
    ExtScalar(int c) : v_(c) {}  // NOLINT: implicit by design
    explicit ExtScalar(const K& c) : v_(c) {}
    ExtScalar(Polynomial<K> v, Modulus mod) : v_(std::move(v)), mod_(std::move(mod)) { reduce(); }

    static Modulus make_modulus(const Polynomial<K>& f) {
        if (f.degree() < 1) throw precondition_error("extension modulus must have degree >= 1");
        if (!(f.leading() == K(1))) throw precondition_error("extension modulus must be monic");
        return std::make_shared<const Polynomial<K>>(f);
    }

    // residue class of t
    static ExtScalar generator(Modulus mod) {
        return ExtScalar(Polynomial<K>::x(), std::move(mod));
    }

    const Polynomial<K>& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }

    bool operator==(const ExtScalar& o) const { return v_ == o.v_; }
    bool operator!=(const ExtScalar& o) const { return !(*this == o); }

    ExtScalar operator-() const { return ExtScalar(-v_, mod_); }

    friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
        return ExtScalar(a.v_ + b.v_, join(a, b));
    }
    friend ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) {
        return ExtScalar(a.v_ - b.v_, join(a, b));
    }
    friend ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
        return ExtScalar(a.v_ * b.v_, join(a, b));
    }
    friend ExtScalar operator/(const ExtScalar& a, const ExtScalar& b) { return a * b.inverse(); }

    ExtScalar& operator+=(const ExtScalar& o) { return *this = *this + o; }
    ExtScalar& operator-=(const ExtScalar& o) { return *this = *this - o; }
    ExtScalar& operator*=(const ExtScalar& o) { return *this = *this * o; }
    ExtScalar& operator/=(const ExtScalar& o) { return *this = *this / o; }

    ExtScalar inverse() const {
        if (v_.is_zero()) throw singular_error("division by zero extension scalar");
        if (!mod_) {
            if (v_.degree() != 0) throw internal_error("nonconstant extension scalar lacks a modulus");
            return ExtScalar(Polynomial<K>(K(1) / v_.coeff(0)), nullptr);
        }
        Polynomial<K> s, t;
        Polynomial<K> g = ext_gcd(v_, *mod_, s, t);
        // the monic gcd of a nonzero residue with an irreducible modulus is 1
        if (g.degree() != 0) throw precondition_error("extension modulus is not irreducible");
        return ExtScalar(std::move(s), mod_);
    }

  private:
    static Modulus join(const ExtScalar& a, const ExtScalar& b) {
        if (a.mod_ && b.mod_ && a.mod_ != b.mod_ && !(*a.mod_ == *b.mod_))
            throw internal_error("extension scalars with different moduli");
        return a.mod_ ? a.mod_ : b.mod_;
    }
    void reduce() {
        if (mod_ && v_.degree() >= mod_->degree()) v_ = v_ % *mod_;
    }

    Polynomial<K> v_;
    Modulus mod_;
};

}  // namespace leibrack
