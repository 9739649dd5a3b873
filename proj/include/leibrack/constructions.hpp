#pragma once

// Structured matrix constructors: companion and Jordan blocks and the
// realification of Gaussian-rational scalars and Jordan blocks.

#include <cstddef>

#include "leibrack/matrix.hpp"
#include "leibrack/polynomial.hpp"

namespace leibrack {

// Companion matrix of f(x)^k: ones on the subdiagonal, last column the
// negated coefficients of f^k with the constant term in row 1.
// Its characteristic and minimal polynomials both equal f^k.
template <typename K>
Matrix<K> companion_matrix(const Polynomial<K>& f, std::size_t k) {
    if (f.degree() < 1) throw precondition_error("companion matrix needs a nonconstant polynomial");
    if (!(f.leading() == K(1))) throw precondition_error("companion matrix needs a monic polynomial");
    if (k < 1) throw precondition_error("companion matrix needs k >= 1");
    Polynomial<K> p = f.pow(k);
    const std::size_t m = static_cast<std::size_t>(p.degree());
    Matrix<K> a(m, m);
    for (std::size_t i = 0; i + 1 < m; ++i) a.at(i + 1, i) = K(1);
    for (std::size_t i = 0; i < m; ++i) a.at(i, m - 1) = -p.coeff(i);
    return a;
}

// Lower-triangular Jordan block: a on the diagonal, ones on the subdiagonal.
template <typename K>
Matrix<K> jordan_block(const K& a, std::size_t k) {
    if (k < 1) throw precondition_error("jordan block needs k >= 1");
    Matrix<K> j(k, k);
    for (std::size_t i = 0; i < k; ++i) j.at(i, i) = a;
    for (std::size_t i = 0; i + 1 < k; ++i) j.at(i + 1, i) = K(1);
    return j;
}

// Matrix of multiplication by z on Q(i) viewed as a 2-dimensional Q-space
// with basis (1, i) acting on column coordinates.
inline Matrix<Rational> realify(const GaussianRational& z) {
    Matrix<Rational> m(2, 2);
    m.at(0, 0) = z.re;
    m.at(0, 1) = z.im;
    m.at(1, 0) = -z.im;
    m.at(1, 1) = z.re;
    return m;
}

// Realified Jordan block: 2x2 realifications of z on the block diagonal,
// 2x2 identities on the block subdiagonal. Size 2k x 2k.
inline Matrix<Rational> realified_jordan(const GaussianRational& z, std::size_t k) {
    if (k < 1) throw precondition_error("realified jordan block needs k >= 1");
    Matrix<Rational> m(2 * k, 2 * k);
    Matrix<Rational> r = realify(z);
    for (std::size_t b = 0; b < k; ++b) {
        m.set_block(2 * b, 2 * b, r);
        if (b + 1 < k) m.set_block(2 * (b + 1), 2 * b, Matrix<Rational>::identity(2));
    }
    return m;
}

}  // namespace leibrack
