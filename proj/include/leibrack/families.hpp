#pragma once

// Named constructors for the classified algebra families (Heisenberg with a
// general / Jordan / realified-Jordan parameter matrix, Kronecker, Dieudonne,
// classical Heisenberg, realified complex Heisenberg) and the small-dimension
// isomorphism predicates with explicit witnesses.

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "leibrack/algebra.hpp"
#include "leibrack/constructions.hpp"
#include "leibrack/error.hpp"
#include "leibrack/matrix.hpp"
#include "leibrack/scalar.hpp"

namespace leibrack {

// Central extension of an abelian space by the bilinear form phi: the bracket
// is [e_i, e_j] = phi(i, j) h with h appended as the last basis vector.
template <typename K>
LeibnizAlgebra<K> central_extension(const Matrix<K>& phi, std::string name = "") {
    if (phi.rows() != phi.cols()) throw precondition_error("form matrix must be square");
    const std::size_t m = phi.rows();
    LeibnizAlgebra<K> L(m + 1, std::move(name));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) L.c(i, j, m) = phi.at(i, j);
    return L;
}

// Basis (e_1..e_n, f_1..f_n, h); [e_i, f_j] = (delta_ij + a_ij) h and
// [f_j, e_i] = (-delta_ij + a_ij) h, everything else zero. Dimension 2n+1.
template <typename K>
LeibnizAlgebra<K> heisenberg_leibniz(const Matrix<K>& A, std::string name = "") {
    if (A.rows() != A.cols()) throw precondition_error("parameter matrix must be square");
    const std::size_t n = A.rows();
    Matrix<K> phi(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        phi.at(i, n + i) = K(1);
        phi.at(n + i, i) = K(-1);
        for (std::size_t j = 0; j < n; ++j) {
            phi.at(i, n + j) = phi.at(i, n + j) + A.at(i, j);
            phi.at(n + j, i) = phi.at(n + j, i) + A.at(i, j);
        }
    }
    return central_extension(phi, std::move(name));
}

template <typename K = Rational>
LeibnizAlgebra<K> classical_heisenberg(std::size_t n) {
    return heisenberg_leibniz(Matrix<K>(n, n), "h_" + std::to_string(2 * n + 1));
}

template <typename K>
LeibnizAlgebra<K> heisenberg_jordan(const K& a, std::size_t k) {
    return heisenberg_leibniz(jordan_block(a, k),
                              "l_" + std::to_string(2 * k + 1) + "^J");
}

// Dimension 4k+1; requires a genuinely complex eigenvalue, the real case is
// heisenberg_jordan.
inline LeibnizAlgebra<Rational> heisenberg_real_jordan(const GaussianRational& z, std::size_t k) {
    if (z.im == Rational(0))
        throw precondition_error("eigenvalue is real; use the plain Jordan constructor");
    return heisenberg_leibniz(realified_jordan(z, k), "l_" + std::to_string(4 * k + 1) + "^JR");
}

// Kronecker algebra of dimension 2n+1: basis (e_1..e_n, f_1..f_n, h), form
// blocks A + I and -A^t + I with A the companion matrix of x^n.
template <typename K = Rational>
LeibnizAlgebra<K> kronecker_algebra(std::size_t n) {
    if (n == 0) throw precondition_error("kronecker algebra needs n >= 1");
    Matrix<K> A = companion_matrix(Polynomial<K>::x(), n);
    Matrix<K> phi(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        phi.at(i, n + i) = K(1);
        phi.at(n + i, i) = K(1);
        for (std::size_t j = 0; j < n; ++j) {
            phi.at(i, n + j) = phi.at(i, n + j) + A.at(i, j);
            phi.at(n + j, i) = phi.at(n + j, i) - A.at(i, j);
        }
    }
    return central_extension(phi, "k_" + std::to_string(n));
}

// Dieudonne algebra of dimension 2n+2: basis (e_1..e_{2n+1}, h), form blocks
// built from the two shift embeddings F^n -> F^{n+1}.
template <typename K = Rational>
LeibnizAlgebra<K> dieudonne_algebra(std::size_t n) {
    if (n == 0) throw precondition_error("dieudonne algebra needs n >= 1");
    const std::size_t m = 2 * n + 1;
    Matrix<K> phi(m, m);
    for (std::size_t j = 0; j < n; ++j) {
        // alpha blocks J1 = [I; 0], sigma blocks J2 = [0; I]
        phi.at(j, n + 1 + j) = phi.at(j, n + 1 + j) + K(1);
        phi.at(n + 1 + j, j) = phi.at(n + 1 + j, j) - K(1);
        phi.at(j + 1, n + 1 + j) = phi.at(j + 1, n + 1 + j) + K(1);
        phi.at(n + 1 + j, j + 1) = phi.at(n + 1 + j, j + 1) + K(1);
    }
    return central_extension(phi, "d_" + std::to_string(n));
}

// Scalar restriction along Q(i)/Q: each basis vector v contributes the pair
// (v, iv), so the result has twice the dimension, with interleaved basis
// (v_1, i v_1, v_2, i v_2, ...).
inline LeibnizAlgebra<Rational> realify_algebra(const LeibnizAlgebra<GaussianRational>& L,
                                                std::string name = "") {
    const std::size_t n = L.dim();
    LeibnizAlgebra<Rational> R(2 * n, std::move(name));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const GaussianRational& c = L.c(i, j, k);
                if (c == GaussianRational(0)) continue;
                // [v_i, v_j] = c v_k, and i-multiples scale by i or i^2 = -1
                R.c(2 * i, 2 * j, 2 * k) = c.re;
                R.c(2 * i, 2 * j, 2 * k + 1) = c.im;
                R.c(2 * i + 1, 2 * j, 2 * k) = -c.im;
                R.c(2 * i + 1, 2 * j, 2 * k + 1) = c.re;
                R.c(2 * i, 2 * j + 1, 2 * k) = -c.im;
                R.c(2 * i, 2 * j + 1, 2 * k + 1) = c.re;
                R.c(2 * i + 1, 2 * j + 1, 2 * k) = -c.re;
                R.c(2 * i + 1, 2 * j + 1, 2 * k + 1) = -c.im;
            }
    return R;
}

// Dimension 4n+2, two-dimensional commutator ideal spanned by the images of
// the central line and its i-multiple.
inline LeibnizAlgebra<Rational> realified_complex_heisenberg(const GaussianRational& a,
                                                             std::size_t n) {
    if (n == 0) throw precondition_error("realified complex heisenberg needs n >= 1");
    return realify_algebra(heisenberg_jordan(a, n),
                           "rh_" + std::to_string(4 * n + 2));
}

// Isomorphism predicate for the dim-3 family: true exactly when the
// parameters agree up to sign, with an explicit bracket-preserving witness.
template <typename K>
std::optional<Matrix<K>> iso_l3(const K& a, const K& b) {
    if (a == b) return Matrix<K>::identity(3);
    if (b == -a) {
        Matrix<K> w(3, 3);
        w.at(0, 1) = K(1);
        w.at(1, 0) = K(1);
        w.at(2, 2) = K(-1);
        return w;
    }
    return std::nullopt;
}

// Isomorphism predicate for the dim-5 real family, parametrized by the 2x2
// realification of a non-real eigenvalue: true exactly when R' is R or its
// transpose up to sign. R and R^t realify conjugate eigenvalues and are
// similar matrices, so they parametrize congruent pencils; the sign flip
// reflects the characteristic polynomial.
inline bool iso_l5(const Matrix<Rational>& R1, const Matrix<Rational>& R2) {
    auto check = [](const Matrix<Rational>& R) {
        if (R.rows() != 2 || R.cols() != 2 || !(R.at(1, 1) == R.at(0, 0)) ||
            !(R.at(1, 0) == -R.at(0, 1)))
            throw precondition_error("matrix is not the realification of a complex number");
        if (R.at(0, 1) == Rational(0))
            throw precondition_error("realified eigenvalue must not be real");
    };
    check(R1);
    check(R2);
    Matrix<Rational> t = R2.transpose();
    return R1 == R2 || R1 == R2 * Rational(-1) || R1 == t || R1 == t * Rational(-1);
}

using AnyAlgebra = std::variant<LeibnizAlgebra<Rational>, LeibnizAlgebra<GaussianRational>>;

// Serializable constructor request used by the command-line driver.
struct FamilySpec {
    std::string family;         // heisenberg | heisenberg-jordan | heisenberg-real-jordan |
                                // kronecker | dieudonne | classical-heisenberg |
                                // realified-complex-heisenberg
    GaussianRational a{};       // scalar parameter
    std::size_t k = 1;
    std::size_t n = 1;
    std::optional<Matrix<GaussianRational>> matrix;  // heisenberg only
    bool gaussian_field = false;
};

inline Rational require_rational(const GaussianRational& a) {
    if (!(a.im == Rational(0)))
        throw precondition_error("parameter has a nonzero imaginary part over field Q");
    return a.re;
}

inline AnyAlgebra build_family(const FamilySpec& spec) {
    auto rational_matrix = [](const Matrix<GaussianRational>& m) {
        Matrix<Rational> out(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = require_rational(m.at(i, j));
        return out;
    };
    if (spec.family == "heisenberg") {
        if (!spec.matrix) throw precondition_error("heisenberg family needs a parameter matrix");
        if (spec.gaussian_field) return heisenberg_leibniz(*spec.matrix, "l^A");
        return heisenberg_leibniz(rational_matrix(*spec.matrix), "l^A");
    }
    if (spec.family == "heisenberg-jordan") {
        if (spec.gaussian_field) return heisenberg_jordan(spec.a, spec.k);
        return heisenberg_jordan(require_rational(spec.a), spec.k);
    }
    if (spec.family == "heisenberg-real-jordan") return heisenberg_real_jordan(spec.a, spec.k);
    if (spec.family == "kronecker") {
        if (spec.gaussian_field) return kronecker_algebra<GaussianRational>(spec.n);
        return kronecker_algebra<Rational>(spec.n);
    }
    if (spec.family == "dieudonne") {
        if (spec.gaussian_field) return dieudonne_algebra<GaussianRational>(spec.n);
        return dieudonne_algebra<Rational>(spec.n);
    }
    if (spec.family == "classical-heisenberg") {
        if (spec.gaussian_field) return classical_heisenberg<GaussianRational>(spec.n);
        return classical_heisenberg<Rational>(spec.n);
    }
    if (spec.family == "realified-complex-heisenberg")
        return realified_complex_heisenberg(spec.a, spec.n);
    throw precondition_error("unknown family '" + spec.family + "'");
}

}  // namespace leibrack
