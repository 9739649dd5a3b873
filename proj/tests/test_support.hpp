#pragma once

// Shared helpers for the test suites: seeded random generators bounded as
// documented in the README, plus independent reference implementations
// (cofactor determinants, Krylov minimal polynomials, gcd-of-minors
// invariant factors, brute-force congruence search) used as oracles
// against the library's elimination-based code paths.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "leibrack/matrix.hpp"
#include "leibrack/polynomial.hpp"
#include "leibrack/scalar.hpp"

namespace testsupport {

using leibrack::GaussianRational;
using leibrack::Matrix;
using leibrack::Polynomial;
using leibrack::Rational;

inline std::mt19937_64 make_rng(std::uint64_t seed = 20250814ULL) { return std::mt19937_64(seed); }

// Numerator and denominator magnitudes bounded by 100.
inline Rational random_rational(std::mt19937_64& rng, long num_bound = 100, long den_bound = 100) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return leibrack::rat(num(rng), den(rng));
}

inline Rational random_small_int(std::mt19937_64& rng, long bound = 2) {
    std::uniform_int_distribution<long> d(-bound, bound);
    return Rational(d(rng));
}

inline GaussianRational random_gaussian(std::mt19937_64& rng, long num_bound = 100, long den_bound = 100) {
    Rational re = random_rational(rng, num_bound, den_bound);
    Rational im = random_rational(rng, num_bound, den_bound);
    return GaussianRational(re, im);
}

template <typename K, typename Gen>
Matrix<K> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, Gen gen) {
    Matrix<K> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = gen(rng);
    return m;
}

// Invertible matrix with entries from gen, by rejection.
template <typename K, typename Gen>
Matrix<K> random_invertible(std::mt19937_64& rng, std::size_t n, Gen gen) {
    for (;;) {
        Matrix<K> m = random_matrix<K>(rng, n, n, gen);
        if (leibrack::rank(m) == n) return m;
    }
}

// Product of random integer elementary row operations; determinant +-1.
inline Matrix<Rational> random_unimodular(std::mt19937_64& rng, std::size_t n, std::size_t ops = 0) {
    if (ops == 0) ops = 3 * n;
    Matrix<Rational> m = Matrix<Rational>::identity(n);
    std::uniform_int_distribution<std::size_t> row(0, n - 1);
    std::uniform_int_distribution<long> coef(-2, 2);
    for (std::size_t k = 0; k < ops; ++k) {
        std::size_t i = row(rng), j = row(rng);
        if (i == j) continue;
        long c = coef(rng);
        for (std::size_t col = 0; col < n; ++col) {
            Rational t = m.at(i, col) + Rational(c) * m.at(j, col);
            m.at(i, col) = t;
        }
    }
    return m;
}

// Determinant by cofactor expansion along the first row: exponential,
// independent of elimination; works over any commutative ring.
template <typename T>
T det_cofactor(const Matrix<T>& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw leibrack::dimension_error("det of non-square");
    if (n == 0) return T(1);
    if (n == 1) return m.at(0, 0);
    T acc(0);
    std::vector<std::size_t> rows;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == T(0)) continue;
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        T minor = det_cofactor(m.submatrix(rows, cols));
        T term = m.at(0, j) * minor;
        if (j % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

// Characteristic polynomial det(xI - A) via cofactor expansion.
template <typename K>
Polynomial<K> char_poly_oracle(const Matrix<K>& a) {
    const std::size_t n = a.rows();
    Matrix<Polynomial<K>> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial<K> e(-a.at(i, j));
            if (i == j) e += Polynomial<K>::x();
            m.at(i, j) = e;
        }
    return det_cofactor(m);
}

// Least-squares-free linear solve: x with A x = b, if consistent.
template <typename K>
std::optional<std::vector<K>> solve_linear(const Matrix<K>& a, const std::vector<K>& b) {
    Matrix<K> aug(a.rows(), a.cols() + 1);
    aug.set_block(0, 0, a);
    for (std::size_t i = 0; i < a.rows(); ++i) aug.at(i, a.cols()) = b[i];
    std::vector<std::size_t> pivots = leibrack::rref(aug);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] == a.cols()) return std::nullopt;  // inconsistent
    std::vector<K> x(a.cols(), K(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
    return x;
}

// Minimal polynomial via Krylov dependence of vectorized powers of A.
template <typename K>
Polynomial<K> min_poly_oracle(const Matrix<K>& a) {
    const std::size_t n = a.rows();
    std::vector<Matrix<K>> powers{Matrix<K>::identity(n)};
    for (std::size_t m = 1;; ++m) {
        powers.push_back(powers.back() * a);
        Matrix<K> stacked(n * n, m);
        for (std::size_t c = 0; c < m; ++c)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) stacked.at(i * n + j, c) = powers[c].at(i, j);
        std::vector<K> rhs(n * n, K(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rhs[i * n + j] = powers[m].at(i, j);
        if (auto x = solve_linear(stacked, rhs)) {
            std::vector<K> coeffs(m + 1, K(0));
            for (std::size_t i = 0; i < m; ++i) coeffs[i] = -(*x)[i];
            coeffs[m] = K(1);
            return Polynomial<K>(std::move(coeffs));
        }
    }
}

// Invariant factors as quotients of gcds of k x k minors; exponential,
// independent of the elimination-based Smith form.
template <typename K>
std::vector<Polynomial<K>> smith_minors_oracle(const Matrix<Polynomial<K>>& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<Polynomial<K>> gcds;  // gcds[k-1] = gcd of k x k minors
    for (std::size_t k = 1; k <= std::min(R, C); ++k) {
        Polynomial<K> g;
        std::vector<std::size_t> ri(k), ci(k);
        for (std::size_t i = 0; i < k; ++i) ri[i] = i;
        auto next_subset = [](std::vector<std::size_t>& idx, std::size_t n) {
            const std::size_t kk = idx.size();
            for (std::size_t i = kk; i-- > 0;) {
                if (idx[i] < n - kk + i) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < kk; ++j) idx[j] = idx[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        do {
            for (std::size_t i = 0; i < k; ++i) ci[i] = i;
            do {
                Polynomial<K> minor = det_cofactor(m.submatrix(ri, ci));
                if (!minor.is_zero()) g = gcd(g, minor);
            } while (next_subset(ci, C));
        } while (next_subset(ri, R));
        if (g.is_zero()) break;
        gcds.push_back(g);
    }
    std::vector<Polynomial<K>> inv;
    for (std::size_t k = 0; k < gcds.size(); ++k)
        inv.push_back(k == 0 ? gcds[0] : gcds[k] / gcds[k - 1]);
    return inv;
}

}  // namespace testsupport
