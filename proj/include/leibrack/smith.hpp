#pragma once

// Smith normal form over K[x] for exact field scalars K. Only the
// invariant factors are needed by the classification pipeline, so the
// transforms are not tracked.

#include <cstddef>
#include <vector>

#include "leibrack/matrix.hpp"
#include "leibrack/polynomial.hpp"

namespace leibrack {

template <typename K>
using PolyMatrix = Matrix<Polynomial<K>>;

namespace detail {

template <typename K>
void add_row_multiple(PolyMatrix<K>& m, std::size_t dst, std::size_t src, const Polynomial<K>& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Polynomial<K> t = m.at(dst, j) + f * m.at(src, j);
        m.at(dst, j) = t;
    }
}

template <typename K>
void add_col_multiple(PolyMatrix<K>& m, std::size_t dst, std::size_t src, const Polynomial<K>& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Polynomial<K> t = m.at(i, dst) + f * m.at(i, src);
        m.at(i, dst) = t;
    }
}

template <typename K>
void swap_rows(PolyMatrix<K>& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

template <typename K>
void swap_cols(PolyMatrix<K>& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace detail

// Monic invariant factors d_1 | d_2 | ... | d_r of m, where r is the rank
// of m over K(x). Unit factors are reported as the constant 1.
template <typename K>
std::vector<Polynomial<K>> smith_invariant_factors(PolyMatrix<K> m) {
    using detail::add_col_multiple;
    using detail::add_row_multiple;
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<Polynomial<K>> inv;
    for (std::size_t t = 0; t < R && t < C; ++t) {
        // Pivot: lowest-degree nonzero entry of the trailing block,
        // ties broken in row-major order.
        std::size_t pi = R, pj = C;
        int best = -1;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j) {
                const Polynomial<K>& e = m.at(i, j);
                if (e.is_zero()) continue;
                if (best < 0 || e.degree() < best) {
                    best = e.degree();
                    pi = i;
                    pj = j;
                }
            }
        if (best < 0) break;  // trailing block is zero
        detail::swap_rows(m, t, pi);
        detail::swap_cols(m, t, pj);

        for (bool settled = false; !settled;) {
            settled = true;
            // Clear the pivot column; a nonzero remainder has strictly
            // smaller degree and becomes the new pivot.
            for (std::size_t i = t + 1; i < R; ++i) {
                if (m.at(i, t).is_zero()) continue;
                Polynomial<K> q = m.at(i, t) / m.at(t, t);
                add_row_multiple(m, i, t, -q);
                if (!m.at(i, t).is_zero()) {
                    detail::swap_rows(m, t, i);
                    settled = false;
                }
            }
            if (!settled) continue;
            for (std::size_t j = t + 1; j < C; ++j) {
                if (m.at(t, j).is_zero()) continue;
                Polynomial<K> q = m.at(t, j) / m.at(t, t);
                add_col_multiple(m, j, t, -q);
                if (!m.at(t, j).is_zero()) {
                    detail::swap_cols(m, t, j);
                    settled = false;
                }
            }
            if (!settled) continue;
            // Divisibility chain: the pivot must divide every remaining
            // entry; otherwise pull the offending row in and restart.
            for (std::size_t i = t + 1; i < R && settled; ++i)
                for (std::size_t j = t + 1; j < C && settled; ++j)
                    if (!divides(m.at(t, t), m.at(i, j))) {
                        add_row_multiple(m, t, i, Polynomial<K>(1));
                        settled = false;
                    }
        }
        inv.push_back(m.at(t, t).monic());
    }
    return inv;
}

}  // namespace leibrack
