#pragma once

// Classification of two-step nilpotent Leibniz algebras with a
// one-dimensional commutator ideal via the matrix pencil x*alpha + sigma of
// the skew/symmetric parts of the bracket form. The pencil's strict
// equivalence data (elementary divisors, divisors at infinity, minimal
// indices) is mapped back onto the three canonical block families; two
// algebras are isomorphic exactly when those block multisets match.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "leibrack/algebra.hpp"
#include "leibrack/error.hpp"
#include "leibrack/extension.hpp"
#include "leibrack/factor.hpp"
#include "leibrack/matrix.hpp"
#include "leibrack/polynomial.hpp"

namespace leibrack {

// Full-dimension symmetric/skew split of the bracket form [x,y] = phi(x,y) z.
// z_index is the pivot coordinate of the canonical commutator generator.
template <typename K>
struct BilinearPair {
    Matrix<K> alpha;  // skew part
    Matrix<K> sigma;  // symmetric part
    std::size_t z_index = 0;

    std::size_t size() const { return alpha.rows(); }
};

template <typename K>
void validate_pair(const BilinearPair<K>& p) {
    const std::size_t n = p.alpha.rows();
    if (p.alpha.cols() != n || p.sigma.rows() != n || p.sigma.cols() != n)
        throw precondition_error("bilinear pair matrices must be square and of equal size");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!(p.alpha.at(i, j) == -p.alpha.at(j, i)))
                throw precondition_error("alpha is not skew-symmetric");
            if (!(p.sigma.at(i, j) == p.sigma.at(j, i)))
                throw precondition_error("sigma is not symmetric");
        }
}

template <typename K>
BilinearPair<K> extract_pair(const LeibnizAlgebra<K>& L) {
    const std::size_t n = L.dim();
    Subspace<K> comm = commutator_ideal(L);
    if (comm.dim() != 1)
        throw precondition_error("commutator ideal has dimension " + std::to_string(comm.dim()) +
                                 ", expected 1");
    if (!nilpotency_class(L).has_value()) throw precondition_error("algebra is not nilpotent");
    Vec<K> z = comm.basis().column(0);
    std::size_t p = 0;
    while (p < n && z[p] == K(0)) ++p;
    // canonical generator has leading coefficient 1, so phi(i,j) is the
    // pivot coordinate of [e_i, e_j]
    Matrix<K> phi(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) phi.at(i, j) = L.c(i, j, p);
    const K half = K(1) / K(2);
    BilinearPair<K> pair{Matrix<K>(n, n), Matrix<K>(n, n), p};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            pair.sigma.at(i, j) = (phi.at(i, j) + phi.at(j, i)) * half;
            pair.alpha.at(i, j) = (phi.at(i, j) - phi.at(j, i)) * half;
        }
    return pair;
}

enum class BlockType { heisenberg = 0, kronecker = 1, dieudonne = 2 };

// One indecomposable summand of the classification.
template <typename K>
struct KroneckerInvariant {
    BlockType type;
    Polynomial<K> poly;  // heisenberg only: canonical monic irreducible
    std::size_t size;    // heisenberg: power k; kronecker/dieudonne: n

    // The elementary divisors of a heisenberg block come as a reflection
    // pair {f^k, g^k} with g(x) = +-f(-x); the invariant stores whichever
    // of f, g compares smaller.
    static KroneckerInvariant heisenberg(const Polynomial<K>& f, std::size_t k) {
        if (k == 0) throw precondition_error("heisenberg power must be >= 1");
        Polynomial<K> g = f.reflect().monic();
        return {BlockType::heisenberg, compare(f, g) <= 0 ? f : g, k};
    }
    static KroneckerInvariant kronecker(std::size_t n) {
        if (n == 0) throw precondition_error("kronecker block size must be >= 1");
        return {BlockType::kronecker, Polynomial<K>(), n};
    }
    static KroneckerInvariant dieudonne(std::size_t n) {
        if (n == 0) throw precondition_error("dieudonne block size must be >= 1");
        return {BlockType::dieudonne, Polynomial<K>(), n};
    }

    std::size_t pencil_dim() const {
        switch (type) {
            case BlockType::heisenberg: return 2 * size * static_cast<std::size_t>(poly.degree());
            case BlockType::kronecker: return 2 * size;
            default: return 2 * size + 1;
        }
    }
    // algebra dimension of the indecomposable summand (pencil block plus the
    // shared central line)
    std::size_t algebra_dim() const { return pencil_dim() + 1; }

    bool operator==(const KroneckerInvariant& o) const {
        return type == o.type && size == o.size && poly == o.poly;
    }
    bool operator!=(const KroneckerInvariant& o) const { return !(*this == o); }
    bool operator<(const KroneckerInvariant& o) const {
        if (type != o.type) return static_cast<int>(type) < static_cast<int>(o.type);
        if (pencil_dim() != o.pencil_dim()) return pencil_dim() < o.pencil_dim();
        int c = compare(poly, o.poly);
        if (c != 0) return c < 0;
        return size < o.size;
    }
};

template <typename K>
struct Classification {
    std::vector<KroneckerInvariant<K>> blocks;  // sorted
    std::size_t trivial_dim = 0;                // common radical of the pair
    std::size_t ambient_dim = 0;

    bool operator==(const Classification& o) const {
        return blocks == o.blocks && trivial_dim == o.trivial_dim && ambient_dim == o.ambient_dim;
    }
    bool operator!=(const Classification& o) const { return !(*this == o); }
};

namespace detail {

// Dimension of { v(x) of degree <= k : (x*alpha + sigma) v(x) = 0 }, the
// polynomial kernel truncations whose first differences count minimal
// indices of the singular part.
template <typename K>
std::size_t pencil_kernel_dim(const Matrix<K>& alpha, const Matrix<K>& sigma, std::size_t k) {
    const std::size_t m = alpha.rows();
    // coefficient conditions: sigma v_0 = 0, alpha v_{i-1} + sigma v_i = 0,
    // alpha v_k = 0
    Matrix<K> big((k + 2) * m, (k + 1) * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t t = 0; t <= k; ++t) {
                big.at(t * m + i, t * m + j) = sigma.at(i, j);
                big.at((t + 1) * m + i, t * m + j) = alpha.at(i, j);
            }
        }
    return kernel(big).cols();
}

// Rank over K(x). It is attained at every evaluation point avoiding the
// roots of one fixed nonzero maximal minor (degree <= size), so scanning
// size+1 distinct points cannot miss it.
template <typename K>
std::size_t pencil_rank(const Matrix<K>& alpha, const Matrix<K>& sigma) {
    const std::size_t m = alpha.rows();
    std::size_t best = 0;
    for (std::size_t t = 0; t <= m && best < m; ++t) {
        Matrix<K> p = sigma + alpha * K(static_cast<int>(t));
        best = std::max(best, rank(p));
    }
    return best;
}

// Rank of the depth-fold jet of the pencil at an evaluated point: block
// lower bidiagonal with P(lambda) on the diagonal and the x-coefficient on
// the subdiagonal.
template <typename F>
std::size_t jet_rank(const Matrix<F>& p_at, const Matrix<F>& x_coeff, std::size_t depth) {
    const std::size_t n = p_at.rows();
    Matrix<F> big(depth * n, depth * n);
    for (std::size_t b = 0; b < depth; ++b) {
        big.set_block(b * n, b * n, p_at);
        if (b + 1 < depth) big.set_block((b + 1) * n, b * n, x_coeff);
    }
    return rank(big);
}

// Exponent multiset of the elementary divisors at the evaluated point: the
// depth-d jet has rank d*r - sum_k min(k, d) over the local exponents k, so
// the first differences of the jet ranks count the exponents >= d.
template <typename F>
std::vector<std::size_t> local_exponents(const Matrix<F>& p_at, const Matrix<F>& x_coeff,
                                         std::size_t rank_x) {
    const std::size_t n = p_at.rows();
    std::vector<std::size_t> nu;  // nu[d-1] = number of local exponents >= d
    std::size_t prev = 0;
    for (std::size_t d = 1;; ++d) {
        if (d > n + 1) throw internal_error("jet rank sequence failed to terminate");
        std::size_t rd = jet_rank(p_at, x_coeff, d);
        if (prev + rank_x < rd) throw internal_error("jet rank sequence is not monotone");
        std::size_t count = prev + rank_x - rd;
        if (count == 0) break;
        if (!nu.empty() && count > nu.back())
            throw internal_error("jet rank sequence is not concave");
        nu.push_back(count);
        prev = rd;
    }
    std::vector<std::size_t> out;
    for (std::size_t d = 1; d <= nu.size(); ++d) {
        std::size_t exact = nu[d - 1] - (d < nu.size() ? nu[d] : 0);
        for (std::size_t c = 0; c < exact; ++c) out.push_back(d);
    }
    return out;
}

// One nonzero maximal minor of the pencil, recovered by interpolation: its
// rows and columns are fixed at a rank-attaining sample point, making the
// minor nonzero, and every maximal minor is divisible by the product of
// all finite elementary divisors.
template <typename K>
Polynomial<K> max_minor_witness(const Matrix<K>& alpha, const Matrix<K>& sigma, std::size_t r) {
    const std::size_t m = alpha.rows();
    std::vector<std::size_t> rows, cols;
    for (std::size_t t = 0; t <= m; ++t) {
        Matrix<K> p = sigma + alpha * K(static_cast<int>(t));
        Matrix<K> pt = p.transpose();
        std::vector<std::size_t> ri = rref(pt);  // pivot columns of p^T = independent rows of p
        if (ri.size() != r) continue;
        std::vector<std::size_t> all_cols(m);
        for (std::size_t j = 0; j < m; ++j) all_cols[j] = j;
        Matrix<K> sub = p.submatrix(ri, all_cols);
        rows = ri;
        cols = rref(sub);
        break;
    }
    if (rows.size() != r || cols.size() != r)
        throw internal_error("rank-attaining sample point not found");
    std::vector<K> xs, ys;
    for (std::size_t t = 0; t <= r; ++t) {
        K x0(static_cast<int>(t));
        Matrix<K> p = sigma + alpha * x0;
        xs.push_back(x0);
        ys.push_back(determinant(p.submatrix(rows, cols)));
    }
    Polynomial<K> w = interpolate(xs, ys);
    if (w.is_zero()) throw internal_error("maximal minor witness vanished");
    return w;
}

}  // namespace detail

// Strict-equivalence data of the pencil, reassembled into canonical blocks.
// Pairs whose divisor data cannot be grouped into the three families (odd
// multiplicity of a self-reflective divisor) are outside the classified
// domain and rejected.
template <typename K>
Classification<K> kronecker_decompose(const BilinearPair<K>& pair) {
    validate_pair(pair);
    const std::size_t m = pair.size();
    Classification<K> out;
    out.ambient_dim = m;

    // (a) strip the common radical as trivial summands
    Matrix<K> stacked = Matrix<K>::vstack(pair.alpha, pair.sigma);
    Subspace<K> radical = Subspace<K>::span(m, kernel(stacked));
    out.trivial_dim = radical.dim();
    std::vector<std::size_t> pivot_rows;
    for (std::size_t c = 0; c < radical.basis().cols(); ++c) {
        std::size_t r = 0;
        while (radical.basis().at(r, c) == K(0)) ++r;
        pivot_rows.push_back(r);
    }
    std::vector<std::size_t> comp;
    for (std::size_t i = 0; i < m; ++i)
        if (std::find(pivot_rows.begin(), pivot_rows.end(), i) == pivot_rows.end())
            comp.push_back(i);
    Matrix<K> a = pair.alpha.submatrix(comp, comp);
    Matrix<K> s = pair.sigma.submatrix(comp, comp);
    const std::size_t mr = comp.size();
    if (mr == 0) return out;

    const std::size_t normal_rank = detail::pencil_rank(a, s);

    // (c) finite elementary divisors: local jet ranks at each root of one
    // maximal minor; junk factors of the minor report no exponents.
    std::vector<std::pair<Polynomial<K>, std::size_t>> finite;  // (irreducible, power)
    if (normal_rank > 0) {
        Polynomial<K> w = detail::max_minor_witness(a, s, normal_rank);
        if (w.degree() > 0)
            for (const auto& [f, mult] : factor_polynomial(w)) {
                (void)mult;
                std::vector<std::size_t> exps;
                if (f.degree() == 1) {
                    K lambda = -f.coeff(0);
                    Matrix<K> p_at = s + a * lambda;
                    exps = detail::local_exponents(p_at, a, normal_rank);
                } else {
                    using E = ExtScalar<K>;
                    typename E::Modulus mod = E::make_modulus(f);
                    E lambda = E::generator(mod);
                    Matrix<E> ae(mr, mr), p_at(mr, mr);
                    for (std::size_t i = 0; i < mr; ++i)
                        for (std::size_t j = 0; j < mr; ++j) {
                            ae.at(i, j) = E(Polynomial<K>(a.at(i, j)), mod);
                            p_at.at(i, j) = E(Polynomial<K>(s.at(i, j)), mod) + ae.at(i, j) * lambda;
                        }
                    exps = detail::local_exponents(p_at, ae, normal_rank);
                }
                for (std::size_t k : exps) finite.emplace_back(f, k);
            }
    }

    // divisors at infinity: local exponents of the reversed pencil a + y*s
    // at y = 0
    std::vector<std::size_t> infinite = detail::local_exponents(a, s, normal_rank);

    // (b) minimal indices of the singular part; the row and column index
    // multisets coincide because the pencil transposes to itself under
    // x -> -x, so only the column side is computed.
    std::size_t index_count = mr - normal_rank;
    std::vector<std::size_t> minimal;
    if (index_count > 0) {
        std::size_t prev_dim = 0, prev_cum = 0;
        for (std::size_t k = 0; minimal.size() < index_count; ++k) {
            if (k > mr) throw internal_error("minimal index search exceeded pencil size");
            std::size_t dk = detail::pencil_kernel_dim(a, s, k);
            std::size_t cum = dk - prev_dim;  // number of indices <= k
            for (std::size_t t = prev_cum; t < cum; ++t) minimal.push_back(k);
            prev_dim = dk;
            prev_cum = cum;
        }
        if (!minimal.empty() && minimal.front() == 0)
            throw internal_error("zero minimal index after radical strip");
    }

    // reassemble blocks
    for (std::size_t n : minimal) out.blocks.push_back(KroneckerInvariant<K>::dieudonne(n));

    std::sort(infinite.begin(), infinite.end());
    for (std::size_t i = 0; i < infinite.size();) {
        if (i + 1 >= infinite.size() || infinite[i + 1] != infinite[i])
            throw precondition_error(
                "pencil is outside the classified families: unpaired divisor at infinity of degree " +
                std::to_string(infinite[i]));
        out.blocks.push_back(KroneckerInvariant<K>::kronecker(infinite[i]));
        i += 2;
    }

    auto cmp = [](const std::pair<Polynomial<K>, std::size_t>& x,
                  const std::pair<Polynomial<K>, std::size_t>& y) {
        int c = compare(x.first, y.first);
        if (c != 0) return c < 0;
        return x.second < y.second;
    };
    std::sort(finite.begin(), finite.end(), cmp);
    while (!finite.empty()) {
        auto [f, k] = finite.front();
        finite.erase(finite.begin());
        Polynomial<K> g = f.reflect().monic();
        auto partner = std::find(finite.begin(), finite.end(), std::make_pair(g, k));
        if (partner == finite.end())
            throw precondition_error(
                "pencil is outside the classified families: unpaired elementary divisor " +
                to_string(f) + "^" + std::to_string(k));
        finite.erase(partner);
        out.blocks.push_back(KroneckerInvariant<K>::heisenberg(f, k));
    }

    std::size_t total = out.trivial_dim;
    for (const auto& b : out.blocks) total += b.pencil_dim();
    if (total != m) throw internal_error("block dimensions do not sum to the pair size");

    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

template <typename K>
Classification<K> classify(const LeibnizAlgebra<K>& L) {
    return kronecker_decompose(extract_pair(L));
}

// Equal block multisets decide congruence: the canonical forms are uniquely
// determined by the strict-equivalence data, and a global scalar on the pair
// is absorbed blockwise.
template <typename K>
bool congruent_pairs(const BilinearPair<K>& p1, const BilinearPair<K>& p2) {
    if (p1.size() != p2.size()) throw dimension_error("pair sizes differ");
    return kronecker_decompose(p1) == kronecker_decompose(p2);
}

template <typename K>
bool isomorphic(const LeibnizAlgebra<K>& L1, const LeibnizAlgebra<K>& L2) {
    if (L1.dim() != L2.dim())
        throw precondition_error("algebras have different dimensions " + std::to_string(L1.dim()) +
                                 " and " + std::to_string(L2.dim()));
    return congruent_pairs(extract_pair(L1), extract_pair(L2));
}

}  // namespace leibrack
