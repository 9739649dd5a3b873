#pragma once

// Exact factorization of univariate polynomials over Q and Q(i) into
// monic irreducible powers. Over Q this is square-free (Yun) splitting
// followed by modular factorization (Cantor-Zassenhaus distinct/equal
// degree over one prime exceeding twice the Mignotte bound) with subset
// recombination. Over Q(i) degrees one and two are handled directly via
// an exact Gaussian square root, and higher degrees are split through
// gcds with the Q-irreducible factors of the norm polynomial.

#include <cstddef>
#include <utility>
#include <vector>

#include "leibrack/polynomial.hpp"
#include "leibrack/scalar.hpp"

namespace leibrack {

template <typename K>
using Factorization = std::vector<std::pair<Polynomial<K>, std::size_t>>;

// Monic irreducible powers of a nonzero polynomial, the unit content
// discarded. Factors are sorted by the polynomial normalization order.
Factorization<Rational> factor_polynomial(const Polynomial<Rational>& p);
Factorization<GaussianRational> factor_polynomial(const Polynomial<GaussianRational>& p);

bool is_irreducible(const Polynomial<Rational>& p);
bool is_irreducible(const Polynomial<GaussianRational>& p);

// Exact square root in Q(i) if one exists.
bool gaussian_sqrt(const GaussianRational& z, GaussianRational& root);

// Square-free decomposition (Yun): list of (g_i, i) with p ~ prod g_i^i,
// the g_i square-free, pairwise coprime, returned only for nonzero g_i.
template <typename K>
std::vector<std::pair<Polynomial<K>, std::size_t>> squarefree_decomposition(const Polynomial<K>& p) {
    std::vector<std::pair<Polynomial<K>, std::size_t>> out;
    Polynomial<K> f = p.monic();
    if (f.degree() < 1) return out;
    Polynomial<K> fp = f.derivative();
    Polynomial<K> a = gcd(f, fp);
    Polynomial<K> b = f / a;           // product of distinct irreducible factors
    Polynomial<K> c = fp / a;
    Polynomial<K> d = c - b.derivative();
    for (std::size_t i = 1; b.degree() > 0; ++i) {
        Polynomial<K> g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
    }
    return out;
}

}  // namespace leibrack
