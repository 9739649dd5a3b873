#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "leibrack/constructions.hpp"
#include "leibrack/pencil.hpp"
#include "leibrack/smith.hpp"
#include "test_support.hpp"

using namespace leibrack;
using namespace testsupport;

namespace {

template <typename K>
LeibnizAlgebra<K> make_l3(const K& a) {
    LeibnizAlgebra<K> L(3);
    L.c(0, 1, 2) = K(1) + a;
    L.c(1, 0, 2) = a - K(1);
    return L;
}

// canonical pair with alpha = [[0,I],[-I,0]], sigma = [[0,A],[A^t,0]]
template <typename K>
BilinearPair<K> canonical_pair1(const Matrix<K>& A) {
    std::size_t n = A.rows();
    BilinearPair<K> p{Matrix<K>(2 * n, 2 * n), Matrix<K>(2 * n, 2 * n), 0};
    for (std::size_t i = 0; i < n; ++i) {
        p.alpha.at(i, n + i) = K(1);
        p.alpha.at(n + i, i) = K(-1);
        for (std::size_t j = 0; j < n; ++j) {
            p.sigma.at(i, n + j) = A.at(i, j);
            p.sigma.at(n + j, i) = A.at(i, j);
        }
    }
    return p;
}

// canonical pair with alpha = [[0,A],[-A^t,0]], sigma = [[0,I],[I,0]]
template <typename K>
BilinearPair<K> canonical_pair2(const Matrix<K>& A) {
    std::size_t n = A.rows();
    BilinearPair<K> p{Matrix<K>(2 * n, 2 * n), Matrix<K>(2 * n, 2 * n), 0};
    for (std::size_t i = 0; i < n; ++i) {
        p.sigma.at(i, n + i) = K(1);
        p.sigma.at(n + i, i) = K(1);
        for (std::size_t j = 0; j < n; ++j) {
            p.alpha.at(i, n + j) = A.at(i, j);
            p.alpha.at(n + j, i) = -A.at(i, j);
        }
    }
    return p;
}

// canonical pair from the two shift embeddings F^n -> F^{n+1}
template <typename K>
BilinearPair<K> canonical_pair3(std::size_t n) {
    std::size_t m = 2 * n + 1;
    BilinearPair<K> p{Matrix<K>(m, m), Matrix<K>(m, m), 0};
    for (std::size_t j = 0; j < n; ++j) {
        p.alpha.at(j, n + 1 + j) = K(1);       // J1 = [I; 0]
        p.alpha.at(n + 1 + j, j) = K(-1);
        p.sigma.at(j + 1, n + 1 + j) = K(1);   // J2 = [0; I]
        p.sigma.at(n + 1 + j, j + 1) = K(1);
    }
    return p;
}

template <typename K>
BilinearPair<K> pair_sum(const BilinearPair<K>& a, const BilinearPair<K>& b) {
    std::size_t na = a.size(), nb = b.size();
    BilinearPair<K> p{Matrix<K>(na + nb, na + nb), Matrix<K>(na + nb, na + nb), 0};
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            p.alpha.at(i, j) = a.alpha.at(i, j);
            p.sigma.at(i, j) = a.sigma.at(i, j);
        }
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            p.alpha.at(na + i, na + j) = b.alpha.at(i, j);
            p.sigma.at(na + i, na + j) = b.sigma.at(i, j);
        }
    return p;
}

template <typename K>
BilinearPair<K> zero_pair(std::size_t n) {
    return {Matrix<K>(n, n), Matrix<K>(n, n), 0};
}

template <typename K>
BilinearPair<K> transform(const Matrix<K>& P, const BilinearPair<K>& p) {
    Matrix<K> Pt = P.transpose();
    return {P * p.alpha * Pt, P * p.sigma * Pt, p.z_index};
}

using QPoly = Polynomial<Rational>;

QPoly qpoly(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return QPoly(std::move(v));
}

// Reference decomposition that extracts the divisor data from polynomial
// Smith forms instead of jet ranks, as an independent oracle for the
// production pipeline. Slow on dense inputs; use small pairs only.
template <typename K>
Classification<K> smith_reference_decompose(const BilinearPair<K>& pair) {
    validate_pair(pair);
    const std::size_t m = pair.size();
    Classification<K> out;
    out.ambient_dim = m;

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

    PolyMatrix<K> M(mr, mr);
    for (std::size_t i = 0; i < mr; ++i)
        for (std::size_t j = 0; j < mr; ++j)
            M.at(i, j) = Polynomial<K>({s.at(i, j), a.at(i, j)});
    std::vector<Polynomial<K>> inv = smith_invariant_factors(M);
    const std::size_t normal_rank = inv.size();

    std::vector<std::pair<Polynomial<K>, std::size_t>> finite;
    for (const auto& d : inv)
        if (d.degree() > 0)
            for (const auto& [f, k] : factor_polynomial(d)) finite.emplace_back(f, k);

    PolyMatrix<K> N(mr, mr);
    for (std::size_t i = 0; i < mr; ++i)
        for (std::size_t j = 0; j < mr; ++j)
            N.at(i, j) = Polynomial<K>({a.at(i, j), s.at(i, j)});
    std::vector<std::size_t> infinite;
    for (const auto& e : smith_invariant_factors(N)) {
        std::size_t v = 0;
        while (e.coeff(v) == K(0)) ++v;
        if (v > 0) infinite.push_back(v);
    }

    std::size_t index_count = mr - normal_rank;
    std::vector<std::size_t> minimal;
    if (index_count > 0) {
        std::size_t prev_dim = 0, prev_cum = 0;
        for (std::size_t k = 0; minimal.size() < index_count; ++k) {
            REQUIRE(k <= mr);
            std::size_t dk = leibrack::detail::pencil_kernel_dim(a, s, k);
            std::size_t cum = dk - prev_dim;
            for (std::size_t t = prev_cum; t < cum; ++t) minimal.push_back(k);
            prev_dim = dk;
            prev_cum = cum;
        }
    }

    for (std::size_t n : minimal) out.blocks.push_back(KroneckerInvariant<K>::dieudonne(n));

    std::sort(infinite.begin(), infinite.end());
    for (std::size_t i = 0; i < infinite.size();) {
        if (i + 1 >= infinite.size() || infinite[i + 1] != infinite[i])
            throw precondition_error("reference: unpaired divisor at infinity");
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
            throw precondition_error("reference: unpaired elementary divisor");
        finite.erase(partner);
        out.blocks.push_back(KroneckerInvariant<K>::heisenberg(f, k));
    }

    std::size_t total = out.trivial_dim;
    for (const auto& b : out.blocks) total += b.pencil_dim();
    REQUIRE(total == m);

    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

}  // namespace

TEST_CASE("pair extraction has the frozen component layout") {
    auto p = extract_pair(make_l3(Rational(1, 2)));
    CHECK(p.z_index == 2);
    Matrix<Rational> sigma{{0, Rational(1, 2), 0}, {Rational(1, 2), 0, 0}, {0, 0, 0}};
    Matrix<Rational> alpha{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}};
    CHECK(p.sigma == sigma);
    CHECK(p.alpha == alpha);
    CHECK(extract_pair(make_l3(Rational(0))).sigma.is_zero());  // Lie case

    LeibnizAlgebra<Rational> sym(3);  // fully symmetric brackets give alpha = 0
    sym.c(0, 1, 2) = Rational(1);
    sym.c(1, 0, 2) = Rational(1);
    CHECK(extract_pair(sym).alpha.is_zero());

    CHECK_THROWS_AS((void)extract_pair(abelian_algebra<Rational>(3)), precondition_error);
    CHECK_THROWS_WITH_AS((void)extract_pair(direct_sum(make_l3(Rational(2)), make_l3(Rational(0)))),
                         "commutator ideal has dimension 2, expected 1", precondition_error);
    LeibnizAlgebra<Rational> cyc(2);  // [a,a]=b, [a,b]=b is not nilpotent
    cyc.c(0, 0, 1) = Rational(1);
    cyc.c(0, 1, 1) = Rational(1);
    CHECK_THROWS_WITH_AS((void)extract_pair(cyc), "algebra is not nilpotent", precondition_error);
}

TEST_CASE("frozen classifications of the smallest algebras") {
    auto c = classify(make_l3(Rational(2)));
    REQUIRE(c.blocks.size() == 1);
    CHECK(c.blocks[0] == KroneckerInvariant<Rational>::heisenberg(qpoly({-2, 1}), 1));
    CHECK(c.trivial_dim == 1);
    CHECK(c.ambient_dim == 3);

    // the invariant stores the smaller of the reflection pair
    CHECK(classify(make_l3(Rational(2))) == classify(make_l3(Rational(-2))));
    CHECK(classify(make_l3(Rational(2))) != classify(make_l3(Rational(3))));

    // degenerate parameters still reduce to a single block
    auto c1 = classify(make_l3(Rational(1)));
    REQUIRE(c1.blocks.size() == 1);
    CHECK(c1.blocks[0] == KroneckerInvariant<Rational>::heisenberg(qpoly({-1, 1}), 1));

    // classical Heisenberg: the self-reflective divisor pair {x, x}
    LeibnizAlgebra<Rational> h3 = make_l3(Rational(0));
    auto ch = classify(h3);
    REQUIRE(ch.blocks.size() == 1);
    CHECK(ch.blocks[0] == KroneckerInvariant<Rational>::heisenberg(qpoly({0, 1}), 1));
    CHECK(ch.trivial_dim == 1);
}

TEST_CASE("canonical pairs decompose to their own invariant") {
    auto k2 = kronecker_decompose(canonical_pair2(companion_matrix(QPoly::x(), 2)));
    REQUIRE(k2.blocks.size() == 1);
    CHECK(k2.blocks[0] == KroneckerInvariant<Rational>::kronecker(2));
    CHECK(k2.trivial_dim == 0);

    auto d1 = kronecker_decompose(canonical_pair3<Rational>(1));
    REQUIRE(d1.blocks.size() == 1);
    CHECK(d1.blocks[0] == KroneckerInvariant<Rational>::dieudonne(1));
    CHECK(d1.trivial_dim == 0);

    auto d3 = kronecker_decompose(canonical_pair3<Rational>(3));
    REQUIRE(d3.blocks.size() == 1);
    CHECK(d3.blocks[0] == KroneckerInvariant<Rational>::dieudonne(3));

    // irreducible quadratic divisor
    auto h = kronecker_decompose(canonical_pair1(companion_matrix(qpoly({2, -2, 1}), 1)));
    REQUIRE(h.blocks.size() == 1);
    CHECK(h.blocks[0] == KroneckerInvariant<Rational>::heisenberg(qpoly({2, -2, 1}), 1));

    auto z = kronecker_decompose(zero_pair<Rational>(4));
    CHECK(z.blocks.empty());
    CHECK(z.trivial_dim == 4);
}

TEST_CASE("nonsingular second-type pairs reduce to first-type invariants") {
    Matrix<Rational> A{{2}};
    auto left = kronecker_decompose(canonical_pair2(A));
    Matrix<Rational> Ainv{{Rational(1, 2)}};
    auto right = kronecker_decompose(canonical_pair1(Ainv));
    CHECK(left.blocks == right.blocks);
    REQUIRE(left.blocks.size() == 1);
    CHECK(left.blocks[0] == KroneckerInvariant<Rational>::heisenberg(qpoly({-1, 2}).monic(), 1));
}

TEST_CASE("block sums survive unimodular scrambles") {
    auto rng = make_rng();
    auto heis = canonical_pair1(companion_matrix(qpoly({-2, 1}), 1));  // size 2
    auto kron = canonical_pair2(companion_matrix(QPoly::x(), 1));      // size 2
    auto dieu = canonical_pair3<Rational>(1);                          // size 3
    auto total = pair_sum(pair_sum(pair_sum(heis, kron), dieu), zero_pair<Rational>(1));
    REQUIRE(total.size() == 8);

    auto expected = kronecker_decompose(total);
    REQUIRE(expected.blocks.size() == 3);
    CHECK(expected.trivial_dim == 1);
    CHECK(expected.blocks[0] == KroneckerInvariant<Rational>::heisenberg(qpoly({-2, 1}), 1));
    CHECK(expected.blocks[1] == KroneckerInvariant<Rational>::kronecker(1));
    CHECK(expected.blocks[2] == KroneckerInvariant<Rational>::dieudonne(1));

    for (int t = 0; t < 8; ++t) {
        Matrix<Rational> P = random_unimodular(rng, 8);
        CHECK(kronecker_decompose(transform(P, total)) == expected);
        CHECK(congruent_pairs(transform(P, total), total));
    }
}

TEST_CASE("congruent_pairs basics") {
    auto p = extract_pair(make_l3(Rational(1, 3)));
    auto q = extract_pair(make_l3(Rational(3)));
    CHECK(congruent_pairs(p, p));
    CHECK(!congruent_pairs(p, q));
    CHECK(congruent_pairs(zero_pair<Rational>(3), zero_pair<Rational>(3)));
    CHECK_THROWS_AS((void)congruent_pairs(p, zero_pair<Rational>(4)), dimension_error);

    auto rng = make_rng();
    for (int t = 0; t < 6; ++t) {
        auto gen = [](std::mt19937_64& r) { return random_rational(r, 4, 3); };
        Matrix<Rational> P = random_invertible<Rational>(rng, 3, gen);
        CHECK(congruent_pairs(transform(P, p), p));
    }
}

TEST_CASE("one-sided brute force congruence oracle") {
    auto rng = make_rng(97531);
    std::vector<BilinearPair<Rational>> pool = {
        extract_pair(make_l3(Rational(0))), extract_pair(make_l3(Rational(2))),
        extract_pair(make_l3(Rational(-2))), canonical_pair2(companion_matrix(QPoly::x(), 1)),
        canonical_pair3<Rational>(1)};
    std::uniform_int_distribution<int> entry(-2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::size_t found = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const auto& a = pool[pick(rng)];
        const auto& b = pool[pick(rng)];
        if (a.size() != b.size()) continue;
        std::size_t n = a.size();
        Matrix<Rational> P(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) P.at(i, j) = Rational(entry(rng));
        if (rank(P) != n) continue;
        auto tb = transform(P, b);
        if (tb.alpha == a.alpha && tb.sigma == a.sigma) {
            ++found;  // explicit congruence witness: the invariants must agree
            CHECK(congruent_pairs(a, b));
        }
    }
    CHECK(found > 0);
}

TEST_CASE("pairs outside the three families are rejected") {
    // a single square bracket [e,e] = z: unpaired divisor at infinity
    LeibnizAlgebra<Rational> sq(2);
    sq.c(0, 0, 1) = Rational(1);
    CHECK(!check_left_leibniz(sq).has_value());
    CHECK_THROWS_AS((void)classify(sq), precondition_error);

    // symplectic alpha with rank-one sigma: unpaired divisor x^2
    BilinearPair<Rational> odd{Matrix<Rational>{{0, 1}, {-1, 0}}, Matrix<Rational>{{1, 0}, {0, 0}},
                               0};
    CHECK_THROWS_AS((void)kronecker_decompose(odd), precondition_error);

    // symplectic alpha with identity sigma: x^2+1 is irreducible over Q and
    // self-reflective, so a single copy cannot be grouped
    BilinearPair<Rational> qd{Matrix<Rational>{{0, 1}, {-1, 0}}, Matrix<Rational>::identity(2), 0};
    CHECK_THROWS_AS((void)kronecker_decompose(qd), precondition_error);

    // over Q(i) the same pair splits as {x-i, x+i} and classifies
    using G = GaussianRational;
    BilinearPair<G> qi{Matrix<G>{{G(0), G(1)}, {G(-1), G(0)}}, Matrix<G>::identity(2), 0};
    auto c = kronecker_decompose(qi);
    REQUIRE(c.blocks.size() == 1);
    G i(Rational(0), Rational(1));
    CHECK(c.blocks[0] ==
          KroneckerInvariant<G>::heisenberg(Polynomial<G>::linear(i), 1));
}

TEST_CASE("jet-rank classification agrees with the smith-form reference") {
    auto rng = make_rng(271);
    std::uniform_int_distribution<int> entry(-2, 2);

    // scrambled sums of canonical blocks, always classifiable
    std::vector<BilinearPair<Rational>> pool{
        canonical_pair1<Rational>(jordan_block(rat(2), 1)),
        canonical_pair1<Rational>(jordan_block(rat(-1, 2), 2)),
        canonical_pair1<Rational>(companion_matrix(qpoly({1, 0, 1}), 1)),
        canonical_pair2<Rational>(companion_matrix(QPoly::x(), 1)),
        canonical_pair2<Rational>(companion_matrix(QPoly::x(), 2)),
        canonical_pair3<Rational>(1),
        canonical_pair3<Rational>(2),
        zero_pair<Rational>(1),
    };
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int scrambled = 0;
    for (int trial = 0; scrambled < 12 && trial < 400; ++trial) {
        BilinearPair<Rational> p = pair_sum(pool[pick(rng)], pool[pick(rng)]);
        // dense elimination in the reference grows superexponentially with
        // size; 6 keeps it well inside its fast regime
        if (p.size() > 6) continue;
        Matrix<Rational> P(p.size(), p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j) P.at(i, j) = Rational(entry(rng));
        if (rank(P) != p.size()) continue;
        BilinearPair<Rational> sp = transform(P, p);
        CHECK(kronecker_decompose(sp) == smith_reference_decompose(sp));
        ++scrambled;
    }
    CHECK(scrambled == 12);

    // arbitrary pairs: verdicts and block data must coincide, including the
    // rejection of structures outside the three families
    int agreed_accept = 0, agreed_reject = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
        BilinearPair<Rational> p = zero_pair<Rational>(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                p.alpha.at(i, j) = Rational(entry(rng));
                p.alpha.at(j, i) = -p.alpha.at(i, j);
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                p.sigma.at(i, j) = Rational(entry(rng));
                p.sigma.at(j, i) = p.sigma.at(i, j);
            }
        bool ok_jet = true, ok_ref = true;
        Classification<Rational> c_jet, c_ref;
        try {
            c_jet = kronecker_decompose(p);
        } catch (const precondition_error&) {
            ok_jet = false;
        }
        try {
            c_ref = smith_reference_decompose(p);
        } catch (const precondition_error&) {
            ok_ref = false;
        }
        REQUIRE(ok_jet == ok_ref);
        if (ok_jet) {
            CHECK(c_jet == c_ref);
            ++agreed_accept;
        } else {
            ++agreed_reject;
        }
    }
    CHECK(agreed_accept > 0);
    CHECK(agreed_reject > 0);

    // same over Q(i), where linear factors can absorb the quadratics
    using G = GaussianRational;
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        BilinearPair<G> p = zero_pair<G>(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                p.alpha.at(i, j) = G(Rational(entry(rng)), Rational(entry(rng)));
                p.alpha.at(j, i) = -p.alpha.at(i, j);
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                p.sigma.at(i, j) = G(Rational(entry(rng)), Rational(entry(rng)));
                p.sigma.at(j, i) = p.sigma.at(i, j);
            }
        bool ok_jet = true, ok_ref = true;
        Classification<G> c_jet, c_ref;
        try {
            c_jet = kronecker_decompose(p);
        } catch (const precondition_error&) {
            ok_jet = false;
        }
        try {
            c_ref = smith_reference_decompose(p);
        } catch (const precondition_error&) {
            ok_ref = false;
        }
        REQUIRE(ok_jet == ok_ref);
        if (ok_jet) CHECK(c_jet == c_ref);
    }
}

TEST_CASE("validation of malformed pairs") {
    BilinearPair<Rational> bad{Matrix<Rational>{{0, 1}, {1, 0}}, Matrix<Rational>(2, 2), 0};
    CHECK_THROWS_AS((void)kronecker_decompose(bad), precondition_error);
    BilinearPair<Rational> bad2{Matrix<Rational>(2, 2), Matrix<Rational>{{0, 1}, {-1, 0}}, 0};
    CHECK_THROWS_AS((void)kronecker_decompose(bad2), precondition_error);
    BilinearPair<Rational> rect{Matrix<Rational>(2, 3), Matrix<Rational>(2, 3), 0};
    CHECK_THROWS_AS((void)kronecker_decompose(rect), precondition_error);
}

TEST_CASE("isomorphism testing") {
    CHECK(isomorphic(make_l3(Rational(2)), make_l3(Rational(-2))));
    CHECK(!isomorphic(make_l3(Rational(2)), make_l3(Rational(3))));
    CHECK_THROWS_AS((void)isomorphic(make_l3(Rational(2)), abelian_algebra<Rational>(4)),
                    precondition_error);

    // agrees with the explicit bracket-preserving witness
    Matrix<Rational> W{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}};
    CHECK(is_isomorphism(make_l3(Rational(2)), make_l3(Rational(-2)), W));

    auto rng = make_rng();
    auto L = make_l3(Rational(1, 2));
    for (int t = 0; t < 6; ++t) {
        auto gen = [](std::mt19937_64& r) { return random_rational(r, 4, 3); };
        Matrix<Rational> P = random_invertible<Rational>(rng, 3, gen);
        CHECK(isomorphic(L, change_basis(L, P)));
    }
}

TEST_CASE("gaussian scalars classify with lexicographic tie-breaking") {
    using G = GaussianRational;
    G i(Rational(0), Rational(1));
    auto L = make_l3(i);
    auto c = classify(L);
    REQUIRE(c.blocks.size() == 1);
    // reflection partner of x-i is x+i; the (re, im) order picks x-i
    CHECK(c.blocks[0] == KroneckerInvariant<G>::heisenberg(Polynomial<G>::linear(i), 1));
    CHECK(isomorphic(L, make_l3(G(Rational(0), Rational(-1)))));
    CHECK(!isomorphic(L, make_l3(G(Rational(1)))));
}

TEST_CASE("invariant ordering and accessors") {
    using KI = KroneckerInvariant<Rational>;
    KI h = KI::heisenberg(qpoly({-2, 1}), 2);
    CHECK(h.pencil_dim() == 4);
    CHECK(h.algebra_dim() == 5);
    KI k = KI::kronecker(2);
    CHECK(k.pencil_dim() == 4);
    KI d = KI::dieudonne(2);
    CHECK(d.pencil_dim() == 5);
    CHECK(h < k);
    CHECK(k < d);
    CHECK(KI::heisenberg(qpoly({-2, 1}), 1) < h);
    CHECK(KI::heisenberg(qpoly({2, -2, 1}), 1) == KI::heisenberg(qpoly({2, 2, 1}), 1));
    CHECK_THROWS_AS((void)KI::kronecker(0), precondition_error);
}

TEST_CASE("scaling the pair does not change the invariants") {
    auto p = extract_pair(make_l3(Rational(1, 2)));
    for (Rational s : {Rational(3), Rational(-1), Rational(2, 7)}) {
        BilinearPair<Rational> q{p.alpha * s, p.sigma * s, p.z_index};
        CHECK(congruent_pairs(p, q));
    }
}
