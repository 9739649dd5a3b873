#include "leibrack/factor.hpp"

#include <algorithm>
#include <cstdint>

#include "leibrack/error.hpp"

namespace leibrack {

namespace {

// ---------------------------------------------------------------------
// Arithmetic in F_p[x] with an arbitrary-precision prime modulus.

using ZPoly = std::vector<Integer>;  // lowest degree first, trimmed

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

Integer mod_reduce(const Integer& v, const Integer& p) {
    Integer r = v % p;
    if (r < 0) r += p;
    return r;
}

ZPoly zmod(const ZPoly& a, const Integer& p) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_reduce(a[i], p);
    ztrim(r);
    return r;
}

Integer inv_mod(const Integer& a, const Integer& p) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw internal_error("noninvertible residue");
    return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& p) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return zmod(r, p);
}

// a mod b over F_p; b nonzero.
ZPoly zrem(ZPoly a, const ZPoly& b, const Integer& p) {
    const int db = zdeg(b);
    Integer linv = inv_mod(b.back(), p);
    while (zdeg(a) >= db) {
        Integer f = mod_reduce(a.back() * linv, p);
        const int shift = zdeg(a) - db;
        if (f != 0)
            for (int j = 0; j <= db; ++j) a[shift + j] = mod_reduce(a[shift + j] - f * b[j], p);
        a.pop_back();
        ztrim(a);
    }
    return a;
}

ZPoly zquo(ZPoly a, const ZPoly& b, const Integer& p) {
    const int db = zdeg(b);
    if (zdeg(a) < db) return {};
    ZPoly q(zdeg(a) - db + 1, Integer(0));
    Integer linv = inv_mod(b.back(), p);
    while (zdeg(a) >= db) {
        Integer f = mod_reduce(a.back() * linv, p);
        const int shift = zdeg(a) - db;
        q[shift] = f;
        if (f != 0)
            for (int j = 0; j <= db; ++j) a[shift + j] = mod_reduce(a[shift + j] - f * b[j], p);
        a.pop_back();
        ztrim(a);
    }
    return q;
}

ZPoly zmonic(ZPoly a, const Integer& p) {
    if (a.empty()) return a;
    Integer linv = inv_mod(a.back(), p);
    for (auto& c : a) c = mod_reduce(c * linv, p);
    return a;
}

ZPoly zgcd(ZPoly a, ZPoly b, const Integer& p) {
    while (!b.empty()) {
        ZPoly r = zrem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return zmonic(a, p);
}

ZPoly zderiv(const ZPoly& a, const Integer& p) {
    if (a.size() <= 1) return {};
    ZPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mod_reduce(a[i] * Integer(static_cast<long>(i)), p);
    ztrim(r);
    return r;
}

// base^e mod (m, p) with an arbitrary-precision exponent.
ZPoly zpowmod(ZPoly base, const Integer& e, const ZPoly& m, const Integer& p) {
    ZPoly r{Integer(1)};
    base = zrem(std::move(base), m, p);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = zrem(zmul(r, base, p), m, p);
        base = zrem(zmul(base, base, p), m, p);
    }
    if (e == 0) return {Integer(1)};
    return r;
}

// Deterministic per-process generator; only drives equal-degree splits.
std::uint64_t edf_state = 0x9e3779b97f4a7c15ULL;
std::uint64_t edf_next() {
    edf_state ^= edf_state << 13;
    edf_state ^= edf_state >> 7;
    edf_state ^= edf_state << 17;
    return edf_state;
}

void equal_degree_split(const ZPoly& f, int d, const Integer& p, std::vector<ZPoly>& out) {
    if (zdeg(f) == d) {
        out.push_back(f);
        return;
    }
    Integer exponent;
    mpz_pow_ui(exponent.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    exponent = (exponent - 1) / 2;
    for (;;) {
        ZPoly r(static_cast<std::size_t>(zdeg(f)), Integer(0));
        for (auto& c : r) c = mod_reduce(Integer(static_cast<unsigned long>(edf_next() >> 16)), p);
        ztrim(r);
        if (zdeg(r) < 1) continue;
        ZPoly s = zpowmod(r, exponent, f, p);
        if (s.empty()) continue;
        s[0] = mod_reduce(s[0] - 1, p);
        ztrim(s);
        ZPoly g = zgcd(f, s, p);
        if (zdeg(g) > 0 && zdeg(g) < zdeg(f)) {
            equal_degree_split(g, d, p, out);
            equal_degree_split(zquo(f, g, p), d, p, out);
            return;
        }
    }
}

// Monic irreducible factors of a square-free monic f over F_p.
std::vector<ZPoly> factor_mod_p(ZPoly f, const Integer& p) {
    std::vector<ZPoly> out;
    ZPoly x{Integer(0), Integer(1)};
    ZPoly w = x;
    for (int d = 1; zdeg(f) > 0; ++d) {
        if (2 * d > zdeg(f)) {
            out.push_back(zmonic(f, p));
            break;
        }
        w = zpowmod(w, p, f, p);  // x^(p^d) mod f
        ZPoly wmx = w;
        wmx.resize(std::max<std::size_t>(wmx.size(), 2), Integer(0));
        wmx[1] = mod_reduce(wmx[1] - 1, p);
        ztrim(wmx);
        ZPoly g = zgcd(f, wmx, p);
        if (zdeg(g) > 0) {
            equal_degree_split(g, d, p, out);
            f = zquo(f, g, p);
            w = zrem(w, f, p);
        }
    }
    return out;
}

// ---------------------------------------------------------------------
// Z[x] utilities for the lift back from F_p.

Integer content(const ZPoly& a) {
    Integer g(0);
    for (const auto& c : a) {
        Integer t;
        mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        g = t;
    }
    return g;
}

ZPoly primitive_part(ZPoly a) {
    Integer g = content(a);
    if (g == 0) return a;
    if (a.back() < 0) g = -g;
    for (auto& c : a) c /= g;
    return a;
}

// Clears denominators of a monic rational polynomial; result primitive.
ZPoly to_primitive_integer(const Polynomial<Rational>& p) {
    Integer l(1);
    for (const auto& c : p.coeffs()) {
        Integer t;
        mpz_lcm(t.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
        l = t;
    }
    ZPoly out(p.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        Rational v = p.coeff(i) * Rational(l);
        out[i] = v.get_num();
    }
    return primitive_part(std::move(out));
}

Polynomial<Rational> to_rational(const ZPoly& a) {
    std::vector<Rational> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = Rational(a[i]);
    return Polynomial<Rational>(std::move(c));
}

bool zdivides_exact(const ZPoly& d, const ZPoly& a, ZPoly& quotient) {
    Polynomial<Rational> q, r;
    divmod(to_rational(a), to_rational(d), q, r);
    if (!r.is_zero()) return false;
    quotient.clear();
    for (const auto& c : q.coeffs()) {
        if (c.get_den() != 1) return false;
        quotient.push_back(c.get_num());
    }
    return true;
}

// 2^deg * ceil(|f|_2) * |lc|, a bound on the coefficients of any integer
// factor of f.
Integer mignotte_bound(const ZPoly& f) {
    Integer s(0);
    for (const auto& c : f) s += c * c;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), s.get_mpz_t());
    root += 1;
    Integer two_n(1);
    mpz_mul_2exp(two_n.get_mpz_t(), two_n.get_mpz_t(), f.size());
    Integer lc = f.back();
    if (lc < 0) lc = -lc;
    return two_n * root * lc;
}

Integer symmetric_lift(const Integer& v, const Integer& p) {
    Integer r = mod_reduce(v, p);
    if (2 * r > p) r -= p;
    return r;
}

// Monic rational irreducible factors of a primitive square-free integer
// polynomial, via one-big-prime modular factorization and recombination.
std::vector<Polynomial<Rational>> factor_squarefree_integer(ZPoly f) {
    std::vector<Polynomial<Rational>> out;
    if (zdeg(f) < 1) return out;
    if (zdeg(f) == 1) {
        out.push_back(to_rational(f).monic());
        return out;
    }

    Integer p = 2 * mignotte_bound(f) + 1;
    Integer floor_p(1);
    mpz_mul_2exp(floor_p.get_mpz_t(), floor_p.get_mpz_t(), 40);
    if (p < floor_p) p = floor_p;
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (mod_reduce(f.back(), p) == 0) continue;
        ZPoly fp = zmod(f, p);
        ZPoly g = zgcd(fp, zderiv(fp, p), p);
        if (zdeg(g) == 0) break;  // square-free reduction found
    }

    std::vector<ZPoly> modular = factor_mod_p(zmonic(zmod(f, p), p), p);

    // Advances idx to the next size-k subset of {0..n-1}; false when done.
    auto next_combination = [](std::vector<std::size_t>& idx, std::size_t n) {
        const std::size_t k = idx.size();
        for (std::size_t i = k; i-- > 0;) {
            if (idx[i] < n - k + i) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    // Zassenhaus recombination: try subsets of the modular factors in
    // increasing cardinality; a verified divisor is peeled off exactly.
    std::vector<ZPoly> live = modular;
    ZPoly remaining = f;
    std::size_t take = 1;
    while (2 * take <= live.size()) {
        std::vector<std::size_t> idx(take);
        for (std::size_t i = 0; i < take; ++i) idx[i] = i;
        bool found = false;
        do {
            // Candidate = lc(remaining) * prod(selected), lifted to Z.
            ZPoly cand{mod_reduce(remaining.back(), p)};
            for (std::size_t i : idx) cand = zmul(cand, live[i], p);
            for (auto& c : cand) c = symmetric_lift(c, p);
            ztrim(cand);
            cand = primitive_part(std::move(cand));
            ZPoly quotient;
            if (zdeg(cand) > 0 && zdivides_exact(cand, remaining, quotient)) {
                out.push_back(to_rational(cand).monic());
                remaining = primitive_part(std::move(quotient));
                for (std::size_t i = idx.size(); i-- > 0;)
                    live.erase(live.begin() + static_cast<std::ptrdiff_t>(idx[i]));
                found = true;
                break;
            }
        } while (next_combination(idx, live.size()));
        if (!found) ++take;
    }
    // Whatever remains is irreducible over Q.
    if (zdeg(remaining) > 0) out.push_back(to_rational(remaining).monic());
    return out;
}

std::vector<Polynomial<Rational>> factor_squarefree_rational(const Polynomial<Rational>& p) {
    return factor_squarefree_integer(to_primitive_integer(p.monic()));
}

template <typename K>
void sort_factorization(Factorization<K>& f) {
    std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) {
        int c = compare(a.first, b.first);
        if (c != 0) return c < 0;
        return a.second < b.second;
    });
}

// ---------------------------------------------------------------------
// Q(i): direct handling up to degree two, norm-gcd splitting above.

using GPoly = Polynomial<GaussianRational>;

bool is_real(const GPoly& g) {
    for (const auto& c : g.coeffs())
        if (!is_zero(c.im)) return false;
    return true;
}

Polynomial<Rational> real_part(const GPoly& g) {
    std::vector<Rational> c(g.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = g.coeff(i).re;
    return Polynomial<Rational>(std::move(c));
}

GPoly from_rational_poly(const Polynomial<Rational>& p) {
    std::vector<GaussianRational> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = GaussianRational(p.coeff(i));
    return GPoly(std::move(c));
}

// Attempts q = r * conj(r) for a monic quartic q irreducible over Q.
// Complete for degree 4: a real-irreducible quartic has no linear factors
// over Q(i), so any splitting consists of two conjugate quadratics
// r = x^2 + (b1 + i c1) x + (b0 + i c0).
bool try_conjugate_quartic_split(const Polynomial<Rational>& q, GPoly& r_out) {
    const Rational q3 = q.coeff(3), q2 = q.coeff(2), q1 = q.coeff(1), q0 = q.coeff(0);
    const Rational b1 = q3 / Rational(2);
    const Rational A = q2 - b1 * b1;  // 2 b0 + c1^2 = A
    const Rational half = rat(1, 2);

    auto verify = [&](const Rational& b0, const Rational& c0, const Rational& c1) {
        GPoly r(std::vector<GaussianRational>{GaussianRational(b0, c0), GaussianRational(b1, c1),
                                              GaussianRational(1)});
        if (r * conj(r) == from_rational_poly(q)) {
            r_out = r;
            return true;
        }
        return false;
    };

    // c1 = 0: conjugate pair with real linear coefficient.
    {
        Rational b0 = A * half;
        Rational c0sq = q0 - b0 * b0, c0;
        if (Rational(2) * b1 * b0 == q1 && rational_sqrt(c0sq, c0) && verify(b0, c0, Rational(0)))
            return true;
    }

    // c1 != 0: s = c1^2 satisfies s q0 = s b0(s)^2 + (q1/2 - b1 b0(s))^2
    // with b0(s) = (A - s)/2; collect the polynomial in s and scan its
    // rational roots for ones that are squares.
    using RP = Polynomial<Rational>;
    RP s = RP::x();
    RP b0s = (RP(A) - s) * half;
    RP F = s * RP(q0) - s * b0s * b0s - (RP(q1 * half) - RP(b1) * b0s) * (RP(q1 * half) - RP(b1) * b0s);
    if (!F.is_zero()) {
        for (const auto& [factor, mult] : factor_polynomial(F)) {
            (void)mult;
            if (factor.degree() != 1) continue;
            Rational root = -factor.coeff(0);  // monic linear x - root
            Rational c1;
            if (sgn(root) <= 0 || !rational_sqrt(root, c1) || is_zero(c1)) continue;
            Rational b0 = (A - root) * half;
            Rational c0 = (q1 * half - b1 * b0) / c1;
            if (verify(b0, c0, c1)) return true;
        }
    }
    return false;
}

// Monic square-free g over Q(i), degree >= 1: irreducible factors.
std::vector<GPoly> factor_squarefree_gaussian(const GPoly& g) {
    std::vector<GPoly> out;
    if (g.degree() == 1) {
        out.push_back(g);
        return out;
    }
    if (g.degree() == 2) {
        GaussianRational b = g.coeff(1), c = g.coeff(0);
        GaussianRational disc = b * b - GaussianRational(4) * c;
        GaussianRational root;
        if (gaussian_sqrt(disc, root)) {
            GaussianRational half(rat(1, 2));
            GaussianRational r1 = (-b + root) * half;
            GaussianRational r2 = (-b - root) * half;
            out.push_back(GPoly::linear(r1));
            out.push_back(GPoly::linear(r2));
        } else {
            out.push_back(g);
        }
        return out;
    }
    // Split through the Q-irreducible factors of the norm polynomial.
    GPoly norm_poly = g * conj(g);
    if (!is_real(norm_poly)) throw internal_error("norm polynomial is not real");
    std::vector<Polynomial<Rational>> norm_factors;
    for (const auto& [sqfree, mult] : squarefree_decomposition(real_part(norm_poly))) {
        (void)mult;
        for (const auto& q : factor_squarefree_rational(sqfree)) norm_factors.push_back(q);
    }
    for (const auto& q : norm_factors) {
        GPoly h = gcd(g, from_rational_poly(q));
        if (h.degree() > 0 && h.degree() < g.degree()) {
            for (const auto& part : factor_squarefree_gaussian(h)) out.push_back(part);
            for (const auto& part : factor_squarefree_gaussian(g / h)) out.push_back(part);
            return out;
        }
    }
    // No norm factor splits g: g divides a single Q-irreducible q.
    // Then either deg g < deg q (g is one conjugate half, irreducible),
    // or g ~ q; a real irreducible of odd degree stays irreducible.
    for (const auto& q : norm_factors) {
        GPoly h = gcd(g, from_rational_poly(q));
        if (h.degree() == g.degree()) {
            if (g.degree() < q.degree() || g.degree() % 2 == 1) {
                out.push_back(g);
                return out;
            }
            // g coincides with a real irreducible of even degree.
            if (g.degree() == 4) {
                GPoly r;
                if (try_conjugate_quartic_split(real_part(g), r)) {
                    out.push_back(r);
                    out.push_back(conj(r).monic());
                    return out;
                }
                out.push_back(g);
                return out;
            }
            throw precondition_error(
                "factorization over Q(i) of real-irreducible input of even degree >= 6 "
                "is not supported");
        }
    }
    throw internal_error("norm factorization did not cover the input");
}

}  // namespace

bool gaussian_sqrt(const GaussianRational& z, GaussianRational& root) {
    if (is_zero(z)) {
        root = GaussianRational(0);
        return true;
    }
    if (is_zero(z.im)) {
        Rational r;
        if (rational_sqrt(z.re, r)) {
            root = GaussianRational(r);
            return true;
        }
        if (rational_sqrt(Rational(-z.re), r)) {
            root = GaussianRational(Rational(0), r);
            return true;
        }
        return false;
    }
    Rational n = norm(z), s;
    if (!rational_sqrt(n, s)) return false;
    Rational half = rat(1, 2);
    Rational u2 = (z.re + s) * half;
    Rational u;
    if (rational_sqrt(u2, u) && !is_zero(u)) {
        Rational v = z.im / (Rational(2) * u);
        root = GaussianRational(u, v);
        return root * root == z;
    }
    Rational v2 = (s - z.re) * half;
    Rational v;
    if (rational_sqrt(v2, v) && !is_zero(v)) {
        Rational u_ = z.im / (Rational(2) * v);
        root = GaussianRational(u_, v);
        return root * root == z;
    }
    return false;
}

Factorization<Rational> factor_polynomial(const Polynomial<Rational>& p) {
    if (p.is_zero()) throw precondition_error("factorization of the zero polynomial");
    Factorization<Rational> out;
    for (const auto& [sqfree, mult] : squarefree_decomposition(p)) {
        for (const auto& f : factor_squarefree_rational(sqfree)) out.emplace_back(f, mult);
    }
    sort_factorization(out);
    return out;
}

Factorization<GaussianRational> factor_polynomial(const Polynomial<GaussianRational>& p) {
    if (p.is_zero()) throw precondition_error("factorization of the zero polynomial");
    Factorization<GaussianRational> out;
    for (const auto& [sqfree, mult] : squarefree_decomposition(p)) {
        for (const auto& f : factor_squarefree_gaussian(sqfree)) out.emplace_back(f, mult);
    }
    sort_factorization(out);
    return out;
}

bool is_irreducible(const Polynomial<Rational>& p) {
    auto f = factor_polynomial(p);
    return f.size() == 1 && f[0].second == 1 && f[0].first.degree() == p.degree();
}

bool is_irreducible(const Polynomial<GaussianRational>& p) {
    auto f = factor_polynomial(p);
    return f.size() == 1 && f[0].second == 1 && f[0].first.degree() == p.degree();
}

}  // namespace leibrack
