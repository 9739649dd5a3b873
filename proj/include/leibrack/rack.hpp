#pragma once

// Pointed racks as evaluable models: the affine cocycle rack integrating a
// two-step nilpotent Leibniz algebra, the conjugation rack of the unitriangular
// Heisenberg group, and a chart-restricted circle-group variant whose
// integration is local only. Axioms are checked either on samples or, for the
// affine model, symbolically by polynomial coefficient comparison.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "leibrack/algebra.hpp"
#include "leibrack/error.hpp"
#include "leibrack/families.hpp"
#include "leibrack/matrix.hpp"
#include "leibrack/mpoly.hpp"
#include "leibrack/scalar.hpp"

namespace leibrack {

template <typename K>
using Point = std::vector<K>;

// Carrier K^{g_dim + c_dim} split as (complement of the commutator ideal,
// commutator coordinates); operation (x,a) |> (y,b) = (y, b + inc(x,a,y,b))
// where each central increment is a polynomial in the 2*(g_dim+c_dim) input
// coordinates (bilinear x (x) y for genuine cocycle racks; the general shape
// exists so corrupted non-examples can be represented and caught).
template <typename K>
struct AffineModel {
    std::size_t g_dim = 0;
    std::size_t c_dim = 0;
    std::vector<MPoly<K>> increment;  // c_dim entries, arity 2*(g_dim+c_dim)

    // embedding into the source algebra's coordinates, for exact tangents
    std::size_t ambient = 0;
    std::vector<std::size_t> g_index;      // ambient positions of carrier x-coords
    std::vector<std::size_t> c_pivot;      // pivot rows of central_basis
    Matrix<K> central_basis{0, 0};         // ambient x c_dim
    std::string source_name;

    std::size_t point_dim() const { return g_dim + c_dim; }
};

// Conjugation g |> h = g h g^{-1} in the group of upper unitriangular
// (n+2)x(n+2) matrices, parametrized by points (x_1..x_n, y_1..y_n, z).
template <typename K>
struct MatrixConjModel {
    std::size_t n = 0;

    std::size_t point_dim() const { return 2 * n + 1; }
};

// Circle-chart model: all three coordinates live in the chart [0, 1) (angles
// as rational fractions of a full turn); the increment applies the
// l3-parameter cocycle to the chart values and must land inside the chart.
struct LocalSO2Model {
    Rational a;
};

template <typename K>
Matrix<K> conj_point_matrix(const Point<K>& p, std::size_t n) {
    Matrix<K> m = Matrix<K>::identity(n + 2);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(0, 1 + i) = p[i];
        m.at(1 + i, n + 1) = p[n + i];
    }
    m.at(0, n + 1) = p[2 * n];
    return m;
}

namespace detail {

template <typename K>
Point<K> affine_apply(const AffineModel<K>& m, const Point<K>& g, const Point<K>& h) {
    const std::size_t d = m.point_dim();
    if (g.size() != d || h.size() != d) throw dimension_error("rack point has wrong dimension");
    Point<K> in;
    in.reserve(2 * d);
    in.insert(in.end(), g.begin(), g.end());
    in.insert(in.end(), h.begin(), h.end());
    Point<K> out = h;
    for (std::size_t c = 0; c < m.c_dim; ++c)
        out[m.g_dim + c] = out[m.g_dim + c] + m.increment[c].evaluate(in);
    return out;
}

template <typename K>
Point<K> conj_apply(const MatrixConjModel<K>& m, const Point<K>& g, const Point<K>& h) {
    const std::size_t d = m.point_dim();
    if (g.size() != d || h.size() != d) throw dimension_error("rack point has wrong dimension");
    Matrix<K> G = conj_point_matrix(g, m.n);
    Matrix<K> H = conj_point_matrix(h, m.n);
    Matrix<K> R = G * H * inverse(G);
    Point<K> out(d, K(0));
    for (std::size_t i = 0; i < m.n; ++i) {
        out[i] = R.at(0, 1 + i);
        out[m.n + i] = R.at(1 + i, m.n + 1);
    }
    out[2 * m.n] = R.at(0, m.n + 1);
    return out;
}

inline void so2_chart_check(const Point<Rational>& p, const char* side) {
    static const char* names[3] = {"x", "y", "z"};
    if (p.size() != 3) throw dimension_error("rack point has wrong dimension");
    for (std::size_t i = 0; i < 3; ++i)
        if (p[i] < 0 || p[i] >= 1)
            throw domain_error(std::string("coordinate ") + names[i] + " of the " + side +
                               " operand is outside the chart [0,1)");
}

inline Point<Rational> so2_apply(const LocalSO2Model& m, const Point<Rational>& g,
                                 const Point<Rational>& h) {
    so2_chart_check(g, "left");
    so2_chart_check(h, "right");
    Rational z = h[2] + (Rational(1) + m.a) * g[0] * h[1] + (Rational(-1) + m.a) * h[0] * g[1];
    if (z < 0 || z >= 1) throw domain_error("result coordinate z leaves the chart [0,1)");
    return {h[0], h[1], z};
}

}  // namespace detail

template <typename K>
struct RackSpec {
    std::variant<AffineModel<K>, MatrixConjModel<K>, LocalSO2Model> model;

    std::size_t point_dim() const {
        return std::visit(
            [](const auto& m) -> std::size_t {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, LocalSO2Model>)
                    return 3;
                else
                    return m.point_dim();
            },
            model);
    }
    Point<K> unit() const { return Point<K>(point_dim(), K(0)); }

    Point<K> apply(const Point<K>& g, const Point<K>& h) const {
        return std::visit(
            [&](const auto& m) -> Point<K> {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, LocalSO2Model>) {
                    if constexpr (std::is_same_v<K, Rational>)
                        return detail::so2_apply(m, g, h);
                    else
                        throw internal_error("circle-chart model requires rational scalars");
                } else if constexpr (std::is_same_v<T, AffineModel<K>>) {
                    return detail::affine_apply(m, g, h);
                } else {
                    return detail::conj_apply(m, g, h);
                }
            },
            model);
    }
};

// Builds an affine model directly from bilinear increment matrices (one
// g_dim x g_dim matrix per central coordinate), with the trivial embedding:
// carrier coordinates are the algebra coordinates, central block last.
template <typename K>
RackSpec<K> affine_model(std::size_t g_dim, const std::vector<Matrix<K>>& omega,
                         std::string name = "") {
    AffineModel<K> m;
    m.g_dim = g_dim;
    m.c_dim = omega.size();
    const std::size_t d = g_dim + m.c_dim;
    m.ambient = d;
    for (std::size_t i = 0; i < g_dim; ++i) m.g_index.push_back(i);
    m.central_basis = Matrix<K>(d, m.c_dim);
    for (std::size_t c = 0; c < m.c_dim; ++c) {
        m.c_pivot.push_back(g_dim + c);
        m.central_basis.at(g_dim + c, c) = K(1);
    }
    for (std::size_t c = 0; c < m.c_dim; ++c) {
        if (omega[c].rows() != g_dim || omega[c].cols() != g_dim)
            throw dimension_error("increment matrix has wrong shape");
        MPoly<K> inc(2 * d);
        for (std::size_t i = 0; i < g_dim; ++i)
            for (std::size_t j = 0; j < g_dim; ++j) {
                const K& w = omega[c].at(i, j);
                if (w == K(0)) continue;
                inc = inc + MPoly<K>::variable(2 * d, i) * MPoly<K>::variable(2 * d, d + j) * w;
            }
        m.increment.push_back(std::move(inc));
    }
    m.source_name = std::move(name);
    return RackSpec<K>{std::move(m)};
}

// Coefficient of (left point coordinate i) x (right point coordinate j) in
// central increment c of an affine model.
template <typename K>
K bilinear_coefficient(const AffineModel<K>& m, std::size_t c, std::size_t i, std::size_t j) {
    const std::size_t d = m.point_dim();
    typename MPoly<K>::Key key(2 * d, 0);
    key[i] += 1;
    key[d + j] += 1;
    auto it = m.increment[c].terms().find(key);
    return it == m.increment[c].terms().end() ? K(0) : it->second;
}

// Global integration of a two-step nilpotent algebra: splits L along the
// coordinate complement of the echelonized commutator ideal and reads the
// cocycle off the bracket, giving (x,a) |> (y,b) = (y, b + omega(x,y)).
template <typename K>
RackSpec<K> cocycle_rack(const LeibnizAlgebra<K>& L) {
    auto cls = nilpotency_class(L);
    if (!cls.has_value()) throw precondition_error("algebra is not nilpotent");
    if (*cls > 2)
        throw precondition_error("nilpotency class is " + std::to_string(*cls) +
                                 ", expected at most 2");
    const std::size_t n = L.dim();
    Subspace<K> W = commutator_ideal(L);
    const std::size_t q = W.dim();

    AffineModel<K> m;
    m.ambient = n;
    m.c_dim = q;
    m.central_basis = W.basis();
    for (std::size_t c = 0; c < q; ++c) {
        std::size_t r = 0;
        while (W.basis().at(r, c) == K(0)) ++r;
        m.c_pivot.push_back(r);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (std::find(m.c_pivot.begin(), m.c_pivot.end(), i) == m.c_pivot.end())
            m.g_index.push_back(i);
    m.g_dim = m.g_index.size();

    const std::size_t d = m.point_dim();
    for (std::size_t c = 0; c < q; ++c) m.increment.emplace_back(2 * d);
    for (std::size_t i = 0; i < m.g_dim; ++i)
        for (std::size_t j = 0; j < m.g_dim; ++j) {
            Vec<K> b = L.bracket_basis(m.g_index[i], m.g_index[j]);
            for (std::size_t c = 0; c < q; ++c) {
                const K& w = b[m.c_pivot[c]];  // commutator coordinates read off pivots
                if (w == K(0)) continue;
                m.increment[c] = m.increment[c] +
                                 MPoly<K>::variable(2 * d, i) * MPoly<K>::variable(2 * d, d + j) * w;
            }
        }
    m.source_name = L.name();
    return RackSpec<K>{std::move(m)};
}

template <typename K>
RackSpec<K> heisenberg_rack(const Matrix<K>& A);
template <typename K = Rational>
RackSpec<K> kronecker_rack(std::size_t n);
template <typename K = Rational>
RackSpec<K> dieudonne_rack(std::size_t n);
inline RackSpec<Rational> realified_heisenberg_rack(const GaussianRational& a, std::size_t n);

template <typename K = Rational>
RackSpec<K> conj_heisenberg(std::size_t n) {
    if (n == 0) throw precondition_error("conjugation rack needs n >= 1");
    return RackSpec<K>{MatrixConjModel<K>{n}};
}

// Closed form of the unitriangular conjugation: only the z-coordinate moves,
// by the symplectic pairing of the two points.
template <typename K>
Point<K> conj_closed_form(std::size_t n, const Point<K>& g, const Point<K>& h) {
    Point<K> out = h;
    for (std::size_t i = 0; i < n; ++i)
        out[2 * n] = out[2 * n] + g[i] * h[n + i] - g[n + i] * h[i];
    return out;
}

inline RackSpec<Rational> so2_local_rack(const Rational& a) {
    return RackSpec<Rational>{LocalSO2Model{a}};
}

template <typename K>
struct RackReport {
    bool self_distributive = true;
    std::vector<Point<K>> self_distributive_witness;  // (x, y, z) violating the axiom
    bool left_translation_bijective = true;
    std::vector<Point<K>> bijective_witness;  // (x, h1, h2) with equal images
    bool pointed = true;
    std::vector<Point<K>> pointed_witness;  // single offending point
    bool quandle = true;
    Point<K> quandle_witness;  // x with x |> x != x

    bool rack_axioms_pass() const {
        return self_distributive && left_translation_bijective && pointed;
    }
};

template <typename K>
struct QuandleResult {
    bool quandle = true;
    Point<K> witness;  // empty when quandle
};

namespace detail {

// deterministic small-rational stream for witness search
class WitnessRng {
public:
    explicit WitnessRng(unsigned long long seed) : state_(seed) {}
    long next_int(long bound) {  // in [-bound, bound]
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((state_ >> 33) % (2 * bound + 1)) - bound;
    }
    template <typename K>
    K next_scalar() {
        long num = next_int(3);
        long den = 1 + (next_int(1) + 1);  // 1..3
        return K(Rational(num, den));
    }

private:
    unsigned long long state_;
};

template <typename K>
std::vector<MPoly<K>> sym_point(std::size_t dim, std::size_t slot, std::size_t nslots) {
    std::vector<MPoly<K>> p;
    for (std::size_t i = 0; i < dim; ++i)
        p.push_back(MPoly<K>::variable(nslots * dim, slot * dim + i));
    return p;
}

template <typename K>
std::vector<MPoly<K>> sym_apply(const AffineModel<K>& m, const std::vector<MPoly<K>>& P,
                                const std::vector<MPoly<K>>& Q) {
    std::vector<MPoly<K>> repl;
    repl.reserve(P.size() + Q.size());
    repl.insert(repl.end(), P.begin(), P.end());
    repl.insert(repl.end(), Q.begin(), Q.end());
    std::vector<MPoly<K>> out = Q;
    for (std::size_t c = 0; c < m.c_dim; ++c)
        out[m.g_dim + c] = out[m.g_dim + c] + m.increment[c].substitute(repl);
    return out;
}

// Finds points making at least one of the difference polynomials nonzero;
// the polynomials are nonzero and of low degree, so small random rationals
// succeed almost surely.
template <typename K>
std::vector<Point<K>> nonvanishing_point(const std::vector<MPoly<K>>& diff, std::size_t dim,
                                         std::size_t nslots) {
    WitnessRng rng(20250814);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<K> point(nslots * dim);
        for (auto& c : point) c = rng.template next_scalar<K>();
        bool hit = false;
        for (const auto& p : diff)
            if (!p.is_zero() && !(p.evaluate(point) == K(0))) {
                hit = true;
                break;
            }
        if (!hit) continue;
        std::vector<Point<K>> slots(nslots);
        for (std::size_t s = 0; s < nslots; ++s)
            slots[s] = Point<K>(point.begin() + s * dim, point.begin() + (s + 1) * dim);
        return slots;
    }
    throw internal_error("failed to find a witness for a nonzero polynomial");
}

}  // namespace detail

// Symbolic axiom check for affine models: both sides of every axiom are
// polynomial maps of the point coordinates, so identities are decided by
// coefficient comparison after composition, not by sampling.
template <typename K>
RackReport<K> rack_axioms_check_symbolic(const RackSpec<K>& r) {
    const auto* m = std::get_if<AffineModel<K>>(&r.model);
    if (m == nullptr) throw precondition_error("symbolic check requires an affine model");
    const std::size_t d = m->point_dim();
    RackReport<K> rep;

    auto X = detail::sym_point<K>(d, 0, 3);
    auto Y = detail::sym_point<K>(d, 1, 3);
    auto Z = detail::sym_point<K>(d, 2, 3);
    auto lhs = detail::sym_apply(*m, X, detail::sym_apply(*m, Y, Z));
    auto rhs = detail::sym_apply(*m, detail::sym_apply(*m, X, Y), detail::sym_apply(*m, X, Z));
    std::vector<MPoly<K>> diff;
    for (std::size_t i = 0; i < d; ++i) diff.push_back(lhs[i] - rhs[i]);
    if (std::any_of(diff.begin(), diff.end(), [](const MPoly<K>& p) { return !p.is_zero(); })) {
        rep.self_distributive = false;
        rep.self_distributive_witness = detail::nonvanishing_point(diff, d, 3);
    }

    // unit laws: increments must vanish when either argument is the unit
    std::vector<MPoly<K>> zeros(d, MPoly<K>(d)), vars;
    for (std::size_t i = 0; i < d; ++i) {
        zeros[i] = MPoly<K>::constant(d, K(0));
        vars.push_back(MPoly<K>::variable(d, i));
    }
    std::vector<MPoly<K>> unit_left, unit_right;
    for (std::size_t c = 0; c < m->c_dim; ++c) {
        std::vector<MPoly<K>> at_left, at_right;
        at_left.insert(at_left.end(), zeros.begin(), zeros.end());
        at_left.insert(at_left.end(), vars.begin(), vars.end());
        at_right.insert(at_right.end(), vars.begin(), vars.end());
        at_right.insert(at_right.end(), zeros.begin(), zeros.end());
        unit_left.push_back(m->increment[c].substitute(at_left));
        unit_right.push_back(m->increment[c].substitute(at_right));
    }
    std::vector<MPoly<K>> unit_diff = unit_left;
    unit_diff.insert(unit_diff.end(), unit_right.begin(), unit_right.end());
    if (std::any_of(unit_diff.begin(), unit_diff.end(),
                    [](const MPoly<K>& p) { return !p.is_zero(); })) {
        rep.pointed = false;
        rep.pointed_witness = detail::nonvanishing_point(unit_diff, d, 1);
    }

    // left translations: when no increment reads the right operand's central
    // coordinates the map is a translation in the central block, hence exactly
    // bijective; otherwise search for a collision on a small grid
    bool translation = true;
    for (const auto& inc : m->increment)
        if (!inc.independent_of(d + m->g_dim, m->c_dim)) translation = false;
    if (!translation) {
        std::vector<K> grid = {K(0), K(-1), K(1), K(Rational(1, 2)), K(-2), K(2)};
        detail::WitnessRng rng(97);
        for (int attempt = 0; attempt < 60 && rep.left_translation_bijective; ++attempt) {
            Point<K> x(d), h(d);
            for (auto& c : x) c = rng.template next_scalar<K>();
            for (auto& c : h) c = rng.template next_scalar<K>();
            for (std::size_t c = 0; c < m->c_dim && rep.left_translation_bijective; ++c)
                for (const K& g1 : grid) {
                    for (const K& g2 : grid) {
                        if (g1 == g2) continue;
                        Point<K> h1 = h, h2 = h;
                        h1[m->g_dim + c] = g1;
                        h2[m->g_dim + c] = g2;
                        if (r.apply(x, h1) == r.apply(x, h2)) {
                            rep.left_translation_bijective = false;
                            rep.bijective_witness = {x, h1, h2};
                            break;
                        }
                    }
                    if (!rep.left_translation_bijective) break;
                }
        }
    }

    // quandle: x |> x = x iff every increment vanishes on the diagonal
    std::vector<MPoly<K>> diag_repl;
    diag_repl.insert(diag_repl.end(), vars.begin(), vars.end());
    diag_repl.insert(diag_repl.end(), vars.begin(), vars.end());
    std::vector<MPoly<K>> diag;
    for (std::size_t c = 0; c < m->c_dim; ++c)
        diag.push_back(m->increment[c].substitute(diag_repl));
    if (std::any_of(diag.begin(), diag.end(), [](const MPoly<K>& p) { return !p.is_zero(); })) {
        rep.quandle = false;
        rep.quandle_witness = detail::nonvanishing_point(diag, d, 1)[0];
    }
    return rep;
}

// Sample-based axiom check usable on every model. Self-distributivity runs on
// the cyclic triples of the sample list, bijectivity compares images of all
// samples under the first few left translations, unit and quandle laws are
// checked pointwise.
template <typename K>
RackReport<K> rack_axioms_check(const RackSpec<K>& r, const std::vector<Point<K>>& samples) {
    RackReport<K> rep;
    const Point<K> e = r.unit();
    for (const auto& s : samples) {
        if (rep.pointed && !(r.apply(e, s) == s && r.apply(s, e) == e)) {
            rep.pointed = false;
            rep.pointed_witness = {s};
        }
        if (rep.quandle && !(r.apply(s, s) == s)) {
            rep.quandle = false;
            rep.quandle_witness = s;
        }
    }
    const std::size_t N = samples.size();
    for (std::size_t i = 0; i < N && rep.self_distributive; ++i) {
        const auto& x = samples[i];
        const auto& y = samples[(i + 1) % N];
        const auto& z = samples[(i + 2) % N];
        if (!(r.apply(x, r.apply(y, z)) == r.apply(r.apply(x, y), r.apply(x, z)))) {
            rep.self_distributive = false;
            rep.self_distributive_witness = {x, y, z};
        }
    }
    const std::size_t translations = std::min<std::size_t>(N, 20);
    for (std::size_t i = 0; i < translations && rep.left_translation_bijective; ++i) {
        std::vector<Point<K>> images;
        images.reserve(N);
        for (const auto& h : samples) images.push_back(r.apply(samples[i], h));
        for (std::size_t a = 0; a < N && rep.left_translation_bijective; ++a)
            for (std::size_t b = a + 1; b < N; ++b)
                if (images[a] == images[b] && !(samples[a] == samples[b])) {
                    rep.left_translation_bijective = false;
                    rep.bijective_witness = {samples[i], samples[a], samples[b]};
                    break;
                }
    }
    return rep;
}

template <typename K>
QuandleResult<K> is_quandle(const RackSpec<K>& r) {
    if (const auto* m = std::get_if<AffineModel<K>>(&r.model)) {
        const std::size_t d = m->point_dim();
        std::vector<MPoly<K>> vars, diag_repl;
        for (std::size_t i = 0; i < d; ++i) vars.push_back(MPoly<K>::variable(d, i));
        diag_repl.insert(diag_repl.end(), vars.begin(), vars.end());
        diag_repl.insert(diag_repl.end(), vars.begin(), vars.end());
        std::vector<MPoly<K>> diag;
        for (std::size_t c = 0; c < m->c_dim; ++c)
            diag.push_back(m->increment[c].substitute(diag_repl));
        QuandleResult<K> res;
        if (std::any_of(diag.begin(), diag.end(),
                        [](const MPoly<K>& p) { return !p.is_zero(); })) {
            res.quandle = false;
            res.witness = detail::nonvanishing_point(diag, d, 1)[0];
        }
        return res;
    }
    if (std::holds_alternative<MatrixConjModel<K>>(r.model))
        return {};  // g h g^{-1} = g at h = g, identically
    // chart model: sample the diagonal inside the chart
    QuandleResult<K> res;
    if constexpr (std::is_same_v<K, Rational>) {
        std::vector<Rational> grid = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(2, 3)};
        for (const auto& x : grid)
            for (const auto& y : grid) {
                Point<K> p = {x, y, Rational(1, 3)};
                try {
                    if (!(r.apply(p, p) == p)) {
                        res.quandle = false;
                        res.witness = p;
                        return res;
                    }
                } catch (const domain_error&) {
                    // increment left the chart; not evidence either way
                }
            }
    }
    return res;
}

// Exact tangent algebra of an affine model at the unit: the bracket of two
// carrier directions is the mixed second difference of (su) |> (tv) over
// s,t in {0,1}, reassembled in the source algebra's coordinates.
template <typename K>
LeibnizAlgebra<K> tangent_algebra(const RackSpec<K>& r) {
    const auto* m = std::get_if<AffineModel<K>>(&r.model);
    if (m == nullptr) throw precondition_error("tangent extraction requires an affine model");
    const std::size_t n = m->ambient;
    const std::size_t d = m->point_dim();

    // carrier coordinates of an ambient vector: central coordinates are read
    // off the pivot rows, the complement remainder off g_index
    auto carrier = [&](const Vec<K>& v) {
        Point<K> out(d, K(0));
        Vec<K> central(m->c_dim, K(0));
        for (std::size_t c = 0; c < m->c_dim; ++c) central[c] = v[m->c_pivot[c]];
        Vec<K> w = m->c_dim == 0 ? zero_vec<K>(n) : mat_vec(m->central_basis, central);
        for (std::size_t i = 0; i < m->g_dim; ++i)
            out[i] = v[m->g_index[i]] - w[m->g_index[i]];
        for (std::size_t c = 0; c < m->c_dim; ++c) out[m->g_dim + c] = central[c];
        return out;
    };

    LeibnizAlgebra<K> L(n, m->source_name);
    const Point<K> zero(d, K(0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            Point<K> u = carrier(basis_vec<K>(n, k));
            Point<K> v = carrier(basis_vec<K>(n, l));
            // F(1,1) - F(1,0) - F(0,1) + F(0,0) in the central block
            Point<K> f11 = r.apply(u, v), f10 = r.apply(u, zero), f01 = r.apply(zero, v),
                     f00 = r.apply(zero, zero);
            Vec<K> delta(m->c_dim, K(0));
            for (std::size_t c = 0; c < m->c_dim; ++c)
                delta[c] = f11[m->g_dim + c] - f10[m->g_dim + c] - f01[m->g_dim + c] +
                           f00[m->g_dim + c];
            if (m->c_dim == 0) continue;
            Vec<K> img = mat_vec(m->central_basis, delta);
            for (std::size_t t = 0; t < n; ++t) L.c(k, l, t) = img[t];
        }
    return L;
}

template <typename K>
RackSpec<K> heisenberg_rack(const Matrix<K>& A) {
    return cocycle_rack(heisenberg_leibniz(A, "l_" + std::to_string(2 * A.rows() + 1) + "^A"));
}

template <typename K>
RackSpec<K> kronecker_rack(std::size_t n) {
    return cocycle_rack(kronecker_algebra<K>(n));
}

template <typename K>
RackSpec<K> dieudonne_rack(std::size_t n) {
    return cocycle_rack(dieudonne_algebra<K>(n));
}

inline RackSpec<Rational> realified_heisenberg_rack(const GaussianRational& a, std::size_t n) {
    return cocycle_rack(realified_complex_heisenberg(a, n));
}

}  // namespace leibrack
