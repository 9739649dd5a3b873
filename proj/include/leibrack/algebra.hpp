#pragma once

// Finite-dimensional Leibniz algebras given by exact structure constants,
// plus the subspace lattice operations needed to analyze them (centers,
// commutator and squares ideals, lower central series, nilpotency class).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibrack/error.hpp"
#include "leibrack/matrix.hpp"

namespace leibrack {

template <typename K>
using Vec = std::vector<K>;

template <typename K>
Vec<K> zero_vec(std::size_t n) {
    return Vec<K>(n, K(0));
}

template <typename K>
Vec<K> basis_vec(std::size_t n, std::size_t i) {
    Vec<K> v(n, K(0));
    v.at(i) = K(1);
    return v;
}

template <typename K>
bool vec_is_zero(const Vec<K>& v) {
    for (const auto& x : v)
        if (!(x == K(0))) return false;
    return true;
}

template <typename K>
Vec<K> vec_add(const Vec<K>& a, const Vec<K>& b) {
    if (a.size() != b.size()) throw dimension_error("vector size mismatch");
    Vec<K> out(a.size(), K(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

template <typename K>
Vec<K> vec_sub(const Vec<K>& a, const Vec<K>& b) {
    if (a.size() != b.size()) throw dimension_error("vector size mismatch");
    Vec<K> out(a.size(), K(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

template <typename K>
Vec<K> vec_scale(const K& s, const Vec<K>& v) {
    Vec<K> out(v.size(), K(0));
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

// A linear subspace of K^n held in canonical form: the basis matrix is the
// transpose of the reduced row echelon form of the row space, so two
// Subspace values are equal iff they are the same subspace.
template <typename K>
class Subspace {
  public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}

    static Subspace span(std::size_t ambient, const Matrix<K>& columns) {
        if (columns.rows() != ambient) throw dimension_error("span column height mismatch");
        Subspace s(ambient);
        Matrix<K> rows = columns.transpose();
        rref(rows);
        std::vector<Vec<K>> keep;
        for (std::size_t i = 0; i < rows.rows(); ++i) {
            Vec<K> r(ambient, K(0));
            bool nz = false;
            for (std::size_t j = 0; j < ambient; ++j) {
                r[j] = rows.at(i, j);
                if (!(r[j] == K(0))) nz = true;
            }
            if (nz) keep.push_back(std::move(r));
        }
        s.basis_ = Matrix<K>::from_columns(ambient, keep);
        return s;
    }

    static Subspace span_vectors(std::size_t ambient, const std::vector<Vec<K>>& vecs) {
        return span(ambient, Matrix<K>::from_columns(ambient, vecs));
    }

    static Subspace full(std::size_t ambient) {
        return span(ambient, Matrix<K>::identity(ambient));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    bool is_zero() const { return basis_.cols() == 0; }
    const Matrix<K>& basis() const { return basis_; }

    bool contains(const Vec<K>& v) const {
        if (v.size() != ambient_) throw dimension_error("vector not in ambient space");
        std::vector<Vec<K>> cols;
        for (std::size_t j = 0; j < basis_.cols(); ++j) cols.push_back(basis_.column(j));
        cols.push_back(v);
        Matrix<K> m = Matrix<K>::from_columns(ambient_, cols);
        return rank(m) == dim();
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw dimension_error("ambient dimension mismatch");
        for (std::size_t j = 0; j < other.basis_.cols(); ++j)
            if (!contains(other.basis_.column(j))) return false;
        return true;
    }

    Subspace sum(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw dimension_error("ambient dimension mismatch");
        std::vector<Vec<K>> cols;
        for (std::size_t j = 0; j < basis_.cols(); ++j) cols.push_back(basis_.column(j));
        for (std::size_t j = 0; j < other.basis_.cols(); ++j) cols.push_back(other.basis_.column(j));
        return span_vectors(ambient_, cols);
    }

    // Solves b1*u = b2*w; the u-part of each kernel vector maps to a spanning
    // vector of the intersection.
    Subspace intersect(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw dimension_error("ambient dimension mismatch");
        std::size_t d1 = dim(), d2 = other.dim();
        if (d1 == 0 || d2 == 0) return Subspace(ambient_);
        Matrix<K> stacked(ambient_, d1 + d2);
        for (std::size_t i = 0; i < ambient_; ++i) {
            for (std::size_t j = 0; j < d1; ++j) stacked.at(i, j) = basis_.at(i, j);
            for (std::size_t j = 0; j < d2; ++j) stacked.at(i, d1 + j) = -other.basis_.at(i, j);
        }
        Matrix<K> ker = kernel(stacked);
        std::vector<Vec<K>> cols;
        for (std::size_t j = 0; j < ker.cols(); ++j) {
            Vec<K> u(ambient_, K(0));
            for (std::size_t i = 0; i < ambient_; ++i)
                for (std::size_t a = 0; a < d1; ++a) u[i] = u[i] + basis_.at(i, a) * ker.at(a, j);
            cols.push_back(std::move(u));
        }
        return span_vectors(ambient_, cols);
    }

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

  private:
    std::size_t ambient_ = 0;
    Matrix<K> basis_;  // ambient_ x dim, canonical
};

template <typename K>
class LeibnizAlgebra {
  public:
    explicit LeibnizAlgebra(std::size_t dim, std::string name = "")
        : n_(dim), c_(dim * dim * dim, K(0)), name_(std::move(name)) {}

    std::size_t dim() const { return n_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    // Coefficient of e_k in [e_i, e_j]; zero-based indices.
    const K& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[idx(i, j, k)]; }
    K& c(std::size_t i, std::size_t j, std::size_t k) { return c_[idx(i, j, k)]; }

    Vec<K> bracket(const Vec<K>& x, const Vec<K>& y) const {
        if (x.size() != n_ || y.size() != n_) throw dimension_error("bracket operand size mismatch");
        Vec<K> out(n_, K(0));
        for (std::size_t i = 0; i < n_; ++i) {
            if (x[i] == K(0)) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (y[j] == K(0)) continue;
                K f = x[i] * y[j];
                for (std::size_t k = 0; k < n_; ++k) {
                    K t = out[k] + f * c(i, j, k);
                    out[k] = t;
                }
            }
        }
        return out;
    }

    Vec<K> bracket_basis(std::size_t i, std::size_t j) const {
        Vec<K> out(n_, K(0));
        for (std::size_t k = 0; k < n_; ++k) out[k] = c(i, j, k);
        return out;
    }

    // Matrix of ad_x = [x,-] acting on coordinates.
    Matrix<K> left_multiplication(const Vec<K>& x) const {
        if (x.size() != n_) throw dimension_error("operand size mismatch");
        Matrix<K> m(n_, n_);
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) {
                K acc(0);
                for (std::size_t i = 0; i < n_; ++i) acc = acc + x[i] * c(i, j, k);
                m.at(k, j) = acc;
            }
        return m;
    }

    bool operator==(const LeibnizAlgebra& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const LeibnizAlgebra& o) const { return !(*this == o); }

  private:
    std::size_t idx(std::size_t i, std::size_t j, std::size_t k) const {
        if (i >= n_ || j >= n_ || k >= n_) throw dimension_error("structure constant index out of range");
        return (i * n_ + j) * n_ + k;
    }

    std::size_t n_;
    std::vector<K> c_;
    std::string name_;
};

template <typename K>
struct IdentityWitness {
    std::size_t i, j, k;  // basis triple where the identity fails
    Vec<K> residual;
};

// Residual of [e_i,[e_j,e_k]] = [[e_i,e_j],e_k] + [e_j,[e_i,e_k]].
template <typename K>
std::optional<IdentityWitness<K>> check_left_leibniz(const LeibnizAlgebra<K>& L) {
    std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec<K> lhs = L.bracket(basis_vec<K>(n, i), L.bracket_basis(j, k));
                Vec<K> rhs = vec_add(L.bracket(L.bracket_basis(i, j), basis_vec<K>(n, k)),
                                     L.bracket(basis_vec<K>(n, j), L.bracket_basis(i, k)));
                Vec<K> res = vec_sub(lhs, rhs);
                if (!vec_is_zero(res)) return IdentityWitness<K>{i, j, k, std::move(res)};
            }
    return std::nullopt;
}

// Residual of [[e_i,e_j],e_k] = [[e_i,e_k],e_j] + [e_i,[e_j,e_k]].
template <typename K>
std::optional<IdentityWitness<K>> check_right_leibniz(const LeibnizAlgebra<K>& L) {
    std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec<K> lhs = L.bracket(L.bracket_basis(i, j), basis_vec<K>(n, k));
                Vec<K> rhs = vec_add(L.bracket(L.bracket_basis(i, k), basis_vec<K>(n, j)),
                                     L.bracket(basis_vec<K>(n, i), L.bracket_basis(j, k)));
                Vec<K> res = vec_sub(lhs, rhs);
                if (!vec_is_zero(res)) return IdentityWitness<K>{i, j, k, std::move(res)};
            }
    return std::nullopt;
}

template <typename K>
Subspace<K> commutator_ideal(const LeibnizAlgebra<K>& L) {
    std::size_t n = L.dim();
    std::vector<Vec<K>> cols;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cols.push_back(L.bracket_basis(i, j));
    return Subspace<K>::span_vectors(n, cols);
}

// Span of all squares [x,x]; by bilinearity it is generated by the diagonal
// brackets together with the symmetrized off-diagonal ones.
template <typename K>
Subspace<K> leib_ideal(const LeibnizAlgebra<K>& L) {
    std::size_t n = L.dim();
    std::vector<Vec<K>> cols;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            cols.push_back(vec_add(L.bracket_basis(i, j), L.bracket_basis(j, i)));
    return Subspace<K>::span_vectors(n, cols);
}

// {x : [x,L] = 0}
template <typename K>
Subspace<K> left_center(const LeibnizAlgebra<K>& L) {
    std::size_t n = L.dim();
    if (n == 0) return Subspace<K>(0);
    Matrix<K> m(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) m.at(j * n + k, i) = L.c(i, j, k);
    return Subspace<K>::span(n, kernel(m));
}

// {x : [L,x] = 0}
template <typename K>
Subspace<K> right_center(const LeibnizAlgebra<K>& L) {
    std::size_t n = L.dim();
    if (n == 0) return Subspace<K>(0);
    Matrix<K> m(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) m.at(i * n + k, j) = L.c(i, j, k);
    return Subspace<K>::span(n, kernel(m));
}

template <typename K>
Subspace<K> center(const LeibnizAlgebra<K>& L) {
    return left_center(L).intersect(right_center(L));
}

// Terms L = S_0 >= S_1 >= ... with S_{m+1} = [L, S_m]; the list stops at the
// first zero term or at the first repeat (non-nilpotent tail).
template <typename K>
std::vector<Subspace<K>> lower_central_series(const LeibnizAlgebra<K>& L) {
    std::size_t n = L.dim();
    std::vector<Subspace<K>> series;
    series.push_back(Subspace<K>::full(n));
    while (true) {
        const Subspace<K>& cur = series.back();
        if (cur.is_zero()) break;
        std::vector<Vec<K>> cols;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t b = 0; b < cur.dim(); ++b)
                cols.push_back(L.bracket(basis_vec<K>(n, i), cur.basis().column(b)));
        Subspace<K> next = Subspace<K>::span_vectors(n, cols);
        if (next == cur) break;
        series.push_back(std::move(next));
    }
    return series;
}

// Number of steps m with S_m = 0 != S_{m-1}; empty when the series
// stabilizes above zero.
template <typename K>
std::optional<std::size_t> nilpotency_class(const LeibnizAlgebra<K>& L) {
    auto series = lower_central_series(L);
    if (!series.back().is_zero()) return std::nullopt;
    return series.size() - 1;
}

template <typename K>
LeibnizAlgebra<K> direct_sum(const LeibnizAlgebra<K>& A, const LeibnizAlgebra<K>& B) {
    std::size_t na = A.dim(), nb = B.dim();
    LeibnizAlgebra<K> S(na + nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) S.c(i, j, k) = A.c(i, j, k);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k) S.c(na + i, na + j, na + k) = B.c(i, j, k);
    return S;
}

template <typename K>
LeibnizAlgebra<K> abelian_algebra(std::size_t n) {
    return LeibnizAlgebra<K>(n, "abelian");
}

// Structure constants in the basis e'_i = sum_a P(i,a) e_a. Throws when P is
// singular. Contracted one index at a time to stay O(n^4) per stage.
template <typename K>
LeibnizAlgebra<K> change_basis(const LeibnizAlgebra<K>& L, const Matrix<K>& P) {
    std::size_t n = L.dim();
    if (P.rows() != n || P.cols() != n) throw dimension_error("basis matrix shape mismatch");
    Matrix<K> Q = inverse(P);
    std::vector<K> t1(n * n * n, K(0));  // t1[i][b][c] = sum_a P(i,a) c(a,b,c)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a) {
            if (P.at(i, a) == K(0)) continue;
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t cc = 0; cc < n; ++cc) {
                    K t = t1[(i * n + b) * n + cc] + P.at(i, a) * L.c(a, b, cc);
                    t1[(i * n + b) * n + cc] = t;
                }
        }
    std::vector<K> t2(n * n * n, K(0));  // t2[i][j][c] = sum_b P(j,b) t1[i][b][c]
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t b = 0; b < n; ++b) {
            if (P.at(j, b) == K(0)) continue;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t cc = 0; cc < n; ++cc) {
                    K t = t2[(i * n + j) * n + cc] + P.at(j, b) * t1[(i * n + b) * n + cc];
                    t2[(i * n + j) * n + cc] = t;
                }
        }
    LeibnizAlgebra<K> out(n, L.name());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t d = 0; d < n; ++d) {
                K acc(0);
                for (std::size_t cc = 0; cc < n; ++cc) acc = acc + t2[(i * n + j) * n + cc] * Q.at(cc, d);
                out.c(i, j, d) = acc;
            }
    return out;
}

// Linear map phi(e_i) = sum_a F(i,a) f_a respects brackets on all basis pairs.
template <typename K>
bool is_homomorphism(const LeibnizAlgebra<K>& A, const LeibnizAlgebra<K>& B, const Matrix<K>& F) {
    std::size_t na = A.dim(), nb = B.dim();
    if (F.rows() != na || F.cols() != nb) throw dimension_error("map matrix shape mismatch");
    Matrix<K> Ft = F.transpose();
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            Vec<K> lhs = mat_vec(Ft, A.bracket_basis(i, j));
            Vec<K> rhs = B.bracket(mat_vec(Ft, basis_vec<K>(na, i)), mat_vec(Ft, basis_vec<K>(na, j)));
            if (lhs != rhs) return false;
        }
    return true;
}

template <typename K>
bool is_isomorphism(const LeibnizAlgebra<K>& A, const LeibnizAlgebra<K>& B, const Matrix<K>& P) {
    if (A.dim() != B.dim()) return false;
    if (P.rows() != A.dim() || P.cols() != A.dim()) return false;
    if (rank(P) != A.dim()) return false;
    return change_basis(A, P) == B;
}

}  // namespace leibrack
