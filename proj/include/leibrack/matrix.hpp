#pragma once

// Dense exact matrices over a field (Rational, GaussianRational) or a
// commutative ring (Polynomial<K>). Elimination-based routines require
// field scalars; the container and ring arithmetic are generic.

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "leibrack/error.hpp"
#include "leibrack/scalar.hpp"

namespace leibrack {

template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw dimension_error("ragged matrix initializer");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) {
        check(i, j);
        return data_[i * cols_ + j];
    }
    const T& at(std::size_t i, std::size_t j) const {
        check(i, j);
        return data_[i * cols_ + j];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!(v == T(0))) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        same_shape(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        same_shape(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& v : r.data_) v = -v;
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw dimension_error("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    T t = a * o.at(k, j);
                    r.at(i, j) += t;
                }
            }
        return r;
    }
    Matrix operator*(const T& s) const {
        Matrix r = *this;
        for (auto& v : r.data_) v *= s;
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& m) { return m * s; }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Matrix submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
        Matrix r(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j) r.at(i, j) = at(row_idx[i], col_idx[j]);
        return r;
    }

    void set_block(std::size_t top, std::size_t left, const Matrix& b) {
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) at(top + i, left + j) = b.at(i, j);
    }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& cols) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw dimension_error("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    static Matrix vstack(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_) throw dimension_error("vstack width mismatch");
        Matrix r(a.rows_ + b.rows_, a.cols_);
        r.set_block(0, 0, a);
        r.set_block(a.rows_, 0, b);
        return r;
    }

  private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw dimension_error("matrix index out of range");
    }
    void same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

template <typename T>
std::vector<T> mat_vec(const Matrix<T>& m, const std::vector<T>& v) {
    if (v.size() != m.cols()) throw dimension_error("matrix-vector size mismatch");
    std::vector<T> out(m.rows(), T(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] = out[i] + m.at(i, j) * v[j];
    return out;
}

// In-place Gauss-Jordan reduction; returns pivot columns. Field scalars only.
template <typename K>
std::vector<std::size_t> rref(Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, c) == K(0)) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        K inv = K(1) / m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) {
            K t = m.at(r, j) * inv;
            m.at(r, j) = t;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            K f = m.at(i, c);
            if (f == K(0)) continue;
            for (std::size_t j = c; j < m.cols(); ++j) {
                K t = m.at(i, j) - f * m.at(r, j);
                m.at(i, j) = t;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <typename K>
std::size_t rank(Matrix<K> m) {
    return rref(m).size();
}

// Basis of the right null space, one column per free variable, in the
// canonical reduced form induced by the rref.
template <typename K>
Matrix<K> kernel(Matrix<K> m) {
    const std::size_t n = m.cols();
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<K> v(n, K(0));
        v[j] = K(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, j);
        basis.push_back(std::move(v));
    }
    return Matrix<K>::from_columns(n, basis);
}

template <typename K>
Matrix<K> inverse(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw dimension_error("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<K> aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Matrix<K>::identity(n));
    std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != n || (n > 0 && pivots[n - 1] != n - 1))
        throw singular_error("matrix is singular");
    std::vector<std::size_t> all(n), right(n);
    for (std::size_t i = 0; i < n; ++i) {
        all[i] = i;
        right[i] = n + i;
    }
    return aug.submatrix(all, right);
}

template <typename K>
K determinant(Matrix<K> m) {
    if (m.rows() != m.cols()) throw dimension_error("determinant of non-square matrix");
    K det(1);
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m.at(piv, c) == K(0)) ++piv;
        if (piv == n) return K(0);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        K inv = K(1) / m.at(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            K f = m.at(i, c) * inv;
            if (f == K(0)) continue;
            for (std::size_t j = c; j < n; ++j) {
                K t = m.at(i, j) - f * m.at(c, j);
                m.at(i, j) = t;
            }
        }
    }
    return det;
}

}  // namespace leibrack
