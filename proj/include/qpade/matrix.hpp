#pragma once

#include <cstddef>
#include <vector>

#include "qpade/errors.hpp"
#include "qpade/rational.hpp"

namespace qpade {

/// Dense rectangular matrix.  T is Rat for the linear-algebra kernel, Poly
/// for the interpolation determinant formulae.
template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    static Matrix identity(size_t n) {
        Matrix m(n, n, T(0));
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    Matrix transposed() const {
        Matrix m(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

  private:
    size_t rows_, cols_;
    std::vector<T> e_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.  Every division
/// in the update is exact by Sylvester's identity, so T only needs an exact
/// quotient for arguments that actually divide.  The 0x0 determinant is 1.
template <class T>
T det(Matrix<T> m) {
    if (m.rows() != m.cols()) throw DomainError("det: matrix is not square");
    size_t n = m.rows();
    if (n == 0) return T(1);
    T prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            size_t r = k + 1;
            while (r < n && m(r, k).is_zero()) ++r;
            if (r == n) return T(0);
            for (size_t j = k; j < n; ++j) std::swap(m(k, j), m(r, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return sign < 0 ? T(0) - d : d;
}

namespace detail {

/// Fraction-free forward elimination; records the pivot column of each pivot
/// row.  Returns the number of pivots (= rank).
template <class T>
size_t echelonize(Matrix<T>& m, std::vector<size_t>& pivot_cols) {
    size_t rows = m.rows(), cols = m.cols();
    pivot_cols.clear();
    T prev(1);
    size_t prow = 0;
    for (size_t col = 0; col < cols && prow < rows; ++col) {
        size_t r = prow;
        while (r < rows && m(r, col).is_zero()) ++r;
        if (r == rows) continue;
        if (r != prow)
            for (size_t j = 0; j < cols; ++j) std::swap(m(prow, j), m(r, j));
        for (size_t i = prow + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j)
                m(i, j) = (m(prow, col) * m(i, j) - m(i, col) * m(prow, j)) / prev;
            m(i, col) = T(0);
        }
        prev = m(prow, col);
        pivot_cols.push_back(col);
        ++prow;
    }
    return pivot_cols.size();
}

} // namespace detail

inline size_t rank(Matrix<Rat> m) {
    std::vector<size_t> pc;
    return detail::echelonize(m, pc);
}

/// Basis of the exact kernel; one vector per free column, back-substituted
/// through the echelon form.  dim = cols - rank.
inline std::vector<std::vector<Rat>> nullspace(Matrix<Rat> m) {
    size_t cols = m.cols();
    std::vector<size_t> pc;
    size_t rk = detail::echelonize(m, pc);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pc) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[fc] = Rat(1);
        for (size_t ii = rk; ii-- > 0;) {
            size_t c = pc[ii];
            Rat s(0);
            for (size_t j = c + 1; j < cols; ++j)
                if (!v[j].is_zero()) s += m(ii, j) * v[j];
            v[c] = -s / m(ii, c);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace qpade
