// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "xx0/errors.hpp"

namespace xx0 {

using Complex = std::complex<double>;

/// Dense row-major matrix over an arbitrary ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Fraction-free (Bareiss) determinant over an integral domain.
///
/// `exact_div(a, b)` must return a / b when b divides a; every division the
/// elimination performs is exact by Sylvester's identity.
template <class T, class ExactDiv>
T bareiss_det(Matrix<T> a, ExactDiv exact_div) {
    if (!a.square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return T{1};
    const T zero{};
    T prev{1};
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == zero) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == zero) ++r;
            if (r == n) return zero;
            a.swap_rows(k, r);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = exact_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
            }
        }
        prev = a(k, k);
    }
    T det = a(n - 1, n - 1);
    return negate ? T{} - det : det;
}

/// Laplace expansion along the first row. Exponential cost; used as a
/// cross-check on small matrices only.
template <class T>
T det_by_minors(const Matrix<T>& a) {
    if (!a.square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return T{1};
    if (n == 1) return a(0, 0);
    T total{};
    for (std::size_t c = 0; c < n; ++c) {
        Matrix<T> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor(i - 1, jj++) = a(i, j);
            }
        }
        T term = a(0, c) * det_by_minors(minor);
        if (c % 2 == 0)
            total = total + term;
        else
            total = total - term;
    }
    return total;
}

struct LuDeterminant {
    Complex value;
    /// max |pivot| / min |pivot|; infinity for a singular matrix.
    double pivot_ratio = 1.0;
};

/// Determinant by Gaussian elimination with partial pivoting.
inline LuDeterminant lu_determinant(Matrix<Complex> a) {
    if (!a.square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    LuDeterminant out{Complex{1.0, 0.0}, 1.0};
    if (n == 0) return out;
    double pmax = 0.0;
    double pmin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
        if (p != k) {
            a.swap_rows(p, k);
            out.value = -out.value;
        }
        const Complex pivot = a(k, k);
        const double mag = std::abs(pivot);
        pmax = std::max(pmax, mag);
        pmin = std::min(pmin, mag);
        if (mag == 0.0) {
            out.value = Complex{0.0, 0.0};
            out.pivot_ratio = std::numeric_limits<double>::infinity();
            return out;
        }
        out.value *= pivot;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = a(i, k) / pivot;
            if (f == Complex{}) continue;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    out.pivot_ratio = pmax / pmin;
    return out;
}

/// Pivot ratio above which a determinant is reported as ill-conditioned.
inline constexpr double kConditionWarningRatio = 1e10;

} // namespace xx0
