#pragma once

#include <cstddef>
#include <vector>

#include "ppu/errors.hpp"
#include "ppu/field.hpp"

namespace ppu {

/// Dense matrix over an exact field. Row-major; 0-row and 0-column shapes
/// are legal (they encode trivial subspaces).
template <FieldScalar F>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<F> row(std::size_t i) const {
        return {data_.begin() + static_cast<long>(i * cols_),
                data_.begin() + static_cast<long>((i + 1) * cols_)};
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const F& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? F(1) : F(0))) return false;
        return true;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        check_same_shape(a, b);
        Mat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
        return r;
    }

    friend Mat operator-(const Mat& a, const Mat& b) {
        check_same_shape(a, b);
        Mat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
        return r;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("matrix product: " + shape_str(a) + " * " + shape_str(b));
        Mat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Mat operator*(const F& c, const Mat& a) {
        Mat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = c * a.data_[k];
        return r;
    }

    Mat operator-() const { return F(-1) * *this; }

    friend std::vector<F> operator*(const Mat& a, const std::vector<F>& v) {
        if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector product");
        std::vector<F> r(a.rows_, F(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
    static void check_same_shape(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix sum: " + shape_str(a) + " vs " + shape_str(b));
    }
    static std::string shape_str(const Mat& m) {
        return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F> data_;
};

/// In-place reduced row echelon form; returns the pivot columns.
/// Pivot choice is the first nonzero entry in the column, so the result is
/// deterministic and canonical for a given row space.
template <FieldScalar F>
std::vector<std::size_t> rref_inplace(Mat<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
        const F inv = F(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = inv * m(row, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const F f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Canonical basis of the row space: RREF with zero rows removed.
template <FieldScalar F>
Mat<F> row_space(const Mat<F>& m) {
    Mat<F> r = m;
    const auto pivots = rref_inplace(r);
    Mat<F> out(pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = r(i, j);
    return out;
}

template <FieldScalar F>
std::size_t rank(const Mat<F>& m) {
    Mat<F> r = m;
    return rref_inplace(r).size();
}

/// Canonical basis (as rows) of { y : A * y^T = 0 }.
template <FieldScalar F>
Mat<F> null_space_rows(const Mat<F>& a) {
    Mat<F> r = a;
    const auto pivots = rref_inplace(r);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    Mat<F> basis(a.cols() - pivots.size(), a.cols());
    std::size_t k = 0;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(k, free) = F(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(k, pivots[i]) = -r(i, free);
        ++k;
    }
    return row_space(basis);
}

template <FieldScalar F>
Mat<F> stack_rows(const Mat<F>& a, const Mat<F>& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("stack_rows: column count differs");
    Mat<F> r(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

/// Canonical basis of the intersection of two row spaces.
template <FieldScalar F>
Mat<F> row_space_intersect(const Mat<F>& a, const Mat<F>& b) {
    // rowspace(A) = { x : K_A x^T = 0 }, so intersect by stacking the
    // annihilators and taking the joint solution space.
    return null_space_rows(stack_rows(null_space_rows(a), null_space_rows(b)));
}

/// Does the row space of the RREF basis contain v? (basis must be in RREF)
template <FieldScalar F>
bool row_space_contains(const Mat<F>& basis, std::vector<F> v) {
    if (basis.cols() != v.size()) throw DimensionMismatch("row_space_contains");
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::size_t piv = 0;
        while (piv < basis.cols() && basis(i, piv).is_zero()) ++piv;
        if (piv == basis.cols()) continue;
        const F c = v[piv];
        if (c.is_zero()) continue;
        for (std::size_t j = piv; j < basis.cols(); ++j) v[j] = v[j] - c * basis(i, j);
    }
    for (const F& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <FieldScalar F>
F det(const Mat<F>& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    Mat<F> a = m;
    const std::size_t n = a.rows();
    F d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a(p, col).is_zero()) ++p;
        if (p == n) return F(0);
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(p, j));
            d = -d;
        }
        d = d * a(col, col);
        const F inv = F(1) / a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            const F f = a(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a(i, j) = a(i, j) - f * a(col, j);
        }
    }
    return d;
}

template <FieldScalar F>
std::vector<F> leading_principal_minors(const Mat<F>& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("principal minors of non-square matrix");
    std::vector<F> minors;
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        Mat<F> sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
        minors.push_back(det(sub));
    }
    return minors;
}

template <FieldScalar F>
Mat<F> inverse(const Mat<F>& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Mat<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    const auto pivots = rref_inplace(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw Error("matrix is singular");
    Mat<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

} // namespace ppu
