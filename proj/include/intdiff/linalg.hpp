#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "intdiff/errors.hpp"
#include "intdiff/rational.hpp"
#include "intdiff/rng.hpp"

namespace intdiff {

// Dense matrix over the exact rationals, row-major. Sizes in this library
// stay small (weight-space dimensions, truncation windows), so dense
// Gaussian elimination with zero-skips is all we need.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    Mat operator-() const {
        Mat r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }

    Mat& operator+=(const Mat& o) {
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Rational& bkj = b(k, j);
                    if (bkj == 0) continue;
                    r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend Mat operator*(const Rational& s, const Mat& m) {
        Mat r = m;
        for (auto& x : r.a_) x *= s;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Mat pow(unsigned e) const {
        Mat r = identity(rows_);
        for (unsigned k = 0; k < e; ++k) r = r * (*this);
        return r;
    }

    // [this | o] side by side
    Mat hcat(const Mat& o) const {
        Mat r(rows_, cols_ + o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
        }
        return r;
    }

    Mat vcat(const Mat& o) const {
        Mat r(rows_ + o.rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
        return r;
    }

    static Mat block_diag(const Mat& a, const Mat& b) {
        Mat r(a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) r(a.rows_ + i, a.cols_ + j) = b(i, j);
        return r;
    }

    Mat submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Mat r(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
        return r;
    }

    Mat col(std::size_t j) const { return submatrix(0, j, rows_, 1); }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out += ' ';
                out += to_string((*this)(i, j));
            }
            out += '\n';
        }
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Row echelon form in place; returns pivot column indices.
inline std::vector<std::size_t> row_reduce(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(Mat m) { return row_reduce(m).size(); }

// Basis of {x : m x = 0}, as columns.
inline Mat nullspace(Mat m) {
    std::size_t n = m.cols();
    std::vector<std::size_t> pivots = row_reduce(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat basis(n, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        basis(fc, k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(r, fc);
    }
    return basis;
}

// One solution of a x = b (b may have several columns), or nullopt.
inline std::optional<Mat> solve(const Mat& a, const Mat& b) {
    Mat aug = a.hcat(b);
    std::vector<std::size_t> pivots = row_reduce(aug);
    for (auto c : pivots)
        if (c >= a.cols()) return std::nullopt;  // inconsistent row 0 = 1
    Mat x(a.cols(), b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, a.cols() + j);
    return x;
}

inline std::optional<Mat> inverse(const Mat& m) {
    if (!m.is_square()) return std::nullopt;
    Mat aug = m.hcat(Mat::identity(m.rows()));
    std::vector<std::size_t> pivots = row_reduce(aug);
    if (pivots.size() != m.rows()) return std::nullopt;
    return aug.submatrix(0, m.cols(), m.rows(), m.rows());
}

inline bool is_invertible(const Mat& m) { return m.is_square() && rank(m) == m.rows(); }

// Columns of m spanning its column space (pivot columns of the reduction).
inline Mat column_space_basis(const Mat& m) {
    Mat red = m;
    std::vector<std::size_t> pivots = row_reduce(red);
    Mat basis(m.rows(), pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i) basis(i, k) = m(i, pivots[k]);
    return basis;
}

// Random invertible matrix as a product of elementary row operations:
// determinant is +-1 and both the matrix and its inverse keep small
// integer entries.
inline std::pair<Mat, Mat> random_invertible(std::size_t n, Rng& rng) {
    Mat t = Mat::identity(n);
    if (n == 0) return {t, t};
    for (std::size_t s = 0; s < 2 * n + 2; ++s) {
        std::size_t i = rng.below(n), j = rng.below(n);
        switch (rng.below(3)) {
            case 0: {
                if (i == j) break;
                Rational c(rng.range(-2, 2));
                for (std::size_t k = 0; k < n; ++k) t(i, k) += c * t(j, k);
                break;
            }
            case 1: {
                if (i == j) break;
                for (std::size_t k = 0; k < n; ++k) std::swap(t(i, k), t(j, k));
                break;
            }
            default: {
                for (std::size_t k = 0; k < n; ++k) t(i, k) = -t(i, k);
                break;
            }
        }
    }
    return {t, *inverse(t)};
}

}  // namespace intdiff
