#pragma once

#include "lcs/errors.hpp"
#include "lcs/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lcs {

using Vec = std::vector<Rational>;

inline Vec vec_add(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("vec_add: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_scale(const Rational& c, const Vec& a)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = c * a[i];
    return r;
}

inline bool vec_is_zero(const Vec& a)
{
    for (const auto& x : a)
        if (!x.is_zero())
            return false;
    return true;
}

/// Dense matrix over the exact rationals, row major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = Rational(1);
        return m;
    }

    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw DimensionMismatch("from_rows: row length mismatch");
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const
    {
        Vec r(cols_);
        for (std::size_t j = 0; j < cols_; ++j)
            r[j] = at(i, j);
        return r;
    }

    Vec col(std::size_t j) const
    {
        Vec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = at(i, j);
        return c;
    }

    void set_row(std::size_t i, const Vec& v)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            at(i, j) = v[j];
    }

    void set_col(std::size_t j, const Vec& v)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            at(i, j) = v[i];
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    /// Matrix-vector product m*x.
    Vec apply(const Vec& x) const
    {
        if (x.size() != cols_)
            throw DimensionMismatch("Matrix::apply: size mismatch");
        Vec y(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Rational s;
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !x[j].is_zero())
                    s += at(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    bool is_zero() const
    {
        for (const auto& x : a_)
            if (!x.is_zero())
                return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("Matrix product: inner dimensions differ");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero())
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b.at(k, j).is_zero())
                        c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("Matrix sum: shape mismatch");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            c.a_[i] = a.a_[i] + b.a_[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("Matrix difference: shape mismatch");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            c.a_[i] = a.a_[i] - b.a_[i];
        return c;
    }

    friend Matrix operator*(const Rational& c, const Matrix& m)
    {
        Matrix r(m.rows_, m.cols_);
        for (std::size_t i = 0; i < m.a_.size(); ++i)
            r.a_[i] = c * m.a_[i];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

struct RrefResult {
    Matrix rref;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row echelon form. Pivot rule: leftmost nonzero column, first
/// nonzero row; result is the unique RREF of the input.
inline RrefResult rref(Matrix m)
{
    RrefResult res;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv == rows)
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m.at(piv, j), m.at(r, j));
        const Rational inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero())
                continue;
            const Rational f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.rref = std::move(m);
    return res;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// One particular solution x of m*x = b, or nullopt when inconsistent.
inline std::optional<Vec> solve(const Matrix& m, const Vec& b)
{
    if (b.size() != m.rows())
        throw DimensionMismatch("solve: rhs length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    RrefResult r = rref(std::move(aug));
    for (std::size_t p : r.pivots)
        if (p == m.cols())
            return std::nullopt;
    Vec x(m.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        x[r.pivots[i]] = r.rref.at(i, m.cols());
    return x;
}

/// Inverse of a square invertible matrix; throws on singular input.
inline Matrix inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatch("inverse: matrix not square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rational(1);
    }
    RrefResult r = rref(std::move(aug));
    if (r.rank != n || r.pivots.back() >= n)
        throw MathError("inverse: singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = r.rref.at(i, n + j);
    return inv;
}

}  // namespace lcs
