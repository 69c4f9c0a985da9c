#pragma once

#include "l2b/error.hpp"
#include "l2b/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace l2b {

/// Small dense row-major matrix over Rational.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols)
            throw Error(ErrorKind::dimension_mismatch, "matrix data size does not match shape");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_zero() const {
        for (const auto &x : data_)
            if (!x.is_zero())
                return false;
        return true;
    }

    Matrix &operator+=(const Matrix &o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] += o.data_[i];
        return *this;
    }
    Matrix &operator-=(const Matrix &o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] -= o.data_[i];
        return *this;
    }
    Matrix &operator*=(const Rational &s) {
        for (auto &x : data_)
            x *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational &s) { return a *= s; }

    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        if (a.cols_ != b.rows_)
            throw Error(ErrorKind::dimension_mismatch, "matrix product shape mismatch");
        Matrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto &aik = a(i, k);
                if (aik.is_zero())
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    p(i, j) += aik * b(k, j);
            }
        return p;
    }

    std::vector<Rational> apply(const std::vector<Rational> &v) const {
        if (v.size() != cols_)
            throw Error(ErrorKind::dimension_mismatch, "matrix-vector shape mismatch");
        std::vector<Rational> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!v[j].is_zero())
                    out[i] += (*this)(i, j) * v[j];
        return out;
    }

    /// Gauss-Jordan inverse; throws ErrorKind::singular.
    Matrix inverse() const {
        if (rows_ != cols_)
            throw Error(ErrorKind::dimension_mismatch, "inverse of a non-square matrix");
        const std::size_t n = rows_;
        Matrix a = *this, inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && a(piv, col).is_zero())
                ++piv;
            if (piv == n)
                throw Error(ErrorKind::singular, "matrix is singular");
            if (piv != col)
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            Rational s = Rational(1) / a(col, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(col, j) *= s;
                inv(col, j) *= s;
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || a(r, col).is_zero())
                    continue;
                Rational f = a(r, col);
                for (std::size_t j = 0; j < n; ++j) {
                    a(r, j) -= f * a(col, j);
                    inv(r, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    friend bool operator==(const Matrix &a, const Matrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    void check_same(const Matrix &o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw Error(ErrorKind::dimension_mismatch, "matrix shapes differ");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

} // namespace l2b
