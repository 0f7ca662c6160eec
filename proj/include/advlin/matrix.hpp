#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "advlin/error.hpp"
#include "advlin/exact.hpp"
#include "advlin/scalar.hpp"

namespace advlin {

// Dense row-major matrix over an exact or floating scalar type.
// The three backends used throughout are CMat (complex double),
// ZMat (arbitrary-precision integers) and QMat (rationals).
template <typename T>
class Matrix {
  public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DomainError("ragged matrix initializer");
            for (const auto& x : r) a_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<T>& data() const { return a_; }
    std::vector<T>& data() { return a_; }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }

    // Submatrix with row i and column j removed.
    Matrix minor_matrix(std::size_t i, std::size_t j) const {
        Matrix r(rows_ - 1, cols_ - 1);
        for (std::size_t a = 0, ra = 0; a < rows_; ++a) {
            if (a == i) continue;
            for (std::size_t b = 0, rb = 0; b < cols_; ++b) {
                if (b == j) continue;
                r(ra, rb) = (*this)(a, b);
                ++rb;
            }
            ++ra;
        }
        return r;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }

    Matrix& operator*=(const T& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    T trace() const {
        if (!square()) throw DomainError("trace of non-square matrix");
        T s(0);
        for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
        return s;
    }

  private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using CMat = Matrix<Scalar>;
using ZMat = Matrix<BigInt>;
using QMat = Matrix<BigRat>;

inline Scalar conj_value(Scalar z) { return std::conj(z); }
inline double conj_value(double x) { return x; }
inline BigInt conj_value(const BigInt& z) { return z; }
inline BigRat conj_value(const BigRat& q) { return q; }

template <typename T>
Matrix<T> adjoint(const Matrix<T>& m) {
    Matrix<T> r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = conj_value(m(i, j));
    return r;
}

template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return r;
}

template <typename T>
Matrix<T> matpow(Matrix<T> base, unsigned long e) {
    if (!base.square()) throw DomainError("power of non-square matrix");
    Matrix<T> r = Matrix<T>::identity(base.rows());
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

double frobenius_norm(const CMat& m);
double max_abs(const CMat& m);
double one_norm(const CMat& m);

CMat to_cmat(const ZMat& m);
CMat to_cmat(const QMat& m);
QMat to_qmat(const ZMat& m);

// Hermitian residuals used by tolerance gates.
double hermitian_defect(const CMat& m);   // ||A - A*||_F
double normality_defect(const CMat& m);   // ||AA* - A*A||_F
double unitarity_defect(const CMat& m);   // ||A*A - 1||_F

// Solve a x = b by partially pivoted elimination (complex backend).
CMat solve(const CMat& a, const CMat& b);
CMat inverse(const CMat& a);

// Exact Gauss-Jordan inverse; throws RefusalError on singular input.
QMat inverse_exact(const QMat& a);

// Exact rank via fraction-free row reduction.
std::size_t rank_exact(const QMat& a);

// Exact kernel basis, returned as columns.
QMat kernel_exact(const QMat& a);

}  // namespace advlin
