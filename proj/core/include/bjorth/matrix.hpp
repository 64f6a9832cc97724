#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "bjorth/errors.hpp"

namespace bjorth {

using cx = std::complex<double>;

/// Dense row-major complex matrix; the universal carrier for all modules.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cx{0.0, 0.0}) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cx> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) throw ShapeMismatch("entry count does not match dimensions");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cx>& data() const { return data_; }
    std::vector<cx>& data() { return data_; }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix I(n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
        return I;
    }

    /// Matrix unit E_{ij} of size rows x cols.
    static ComplexMatrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
        ComplexMatrix E(rows, cols);
        E(i, j) = 1.0;
        return E;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix R(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) R(j, i) = std::conj((*this)(i, j));
        return R;
    }

    ComplexMatrix transpose() const {
        ComplexMatrix R(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) R(j, i) = (*this)(i, j);
        return R;
    }

    ComplexMatrix conj() const {
        ComplexMatrix R(rows_, cols_);
        for (std::size_t i = 0; i < rows_ * cols_; ++i) R.data_[i] = std::conj(data_[i]);
        return R;
    }

    bool finite() const {
        for (const cx& z : data_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    double frobenius() const {
        double s = 0.0;
        for (const cx& z : data_) s += std::norm(z);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const cx& z : data_) m = std::max(m, std::abs(z));
        return m;
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    ComplexMatrix& operator*=(cx s) {
        for (cx& z : data_) z *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cx s) { return a *= s; }
    friend ComplexMatrix operator*(cx s, ComplexMatrix a) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product dimension mismatch");
        ComplexMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cx aik = a(i, k);
                if (aik == cx{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

private:
    void check_same_shape(const ComplexMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cx> data_;
};

using Vector = std::vector<cx>;

inline cx inner(const Vector& x, const Vector& y) {
    // <x,y> = y* x
    if (x.size() != y.size()) throw ShapeMismatch("vector inner product dimension mismatch");
    cx s{};
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(y[i]) * x[i];
    return s;
}

inline double vec_norm(const Vector& x) {
    double s = 0.0;
    for (const cx& z : x) s += std::norm(z);
    return std::sqrt(s);
}

inline Vector matvec(const ComplexMatrix& A, const Vector& x) {
    if (A.cols() != x.size()) throw ShapeMismatch("matvec dimension mismatch");
    Vector y(A.rows(), cx{});
    for (std::size_t i = 0; i < A.rows(); ++i) {
        cx s{};
        for (std::size_t j = 0; j < A.cols(); ++j) s += A(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

/// Rank-one product x y*.
inline ComplexMatrix outer(const Vector& x, const Vector& y) {
    ComplexMatrix R(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) R(i, j) = x[i] * std::conj(y[j]);
    return R;
}

inline Vector scaled(Vector x, cx s) {
    for (cx& z : x) z *= s;
    return x;
}

inline Vector normalized(Vector x) {
    const double n = vec_norm(x);
    if (n == 0.0) throw ZeroVector();
    for (cx& z : x) z /= n;
    return x;
}

inline Vector basis_vector(std::size_t n, std::size_t i) {
    Vector e(n, cx{});
    e[i] = 1.0;
    return e;
}

} // namespace bjorth
