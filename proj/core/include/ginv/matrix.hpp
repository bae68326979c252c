#pragma once

#include <cassert>
#include <initializer_list>
#include <utility>
#include <vector>

#include "ginv/error.hpp"
#include "ginv/rational.hpp"

namespace ginv {

// Dense matrix over one scalar backend, row-major. The public toolkit deals
// in square matrices; rectangular shapes appear internally in rank
// factorizations. All operations are pure: no method mutates an argument, so
// values can be shared across threads freely.
template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, ScalarOps<T>::zero()) {
        if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = ScalarOps<T>::one();
        return m;
    }
    static Matrix zero(int n) { return Matrix(n, n); }

    static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
        Matrix m(r, c);
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != c) throw DimensionMismatch("ragged row list");
            int j = 0;
            for (const auto& v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    // n x n superdiagonal shift: ones at (i, i+1).
    static Matrix shift(int n) {
        Matrix m(n, n);
        for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = ScalarOps<T>::one();
        return m;
    }
    // Superdiagonal shift with the given weights; weights.size() == n-1.
    static Matrix weighted_shift(int n, const std::vector<T>& weights) {
        if (static_cast<int>(weights.size()) != (n > 0 ? n - 1 : 0)) {
            throw DimensionMismatch("weighted_shift needs n-1 weights");
        }
        Matrix m(n, n);
        for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = weights[static_cast<size_t>(i)];
        return m;
    }
    // Unit matrix E_{ij} (zero-based indices).
    static Matrix unit(int n, int i, int j) {
        Matrix m(n, n);
        m(i, j) = ScalarOps<T>::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    int dim() const {
        if (!is_square()) throw DimensionMismatch("square matrix required");
        return rows_;
    }

    T& operator()(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[static_cast<size_t>(i) * cols_ + j];
    }
    const T& operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator-() const {
        Matrix m(rows_, cols_);
        for (size_t k = 0; k < data_.size(); ++k) m.data_[k] = -data_[k];
        return m;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (ScalarOps<T>::exact && ScalarOps<T>::is_zero(aik, 0.0)) continue;
                for (int j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
            }
        }
        return m;
    }
    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix m(a.rows_, a.cols_);
        for (size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = s * a.data_[k];
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // Nonnegative integer power of a square matrix; pow(0) = I.
    Matrix pow(int k) const {
        int n = dim();
        if (k < 0) throw InvalidArgument("negative matrix power");
        Matrix acc = identity(n);
        Matrix base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            k >>= 1;
            if (k > 0) base = base * base;
        }
        return acc;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : data_) m = std::max(m, ScalarOps<T>::abs(v));
        return m;
    }

    bool is_zero() const {
        for (const auto& v : data_) {
            if (!(v == ScalarOps<T>::zero())) return false;
        }
        return true;
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<T> data_;
};

template <typename T>
Matrix<T> pow(const Matrix<T>& m, int k) {
    return m.pow(k);
}

// Largest |a_ij - b_ij| in double precision. The residual norm used by every
// report in the toolkit.
template <typename T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("matrix shape mismatch");
    }
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m = std::max(m, ScalarOps<T>::abs(a(i, j) - b(i, j)));
    return m;
}

// Backend equality: bit-exact for rationals, max-entry tolerance for floats.
template <typename T>
bool approx_equal(const Matrix<T>& a, const Matrix<T>& b, const Tolerance& tol) {
    if constexpr (ScalarOps<T>::exact) {
        return a == b;
    } else {
        return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) <= tol.eq_tol;
    }
}

inline Matrix<Complex> to_float(const Matrix<GaussianRational>& a) {
    // Each rational part is rounded to the nearest double independently.
    Matrix<Complex> m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).to_complex();
    return m;
}

// Exact lift (doubles are dyadic rationals, nothing is lost).
inline Matrix<GaussianRational> lift_exact(const Matrix<Complex>& a) {
    Matrix<GaussianRational> m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = GaussianRational::from_complex(a(i, j));
    return m;
}

}  // namespace ginv
