#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ginv/matrix.hpp"

namespace ginv {

template <typename T>
struct EchelonResult {
    Matrix<T> rref;               // fully reduced row-echelon form
    std::vector<int> pivot_cols;  // one entry per pivot row, increasing
    int rank = 0;
};

// Gauss-Jordan reduction. Exact backend: any nonzero entry can pivot; the
// largest (in double approximation) is chosen to keep intermediate rationals
// small. Float backend: partial pivoting, entries at or below
// rank_tol * (largest entry of the input) are treated as zero.
template <typename T>
EchelonResult<T> reduced_echelon(Matrix<T> m, const Tolerance& tol = {}) {
    const int rows = m.rows(), cols = m.cols();
    double threshold = 0.0;
    if constexpr (!ScalarOps<T>::exact) {
        if (tol.rank_tol <= 0) throw InvalidArgument("rank_tol must be positive in float mode");
        threshold = tol.rank_tol * m.max_abs();
    }

    EchelonResult<T> out;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot_row = -1;
        double best = 0.0;
        for (int i = r; i < rows; ++i) {
            if (ScalarOps<T>::is_zero(m(i, col), threshold)) continue;
            double mag = ScalarOps<T>::abs(m(i, col));
            if (pivot_row < 0 || mag > best) {
                best = mag;
                pivot_row = i;
            }
        }
        if (pivot_row < 0) continue;

        if (pivot_row != r) {
            for (int j = 0; j < cols; ++j) std::swap(m(r, j), m(pivot_row, j));
        }
        T inv_pivot = ScalarOps<T>::reciprocal(m(r, col));
        for (int j = col; j < cols; ++j) m(r, j) = inv_pivot * m(r, j);
        m(r, col) = ScalarOps<T>::one();

        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            T factor = m(i, col);
            if (ScalarOps<T>::is_zero(factor, 0.0)) continue;
            for (int j = col; j < cols; ++j) m(i, j) -= factor * m(r, j);
            m(i, col) = ScalarOps<T>::zero();
        }
        out.pivot_cols.push_back(col);
        ++r;
    }
    out.rank = r;
    // Entries wiped below the tolerance stay as they are; rank decisions are
    // already made, callers only read the pivot rows.
    out.rref = std::move(m);
    return out;
}

template <typename T>
int rank(const Matrix<T>& m, const Tolerance& tol = {}) {
    return reduced_echelon(m, tol).rank;
}

template <typename T>
bool invertible(const Matrix<T>& m, const Tolerance& tol = {}) {
    return rank(m, tol) == m.dim();
}

// Two-sided inverse via Gauss-Jordan on [A | I]. Throws SingularError when
// rank < n.
template <typename T>
Matrix<T> inverse(const Matrix<T>& m, const Tolerance& tol = {}) {
    const int n = m.dim();
    Matrix<T> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = ScalarOps<T>::one();
    }
    auto ech = reduced_echelon(std::move(aug), tol);
    // Pivots must land in the left block, one per column.
    if (ech.rank < n || ech.pivot_cols[static_cast<size_t>(n) - 1] >= n) {
        throw SingularError("matrix is not invertible");
    }
    Matrix<T> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = ech.rref(i, n + j);
    return inv;
}

// Basis of { x : m x = 0 }, one n x 1 column per free variable. Exact
// backend: basis vectors have the conventional unit free coordinates.
template <typename T>
std::vector<Matrix<T>> nullspace_basis(const Matrix<T>& m, const Tolerance& tol = {}) {
    auto ech = reduced_echelon(m, tol);
    const int cols = m.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int p : ech.pivot_cols) is_pivot[static_cast<size_t>(p)] = true;

    std::vector<Matrix<T>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        Matrix<T> v(cols, 1);
        v(f, 0) = ScalarOps<T>::one();
        for (int r = 0; r < ech.rank; ++r) {
            v(ech.pivot_cols[static_cast<size_t>(r)], 0) = -ech.rref(r, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves A X = B (any consistent shapes), free variables set to zero.
// Returns nullopt when the system is inconsistent.
template <typename T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b, const Tolerance& tol = {}) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve: row count mismatch");
    const int n = a.cols(), k = b.cols();
    Matrix<T> aug(a.rows(), n + k);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (int j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
    }
    auto ech = reduced_echelon(std::move(aug), tol);
    for (int p : ech.pivot_cols) {
        if (p >= n) return std::nullopt;  // a pivot in the right block: inconsistent
    }
    Matrix<T> x(n, k);
    for (int r = 0; r < ech.rank; ++r) {
        int pc = ech.pivot_cols[static_cast<size_t>(r)];
        for (int j = 0; j < k; ++j) x(pc, j) = ech.rref(r, n + j);
    }
    return x;
}

// Full-rank factorization a = B * C with B (m x r) the pivot columns of a and
// C (r x n) the nonzero rows of rref(a). Returns rank 0 as a pair of empty
// factors.
template <typename T>
std::pair<Matrix<T>, Matrix<T>> full_rank_factor(const Matrix<T>& a, const Tolerance& tol = {}) {
    auto ech = reduced_echelon(a, tol);
    const int r = ech.rank;
    Matrix<T> b(a.rows(), r), c(r, a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < r; ++j) b(i, j) = a(i, ech.pivot_cols[static_cast<size_t>(j)]);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = ech.rref(i, j);
    return {std::move(b), std::move(c)};
}

}  // namespace ginv
