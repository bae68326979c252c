#pragma once

#include <vector>

#include "ginv/elimination.hpp"
#include "ginv/matrix.hpp"

namespace ginv {

// Basis of the commutant { X : Xa = aX }, computed exactly by solving the
// n^2 x n^2 linear system entry by entry. Restricted to the exact backend:
// a float commutant would be a tolerance judgment on a subspace dimension.
// The default bound keeps the system at most 36 x 36.
inline std::vector<Matrix<GaussianRational>> commutant_basis(const Matrix<GaussianRational>& a,
                                                             int dim_bound = 6) {
    const int n = a.dim();
    if (n > dim_bound) {
        throw DimensionTooLarge("commutant basis limited to dim <= " + std::to_string(dim_bound));
    }
    // Unknown X_{pq} sits at column p*n+q. Equation (i,j):
    //   sum_k X_{ik} a_{kj} - a_{ik} X_{kj} = 0.
    Matrix<GaussianRational> sys(n * n, n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int row = i * n + j;
            for (int k = 0; k < n; ++k) {
                sys(row, i * n + k) += a(k, j);
                sys(row, k * n + j) -= a(i, k);
            }
        }
    }
    auto vecs = nullspace_basis(sys);
    std::vector<Matrix<GaussianRational>> basis;
    basis.reserve(vecs.size());
    for (const auto& v : vecs) {
        Matrix<GaussianRational> m(n, n);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) m(p, q) = v(p * n + q, 0);
        basis.push_back(std::move(m));
    }
    return basis;
}

// True when x commutes with every member of comm(a); membership in the
// double commutant comm^2(a) reduces to this because commutation is linear
// in the commutant element.
inline bool in_double_commutant(const Matrix<GaussianRational>& a,
                                const Matrix<GaussianRational>& x, int dim_bound = 6) {
    for (const auto& k : commutant_basis(a, dim_bound)) {
        if (x * k != k * x) return false;
    }
    return true;
}

}  // namespace ginv
