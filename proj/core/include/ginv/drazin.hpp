#pragma once

#include <vector>

#include "ginv/commutant.hpp"
#include "ginv/elimination.hpp"
#include "ginv/matrix.hpp"
#include "ginv/report.hpp"

namespace ginv {

// inverse = a^D, the unique x with xax = x, ax = xa, a^{k+1}x = a^k.
// projector = a·a^D is idempotent; core + nilpotent = a; nilpotent^index = 0.
template <typename T>
struct DrazinResult {
    Matrix<T> inverse;
    int index = 0;
    Matrix<T> projector;
    Matrix<T> core;
    Matrix<T> nilpotent;
};

template <typename T>
struct GroupResult {
    Matrix<T> inverse;
};

// Smallest k >= 0 with rank(a^k) = rank(a^{k+1}). The chain strictly
// decreases until it stabilizes, so k <= n. For a = 0 this gives k = 1
// (n >= 1): rank(a^0) = n > 0 = rank(a^1) = rank(a^2).
template <typename T>
int drazin_index(const Matrix<T>& a, const Tolerance& tol = {}) {
    const int n = a.dim();
    int prev = n;  // rank(a^0)
    Matrix<T> p = a;
    for (int k = 0;; ++k) {
        int r = rank(p, tol);
        if (r == prev) return k;
        prev = r;
        p = p * a;
    }
}

namespace detail {

// Cline rank-factorization recursion: a = B1*C1 full-rank, a1 = C1*B1,
// repeat until a_k is invertible or zero; then
// a^D = B1···Bk · (a_k)^{-(k+1)} · Ck···C1, and a^D = 0 on the zero branch.
template <typename T>
Matrix<T> drazin_inverse(const Matrix<T>& a, const Tolerance& tol) {
    const int n = a.dim();
    std::vector<Matrix<T>> bs;
    std::vector<Matrix<T>> cs;
    Matrix<T> cur = a;
    int depth = 0;
    for (;;) {
        auto [b, c] = full_rank_factor(cur, tol);
        const int r = b.cols();
        if (r == 0) return Matrix<T>::zero(n);
        if (r == cur.rows()) break;
        bs.push_back(std::move(b));
        cs.push_back(std::move(c));
        cur = cs.back() * bs.back();
        ++depth;
    }

    Matrix<T> x(0, 0);
    try {
        x = pow(inverse(cur, tol), depth + 1);
    } catch (const SingularError&) {
        // Full-rank factorization and the augmented elimination disagreed on
        // invertibility; only reachable through float rank decisions.
        throw NoConvergence("rank decisions inconsistent near the invertible core");
    }
    for (size_t i = bs.size(); i-- > 0;) x = bs[i] * (x * cs[i]);
    return x;
}

}  // namespace detail

template <typename T>
DrazinResult<T> drazin(const Matrix<T>& a, const Tolerance& tol = {}) {
    DrazinResult<T> r;
    r.inverse = detail::drazin_inverse(a, tol);
    r.index = drazin_index(a, tol);
    r.projector = a * r.inverse;
    r.core = a * r.projector;
    r.nilpotent = a - r.core;
    return r;
}

// a^# = a^D when the index is at most 1.
template <typename T>
GroupResult<T> group_inverse(const Matrix<T>& a, const Tolerance& tol = {}) {
    DrazinResult<T> d = drazin(a, tol);
    if (d.index >= 2) throw NoGroupInverse("Drazin index exceeds 1");
    return GroupResult<T>{std::move(d.inverse)};
}

// Checks xax = x, ax = xa, a^{k+1}x = a^k, and (exact mode, dim <= comm_bound)
// that x commutes with every element of the commutant of a. The commutant
// clause is reported as skipped when it cannot be evaluated, never passed
// silently.
template <typename T>
HypothesisReport verify_drazin_axioms(const Matrix<T>& a, const Matrix<T>& x, int k,
                                      const Tolerance& tol = {}, int comm_bound = 6) {
    if (a.dim() != x.dim()) throw DimensionMismatch("axiom check needs equal dimensions");
    HypothesisReport rep;
    const Matrix<T> ax = a * x;
    const Matrix<T> ak = pow(a, k);
    rep.add("xax = x", x * ax, x, tol);
    rep.add("ax = xa", ax, x * a, tol);
    rep.add("a^(k+1) x = a^k", ak * ax, ak, tol);
    if constexpr (ScalarOps<T>::exact) {
        if (a.dim() <= comm_bound) {
            double residual = 0.0;
            bool holds = true;
            for (const auto& basis : commutant_basis(a, comm_bound)) {
                Matrix<T> diff = x * basis - basis * x;
                residual = std::max(residual, diff.max_abs());
                holds = holds && diff.is_zero();
            }
            rep.conditions.push_back({"x in comm^2(a)", residual, holds, true, false});
        } else {
            rep.conditions.push_back({"x in comm^2(a)", 0.0, true, true, true});
        }
    } else {
        rep.conditions.push_back({"x in comm^2(a)", 0.0, true, false, true});
    }
    rep.recompute();
    return rep;
}

}  // namespace ginv
