#pragma once

#include <string>
#include <vector>

#include "ginv/cline.hpp"
#include "ginv/eigen.hpp"

namespace ginv {

// Multiset of eigenvalues; two sets are considered equal when a greedy
// closest-pair matching pairs every value within match_tol.
struct SpectrumSet {
    std::vector<Complex> values;
    double match_tol = 1e-6;
};

bool multiset_match(const std::vector<Complex>& xs, const std::vector<Complex>& ys, double tol);

// (lambda*I - ac invertible) == (lambda*I - bd invertible) for lambda != 0.
// The hypothesis families force this to agree for every nonzero lambda.
//
// Float backend: each side is first decided by tolerance rank. When the two
// sides disagree the resolvents are lifted to exact rationals (doubles lift
// losslessly) and the verdicts are recomputed exactly; a lambda sitting at
// offset 1e-3 from a nilpotent part of index 3 conditions one resolvent like
// lambda^-3, which no single rank threshold classifies consistently.
template <typename T>
bool invertibility_transfer(const ClineQuadruple<T>& q, Complex lambda,
                            const Tolerance& tol = {}) {
    if (lambda == Complex(0.0, 0.0)) throw ZeroLambda("invertibility transfer needs lambda != 0");
    detail::require_conditions(q, tol);
    const int n = q.dim();
    Matrix<T> li = ScalarOps<T>::from_complex(lambda) * Matrix<T>::identity(n);
    Matrix<T> ra = li - q.a * q.c;
    Matrix<T> rb = li - q.b * q.d;
    const bool ac_inv = invertible(ra, tol);
    const bool bd_inv = invertible(rb, tol);
    if constexpr (!ScalarOps<T>::exact) {
        if (ac_inv != bd_inv) return invertible(lift_exact(ra)) == invertible(lift_exact(rb));
    }
    return ac_inv == bd_inv;
}

// Whether the nonzero eigenvalue multisets of ac and bd coincide within
// match_tol (values of magnitude below match_tol are treated as zero and
// dropped).
bool nonzero_spectrum_equal(const ClineQuadruple<Complex>& q, const Tolerance& tol = {},
                            double match_tol = 1e-6);

// Deterministic lambda sample plan for a quadruple: the nonzero eigenvalues
// of ac themselves, each eigenvalue offset by 1e-3, then a fixed grid, until
// `count` distinct nonzero values are collected.
std::vector<Complex> lambda_samples(const std::vector<Complex>& spectrum, int count = 20);

// The Drazin spectrum {lambda : lambda - a has no Drazin inverse} of a
// square complex matrix is empty, since every square complex matrix has one.
// The report exists so that callers asking for this set get the fact with an
// explanation instead of a hole in the API.
struct DrazinSpectrumReport {
    SpectrumSet set;
    std::string note;
};

template <typename T>
DrazinSpectrumReport drazin_spectrum_report(const Matrix<T>& a) {
    a.dim();
    return {SpectrumSet{},
            "empty: every square complex matrix has a Drazin inverse, so no lambda - a fails"};
}

}  // namespace ginv
