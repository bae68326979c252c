#pragma once

#include <vector>

#include "ginv/matrix.hpp"
#include "ginv/polynomial.hpp"

namespace ginv {

// Eigenvalues with algebraic multiplicity, sorted by (re, im).
//
// The matrix entries are lifted exactly to Gaussian rationals (every finite
// double is a dyadic rational), the characteristic polynomial is computed
// exactly, split into square-free factors and an exact power of x, and only
// the square-free parts are handed to a numeric root finder. Each root found
// there is simple, so the iteration converges to full accuracy and a root of
// multiplicity m is reported m times without the usual m-th-root blowup.
//
// Dimension is capped at 8; larger inputs throw DimensionTooLarge.
std::vector<Complex> eigenvalues(const Matrix<GaussianRational>& a);
std::vector<Complex> eigenvalues(const Matrix<Complex>& a);

// Roots of a square-free polynomial by the Durand-Kerner iteration.
// Throws NoConvergence if the iteration fails to settle.
std::vector<Complex> squarefree_roots(const Poly& p);

inline constexpr int kEigenMaxDim = 8;

}  // namespace ginv
