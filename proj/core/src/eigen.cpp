#include "ginv/eigen.hpp"

#include <algorithm>
#include <cmath>

#include "ginv/error.hpp"

namespace ginv {

namespace {

Complex eval(const std::vector<Complex>& c, Complex x) {
    Complex r = 0.0;
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

}  // namespace

std::vector<Complex> squarefree_roots(const Poly& p) {
    const int deg = p.degree();
    if (deg <= 0) return {};
    Poly pm = p.monic();
    std::vector<Complex> c(pm.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = pm.coeffs()[i].to_complex();

    // Cauchy bound on root magnitude.
    double radius = 0.0;
    for (int i = 0; i < deg; ++i) radius = std::max(radius, std::abs(c[static_cast<size_t>(i)]));
    radius += 1.0;

    // Standard non-real starting angles, scaled to the root bound.
    std::vector<Complex> z(static_cast<size_t>(deg));
    for (int i = 0; i < deg; ++i) {
        double t = 2.0 * M_PI * (static_cast<double>(i) / deg) + 0.4;
        z[static_cast<size_t>(i)] = 0.5 * radius * Complex(std::cos(t), std::sin(t));
    }

    const int max_iter = 400;
    for (int iter = 0; iter < max_iter; ++iter) {
        double move = 0.0;
        for (int i = 0; i < deg; ++i) {
            Complex denom = 1.0;
            for (int j = 0; j < deg; ++j) {
                if (j != i) denom *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
            }
            Complex delta = eval(c, z[static_cast<size_t>(i)]) / denom;
            z[static_cast<size_t>(i)] -= delta;
            move = std::max(move, std::abs(delta));
        }
        if (move < 1e-14 * radius) return z;
    }
    throw NoConvergence("root iteration did not converge");
}

std::vector<Complex> eigenvalues(const Matrix<GaussianRational>& a) {
    const int n = a.dim();
    if (n > kEigenMaxDim) throw DimensionTooLarge("eigenvalues limited to dimension 8");
    Poly p = charpoly(a);
    const int zeros = p.order_at_zero();
    Poly reduced = p.shift_down(zeros);

    std::vector<Complex> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < zeros; ++i) out.emplace_back(0.0, 0.0);

    auto factors = reduced.squarefree_factors();
    for (size_t m = 0; m < factors.size(); ++m) {
        auto roots = squarefree_roots(factors[m]);
        for (const auto& r : roots) {
            for (size_t k = 0; k <= m; ++k) out.push_back(r);
        }
    }

    std::sort(out.begin(), out.end(), [](const Complex& x, const Complex& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return out;
}

std::vector<Complex> eigenvalues(const Matrix<Complex>& a) { return eigenvalues(lift_exact(a)); }

}  // namespace ginv
