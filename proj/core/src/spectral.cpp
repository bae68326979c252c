#include "ginv/spectral.hpp"

#include <cmath>

namespace ginv {

bool multiset_match(const std::vector<Complex>& xs, const std::vector<Complex>& ys, double tol) {
    if (xs.size() != ys.size()) return false;
    std::vector<bool> used(ys.size(), false);
    std::vector<bool> done(xs.size(), false);
    // Pair globally closest values first so borderline ties cannot steal a
    // partner from a value that has no alternative.
    for (size_t round = 0; round < xs.size(); ++round) {
        size_t bi = xs.size();
        size_t bj = ys.size();
        double best = 0.0;
        for (size_t i = 0; i < xs.size(); ++i) {
            if (done[i]) continue;
            for (size_t j = 0; j < ys.size(); ++j) {
                if (used[j]) continue;
                double d = std::abs(xs[i] - ys[j]);
                if (bi == xs.size() || d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (best > tol) return false;
        done[bi] = true;
        used[bj] = true;
    }
    return true;
}

bool nonzero_spectrum_equal(const ClineQuadruple<Complex>& q, const Tolerance& tol,
                            double match_tol) {
    detail::require_conditions(q, tol);
    auto strip = [match_tol](std::vector<Complex> v) {
        std::vector<Complex> out;
        for (const auto& x : v) {
            if (std::abs(x) >= match_tol) out.push_back(x);
        }
        return out;
    };
    return multiset_match(strip(eigenvalues(q.a * q.c)), strip(eigenvalues(q.b * q.d)),
                          match_tol);
}

std::vector<Complex> lambda_samples(const std::vector<Complex>& spectrum, int count) {
    static const Complex grid[] = {
        {1, 0},     {-1, 0},   {0.5, 0},    {2, 0},      {0, 1},     {0, -1},   {1, 1},
        {1, -1},    {1.5, 0},  {-0.5, 0},   {0, 2},      {0, -2},    {0.25, 0}, {-0.25, 0},
        {3, 0},     {-3, 0},   {0.5, 0.5},  {-0.5, -0.5}, {2.5, 0},  {-2.5, 0}, {0.75, 0.25},
        {-0.75, 0}, {0, 0.5},  {0, -0.5},   {1.25, 0},   {4, 0},     {-4, 0},   {0.125, 0}};
    std::vector<Complex> out;
    auto push = [&out, count](Complex v) {
        if (static_cast<int>(out.size()) >= count) return;
        if (std::abs(v) < 1e-9) return;
        for (const auto& seen : out) {
            if (std::abs(seen - v) < 1e-12) return;
        }
        out.push_back(v);
    };
    for (const auto& ev : spectrum) push(ev);
    for (const auto& ev : spectrum) push(ev + Complex(1e-3, 0.0));
    for (const auto& g : grid) push(g);
    return out;
}

}  // namespace ginv
