#pragma once

#include <utility>
#include <vector>

#include "ginv/matrix.hpp"

namespace ginv {

// Dense univariate polynomial over the Gaussian rationals. Coefficient i is
// the x^i term; the representation never carries a zero leading coefficient
// (the zero polynomial is the empty vector).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(GaussianRational v) { return Poly({std::move(v)}); }
    static Poly x() { return Poly({GaussianRational(0), GaussianRational(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const GaussianRational& leading() const { return c_.back(); }
    GaussianRational coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(i)]
                                                         : GaussianRational(0);
    }
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const {
        std::vector<GaussianRational> r(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const {
        std::vector<GaussianRational> r(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
        return Poly(std::move(r));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<GaussianRational> r(c_.size() + o.c_.size() - 1);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<GaussianRational> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = GaussianRational(static_cast<long>(i)) * c_[i];
        return Poly(std::move(r));
    }

    Poly monic() const {
        if (is_zero()) return {};
        GaussianRational inv = leading().reciprocal();
        std::vector<GaussianRational> r(c_);
        for (auto& v : r) v = inv * v;
        return Poly(std::move(r));
    }

    // Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
        std::vector<GaussianRational> rem(a.c_);
        std::vector<GaussianRational> quo;
        int db = b.degree();
        GaussianRational lead_inv = b.leading().reciprocal();
        int dr = static_cast<int>(rem.size()) - 1;
        if (dr >= db) quo.assign(static_cast<size_t>(dr - db) + 1, GaussianRational(0));
        while (dr >= db) {
            GaussianRational f = rem[static_cast<size_t>(dr)] * lead_inv;
            quo[static_cast<size_t>(dr - db)] = f;
            for (int i = 0; i <= db; ++i) {
                rem[static_cast<size_t>(dr - db + i)] -= f * b.c_[static_cast<size_t>(i)];
            }
            rem.pop_back();
            dr = static_cast<int>(rem.size()) - 1;
            while (dr >= 0 && rem[static_cast<size_t>(dr)].is_zero()) {
                rem.pop_back();
                --dr;
            }
        }
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    // Exact quotient; throws if the division leaves a remainder.
    static Poly div_exact(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw InvalidArgument("inexact polynomial division");
        return q;
    }

    // Monic gcd by the Euclidean algorithm; remainders are re-normalized each
    // step to keep coefficient growth down.
    static Poly gcd(Poly a, Poly b) {
        a = a.monic();
        b = b.monic();
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = r.is_zero() ? Poly{} : r.monic();
        }
        return a;
    }

    // Yun's square-free decomposition of a nonzero polynomial:
    // result[i-1] = product of the distinct factors of multiplicity i, monic.
    std::vector<Poly> squarefree_factors() const {
        if (is_zero()) throw InvalidArgument("square-free decomposition of zero");
        Poly f = monic();
        std::vector<Poly> out;
        if (f.degree() == 0) return out;
        Poly fp = f.derivative();
        Poly g = gcd(f, fp);
        if (g.degree() == 0) {
            out.push_back(f);
            return out;
        }
        Poly c = div_exact(f, g);
        Poly d = div_exact(fp, g) - c.derivative();
        while (c.degree() > 0) {
            Poly a = gcd(c, d);
            out.push_back(a);
            c = div_exact(c, a);
            d = div_exact(d, a) - c.derivative();
        }
        return out;
    }

    // Number of trailing zero coefficients, i.e. the multiplicity of the
    // root 0.
    int order_at_zero() const {
        int k = 0;
        while (k < static_cast<int>(c_.size()) && c_[static_cast<size_t>(k)].is_zero()) ++k;
        return is_zero() ? 0 : k;
    }
    // Divides out x^k.
    Poly shift_down(int k) const {
        std::vector<GaussianRational> r(c_.begin() + k, c_.end());
        return Poly(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<GaussianRational> c_;
};

// Characteristic polynomial det(xI - a) by the Faddeev-LeVerrier recurrence,
// exact over the Gaussian rationals.
inline Poly charpoly(const Matrix<GaussianRational>& a) {
    const int n = a.dim();
    std::vector<GaussianRational> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = GaussianRational(1);
    Matrix<GaussianRational> m = Matrix<GaussianRational>::zero(n);
    for (int k = 1; k <= n; ++k) {
        // M_k = a * (M_{k-1} + c_{n-k+1} I)
        Matrix<GaussianRational> shifted = m;
        for (int i = 0; i < n; ++i) shifted(i, i) += c[static_cast<size_t>(n - k + 1)];
        m = a * shifted;
        GaussianRational trace(0);
        for (int i = 0; i < n; ++i) trace += m(i, i);
        c[static_cast<size_t>(n - k)] = GaussianRational(Rational(-1, static_cast<long>(k))) * trace;
    }
    return Poly(std::move(c));
}

}  // namespace ginv
