#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

#include "ginv/error.hpp"

namespace ginv {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator). GMP keeps arithmetic results canonical as long as the
// operands are.
using Rational = mpq_class;

// Parses "p", "-p", "p/q" (base 10). Rejects anything else, including a zero
// denominator.
Rational rational_from_string(const std::string& s);

// Lowest-terms text form, "p" or "p/q".
std::string rational_to_string(const Rational& r);

// Complex number with exact rational real and imaginary parts. Closed under
// +, -, *, and division by nonzero elements, so matrix elimination over this
// type is free of round-off.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(int v) : re_(v), im_(0) {}  // NOLINT: implicit by design
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    // Exact lift: every finite double is a dyadic rational.
    static GaussianRational from_double(double re, double im = 0.0);
    static GaussianRational from_complex(std::complex<double> z) {
        return from_double(z.real(), z.imag());
    }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm_sq() const { return re_ * re_ + im_ * im_; }

    // Multiplicative inverse; throws SingularError on zero.
    GaussianRational reciprocal() const;

    std::complex<double> to_complex() const {
        return {re_.get_d(), im_.get_d()};
    }
    // |z| evaluated in double precision. Used only for pivot selection and
    // residual reporting; never for exact zero tests.
    double abs_approx() const { return std::abs(to_complex()); }

    // "p/q" for real values, "p/q+r/si" otherwise. Diagnostic form.
    std::string str() const;

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.reciprocal(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    Rational re_, im_;
};

using Complex = std::complex<double>;

// Float-mode comparison thresholds. Ignored entirely by the exact backend.
struct Tolerance {
    double eq_tol = 1e-10;    // max-entry |difference| for equality checks
    double rank_tol = 1e-9;   // pivot threshold, relative to the largest entry
};

// The two interchangeable scalar backends, unified for generic code.
template <typename T>
struct ScalarOps;

template <>
struct ScalarOps<GaussianRational> {
    static constexpr bool exact = true;
    static const char* backend_name() { return "exact"; }
    static GaussianRational zero() { return {}; }
    static GaussianRational one() { return {1}; }
    static bool is_zero(const GaussianRational& x, double /*tol*/ = 0.0) { return x.is_zero(); }
    static double abs(const GaussianRational& x) { return x.abs_approx(); }
    static GaussianRational reciprocal(const GaussianRational& x) { return x.reciprocal(); }
    static Complex to_complex(const GaussianRational& x) { return x.to_complex(); }
    static GaussianRational from_complex(Complex z) { return GaussianRational::from_complex(z); }
};

template <>
struct ScalarOps<Complex> {
    static constexpr bool exact = false;
    static const char* backend_name() { return "f64"; }
    static Complex zero() { return {0.0, 0.0}; }
    static Complex one() { return {1.0, 0.0}; }
    static bool is_zero(const Complex& x, double tol) { return std::abs(x) <= tol; }
    static double abs(const Complex& x) { return std::abs(x); }
    static Complex reciprocal(const Complex& x) {
        if (x == Complex{0.0, 0.0}) throw SingularError("division by zero");
        return Complex{1.0, 0.0} / x;
    }
    static Complex to_complex(const Complex& x) { return x; }
    static Complex from_complex(Complex z) { return z; }
};

}  // namespace ginv
