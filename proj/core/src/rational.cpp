#include "ginv/rational.hpp"

#include <cctype>
#include <cmath>

namespace ginv {

namespace {

bool digits_only(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational rational_from_string(const std::string& s) {
    // Accepted grammar: [-]digits or [-]digits/digits. No whitespace, no '+'.
    size_t slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    size_t num_start = (!num.empty() && num[0] == '-') ? 1 : 0;
    if (!digits_only(num, num_start, num.size())) {
        throw IoError("invalid rational literal: \"" + s + "\"");
    }
    if (slash != std::string::npos) {
        if (!digits_only(s, slash + 1, s.size())) {
            throw IoError("invalid rational literal: \"" + s + "\"");
        }
    }
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) {
        throw IoError("invalid rational literal: \"" + s + "\"");
    }
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) {
        throw IoError("zero denominator in rational literal: \"" + s + "\"");
    }
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

GaussianRational GaussianRational::from_double(double re, double im) {
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw InvalidArgument("cannot lift a non-finite double to a rational");
    }
    // mpq_set_d is exact: binary floating-point values are dyadic rationals.
    Rational rr(re), ri(im);
    return {std::move(rr), std::move(ri)};
}

GaussianRational GaussianRational::reciprocal() const {
    if (is_zero()) throw SingularError("division by zero");
    Rational n = norm_sq();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string GaussianRational::str() const {
    if (im_ == 0) return re_.get_str();
    std::string s = re_.get_str();
    if (im_ > 0) s += "+";
    s += im_.get_str() + "i";
    return s;
}

}  // namespace ginv
