#include <doctest.h>

#include "ginv/rational.hpp"

using ginv::GaussianRational;
using ginv::Rational;

TEST_CASE("rational string round trip") {
    CHECK(ginv::rational_from_string("3/4") == Rational(3, 4));
    CHECK(ginv::rational_from_string("-7") == Rational(-7));
    CHECK(ginv::rational_from_string("0") == 0);
    CHECK(ginv::rational_to_string(Rational(3, 4)) == "3/4");
    CHECK(ginv::rational_to_string(Rational(-7)) == "-7");
    CHECK(ginv::rational_from_string("6/4") == Rational(3, 2));
}

TEST_CASE("gaussian rational field arithmetic") {
    GaussianRational i(Rational(0), Rational(1));
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z(Rational(1, 2), Rational(-3));
    CHECK(z + (-z) == GaussianRational(0));
    CHECK(z * z.reciprocal() == GaussianRational(1));
    CHECK(z.conj().conj() == z);
    CHECK(z.norm_sq() == Rational(1, 4) + Rational(9));
    CHECK((z / z) == GaussianRational(1));
}

TEST_CASE("reciprocal of zero throws") {
    CHECK_THROWS_AS(GaussianRational(0).reciprocal(), ginv::SingularError);
}

TEST_CASE("from_double is an exact dyadic lift") {
    CHECK(GaussianRational::from_double(0.5) == GaussianRational(Rational(1, 2)));
    CHECK(GaussianRational::from_double(-2.0) == GaussianRational(-2));
    // 0.1 is not representable; the lift captures the double that is.
    auto x = GaussianRational::from_double(0.1);
    CHECK(x.to_complex().real() == 0.1);
    CHECK(x != GaussianRational(Rational(1, 10)));
}

TEST_CASE("from_complex round trips through to_complex") {
    ginv::Complex z(0.375, -1.25);
    CHECK(GaussianRational::from_complex(z).to_complex() == z);
}

TEST_CASE("str covers real and complex forms") {
    CHECK(GaussianRational(Rational(3, 4)).str() == "3/4");
    CHECK(GaussianRational(Rational(1), Rational(-2)).str() == "1-2i");
}
