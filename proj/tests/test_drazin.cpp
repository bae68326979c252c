#include <doctest.h>

#include "ginv/drazin.hpp"

using ginv::Complex;
using ginv::GaussianRational;
using ginv::Rational;
using Mat = ginv::Matrix<GaussianRational>;
using FMat = ginv::Matrix<Complex>;

TEST_CASE("index of shift blocks, zero, and identity") {
    CHECK(ginv::drazin_index(Mat::shift(4)) == 4);
    CHECK(ginv::drazin_index(Mat::shift(3)) == 3);
    CHECK(ginv::drazin_index(Mat::identity(3)) == 0);
    CHECK(ginv::drazin_index(Mat::zero(3)) == 1);
    CHECK(ginv::drazin_index(Mat::from_rows({{1, 1}, {0, 0}})) == 1);
}

TEST_CASE("nilpotent matrix has zero drazin inverse") {
    auto r = ginv::drazin(Mat::shift(3));
    CHECK(r.inverse == Mat::zero(3));
    CHECK(r.index == 3);
    CHECK(r.projector == Mat::zero(3));
    CHECK(r.core == Mat::zero(3));
    CHECK(r.nilpotent == Mat::shift(3));
}

TEST_CASE("idempotent-like rank one matrix is its own drazin inverse") {
    Mat a = Mat::from_rows({{1, 1}, {0, 0}});
    auto r = ginv::drazin(a);
    CHECK(r.inverse == a);
    CHECK(r.index == 1);
}

TEST_CASE("invertible matrix gives the ordinary inverse at index zero") {
    Mat a = Mat::from_rows({{2, 1}, {1, 1}});
    auto r = ginv::drazin(a);
    CHECK(r.index == 0);
    CHECK(r.inverse * a == Mat::identity(2));
    CHECK(r.projector == Mat::identity(2));
    CHECK(r.nilpotent == Mat::zero(2));
}

TEST_CASE("core nilpotent decomposition invariants on a mixed matrix") {
    // diag(invertible 2x2, J2): index 2.
    Mat a = Mat::from_rows({{2, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
    auto r = ginv::drazin(a);
    CHECK(r.index == 2);
    CHECK(r.projector * r.projector == r.projector);
    CHECK(r.core + r.nilpotent == a);
    CHECK(r.core * r.nilpotent == Mat::zero(4));
    CHECK(r.nilpotent.pow(r.index).is_zero());
    CHECK(!r.nilpotent.pow(r.index - 1).is_zero());
    CHECK(r.inverse(0, 0) == GaussianRational(Rational(1, 2)));
    CHECK(r.inverse(1, 1) == GaussianRational(Rational(1, 3)));
}

TEST_CASE("drazin axioms verify and refute") {
    Mat a = Mat::from_rows({{1, 1}, {0, 0}});
    auto r = ginv::drazin(a);
    auto rep = ginv::verify_drazin_axioms(a, r.inverse, r.index);
    CHECK(rep.overall);
    // Wrong candidate: the transpose fails commutation.
    Mat j = Mat::shift(3);
    CHECK(!ginv::verify_drazin_axioms(j, j.transpose(), 1).overall);
}

TEST_CASE("axiom report names the three equations") {
    Mat a = Mat::identity(2);
    auto rep = ginv::verify_drazin_axioms(a, a, 0);
    REQUIRE(rep.conditions.size() >= 3);
    CHECK(rep.conditions[0].name == "xax = x");
    CHECK(rep.conditions[1].name == "ax = xa");
    CHECK(rep.conditions[2].name == "a^(k+1) x = a^k");
}

TEST_CASE("group inverse of diag(3, 0)") {
    Mat a = Mat::from_rows({{3, 0}, {0, 0}});
    auto g = ginv::group_inverse(a);
    CHECK(g.inverse == Mat::from_rows({{GaussianRational(Rational(1, 3)), 0}, {0, 0}}));
    CHECK(a * g.inverse == g.inverse * a);
    CHECK(a * g.inverse * a == a);
}

TEST_CASE("shift has no group inverse") {
    CHECK_THROWS_AS(ginv::group_inverse(Mat::shift(2)), ginv::NoGroupInverse);
}

TEST_CASE("float backend agrees with exact on a clean case") {
    FMat a = FMat::from_rows({{1.0, 1.0}, {0.0, 0.0}});
    auto r = ginv::drazin(a);
    CHECK(r.index == 1);
    CHECK(ginv::max_abs_diff(r.inverse, a) < 1e-12);
    CHECK(ginv::verify_drazin_axioms(a, r.inverse, r.index).overall);
}

TEST_CASE("drazin commutes with similarity") {
    // a = t diag(2, 0) t^{-1}; a^D = t diag(1/2, 0) t^{-1}.
    Mat t = Mat::from_rows({{1, 1}, {0, 1}});
    Mat core = Mat::from_rows({{2, 0}, {0, 0}});
    Mat a = t * core * ginv::inverse(t);
    Mat expect = t * Mat::from_rows({{GaussianRational(Rational(1, 2)), 0}, {0, 0}}) * ginv::inverse(t);
    CHECK(ginv::drazin(a).inverse == expect);
}
