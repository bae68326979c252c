#include <doctest.h>

#include <variant>

#include "ginv/generate.hpp"
#include "ginv/json_io.hpp"

using ginv::Complex;
using ginv::GaussianRational;
using ginv::Json;
using ginv::Rational;
using Mat = ginv::Matrix<GaussianRational>;
using FMat = ginv::Matrix<Complex>;

TEST_CASE("exact matrix round trips bit for bit") {
    Mat m = Mat::from_rows({{GaussianRational(Rational(1, 3)), GaussianRational(Rational(0), Rational(-2))},
                            {7, 0}});
    auto back = ginv::matrix_from_json(ginv::parse_text(ginv::dump(ginv::to_json(m))));
    REQUIRE(std::holds_alternative<Mat>(back));
    CHECK(std::get<Mat>(back) == m);
}

TEST_CASE("float matrix round trips bit for bit") {
    FMat m = FMat::from_rows({{Complex(0.1, -2.5), Complex(0.0, 1.0)}, {Complex(3.0, 0.0), Complex(-0.25, 0.125)}});
    auto back = ginv::matrix_from_json(ginv::parse_text(ginv::dump(ginv::to_json(m))));
    REQUIRE(std::holds_alternative<FMat>(back));
    CHECK(std::get<FMat>(back) == m);
}

TEST_CASE("exact entries serialize as rational strings") {
    Mat m = Mat::from_rows({{GaussianRational(Rational(1, 3))}});
    Json j = ginv::to_json(m);
    CHECK(j["backend"] == "exact");
    CHECK(j["n"] == 1);
    CHECK(j["entries"][0][0]["re"] == "1/3");
    CHECK(j["entries"][0][0]["im"] == "0");
}

TEST_CASE("backend and entry types must agree") {
    Json numeric_in_exact = ginv::parse_text(
        R"({"n":1,"backend":"exact","entries":[[{"re":1.5,"im":0}]]})");
    CHECK_THROWS_AS(ginv::matrix_from_json(numeric_in_exact), ginv::IoError);
    Json string_in_f64 = ginv::parse_text(
        R"({"n":1,"backend":"f64","entries":[[{"re":"1/2","im":"0"}]]})");
    CHECK_THROWS_AS(ginv::matrix_from_json(string_in_f64), ginv::IoError);
    Json bad_backend = ginv::parse_text(
        R"({"n":1,"backend":"f32","entries":[[{"re":1,"im":0}]]})");
    CHECK_THROWS_AS(ginv::matrix_from_json(bad_backend), ginv::IoError);
}

TEST_CASE("shape validation") {
    CHECK_THROWS_AS(ginv::matrix_from_json(ginv::parse_text(
                        R"({"n":2,"backend":"f64","entries":[[{"re":1,"im":0}]]})")),
                    ginv::IoError);
    CHECK_THROWS_AS(ginv::matrix_from_json(ginv::parse_text(
                        R"({"n":0,"backend":"f64","entries":[]})")),
                    ginv::IoError);
    CHECK_THROWS_AS(ginv::matrix_from_json(ginv::parse_text(R"({"backend":"f64"})")),
                    ginv::IoError);
}

TEST_CASE("syntax errors carry line and column") {
    try {
        ginv::parse_text("{\n  \"n\": 2,\n  oops\n}");
        FAIL("expected IoError");
    } catch (const ginv::IoError& e) {
        std::string what = e.what();
        CHECK(what.find("line 3") != std::string::npos);
        CHECK(what.find("column") != std::string::npos);
    }
}

TEST_CASE("quadruple round trip keeps the family") {
    auto q = ginv::example_3_7();
    auto back = ginv::quadruple_from_json(ginv::parse_text(ginv::dump(ginv::to_json(q))));
    REQUIRE(std::holds_alternative<ginv::ClineQuadruple<GaussianRational>>(back));
    const auto& r = std::get<ginv::ClineQuadruple<GaussianRational>>(back);
    CHECK(r.family == q.family);
    CHECK(r.a == q.a);
    CHECK(r.b == q.b);
    CHECK(r.c == q.c);
    CHECK(r.d == q.d);
}

TEST_CASE("omitted d defaults to a for the self-referential families") {
    Json m = ginv::to_json(Mat::identity(2));
    for (std::string fam : {"classical", "lian-zeng"}) {
        Json j{{"family", fam}, {"a", m}, {"b", m}, {"c", m}};
        auto q = ginv::quadruple_from_json(j);
        const auto& e = std::get<ginv::ClineQuadruple<GaussianRational>>(q);
        CHECK(e.d == e.a);
    }
    Json j{{"family", "ring-four"}, {"a", m}, {"b", m}, {"c", m}};
    CHECK_THROWS_AS(ginv::quadruple_from_json(j), ginv::IoError);
}

TEST_CASE("mixed backends inside a quadruple are rejected") {
    Json exact = ginv::to_json(Mat::identity(2));
    Json f64 = ginv::to_json(FMat::identity(2));
    Json j{{"family", "classical"}, {"a", exact}, {"b", f64}, {"c", exact}, {"d", exact}};
    CHECK_THROWS_AS(ginv::quadruple_from_json(j), ginv::IoError);
}

TEST_CASE("drazin result serializes as an enriched matrix") {
    auto r = ginv::drazin(Mat::from_rows({{1, 1}, {0, 0}}));
    Json j = ginv::to_json(r);
    CHECK(j["index"] == 1);
    CHECK(j["backend"] == "exact");
    CHECK(j.contains("projector"));
    CHECK(j.contains("core"));
    CHECK(j.contains("nilpotent"));
    // The enriched form still parses as a plain matrix.
    auto back = ginv::matrix_from_json(j);
    CHECK(std::get<Mat>(back) == r.inverse);
}

TEST_CASE("report serialization shape") {
    auto rep = ginv::check_conditions(ginv::example_3_7());
    Json j = ginv::to_json(rep);
    CHECK(j["overall"] == true);
    REQUIRE(j["conditions"].is_array());
    CHECK(j["conditions"][0].contains("name"));
    CHECK(j["conditions"][0].contains("residual"));
    CHECK(j["conditions"][0].contains("holds"));
}

TEST_CASE("file round trip") {
    Json j = ginv::to_json(Mat::identity(2));
    std::string path = "test_io_roundtrip.json";
    ginv::save_file(path, j);
    CHECK(ginv::load_file(path) == j);
    std::remove(path.c_str());
    CHECK_THROWS_AS(ginv::load_file("does_not_exist.json"), ginv::IoError);
}

TEST_CASE("dump is deterministic and sorted") {
    Json j{{"zebra", 1}, {"alpha", 2}};
    std::string s = ginv::dump(j);
    CHECK(s.find("alpha") < s.find("zebra"));
    CHECK(ginv::dump(j) == s);
}
