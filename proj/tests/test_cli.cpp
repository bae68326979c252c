#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ginv/cli.hpp"
#include "ginv/generate.hpp"
#include "ginv/json_io.hpp"

using ginv::GaussianRational;
using ginv::Json;
using Mat = ginv::Matrix<GaussianRational>;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
    Json json() const { return ginv::parse_text(out); }
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    CliRun r;
    r.code = ginv::run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// Writes JSON to a throwaway file in the working directory and removes it on
// scope exit.
struct TmpJson {
    std::string path;
    explicit TmpJson(const std::string& name, const Json& j) : path(name) {
        ginv::save_file(path, j);
    }
    ~TmpJson() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("drazin verb on a nilpotent matrix") {
    TmpJson f("cli_j3.json", ginv::to_json(Mat::shift(3)));
    auto r = run({"drazin", "--input", f.path});
    CHECK(r.code == 0);
    Json j = r.json();
    CHECK(j["index"] == 3);
    CHECK(j["backend"] == "exact");
    CHECK(j["entries"][0][1]["re"] == "0");
    CHECK(j.contains("projector"));
}

TEST_CASE("group verb success and failure") {
    TmpJson ok("cli_diag.json", ginv::to_json(Mat::from_rows({{3, 0}, {0, 0}})));
    auto r = run({"group", "--input", ok.path});
    CHECK(r.code == 0);
    CHECK(r.json()["entries"][0][0]["re"] == "1/3");

    TmpJson bad("cli_j2.json", ginv::to_json(Mat::shift(2)));
    auto rb = run({"group", "--input", bad.path});
    CHECK(rb.code == 1);
    CHECK(rb.err.find("error") != std::string::npos);
}

TEST_CASE("index verb") {
    TmpJson f("cli_j4.json", ginv::to_json(Mat::shift(4)));
    auto r = run({"index", "--input", f.path});
    CHECK(r.code == 0);
    CHECK(r.json() == Json{{"index", 4}});
}

TEST_CASE("check verb verdict drives the exit code") {
    TmpJson good("cli_ex37.json", ginv::to_json(ginv::example_3_7()));
    auto r = run({"check", "--input", good.path});
    CHECK(r.code == 0);
    CHECK(r.json()["overall"] == true);

    // Same quadruple declared under a family whose equations it fails.
    auto q = ginv::example_3_7();
    q.b(1, 0) += GaussianRational(1);
    TmpJson tampered("cli_bad.json", ginv::to_json(q));
    auto rb = run({"check", "--input", tampered.path});
    CHECK(rb.code == 1);
    CHECK(rb.json()["overall"] == false);
}

TEST_CASE("check with a family override") {
    TmpJson f("cli_ex37b.json", ginv::to_json(ginv::example_3_7()));
    auto r = run({"check", "--family", "ring-four", "--input", f.path});
    CHECK(r.code == 0);
    CHECK(r.json()["conditions"].size() == 4);
}

TEST_CASE("transfer verb reports the index bound") {
    ginv::ClineQuadruple<GaussianRational> q{Mat::shift(2), Mat::shift(2).transpose(),
                                             Mat::shift(2).transpose(), Mat::shift(2),
                                             ginv::ConditionFamily::Classical};
    TmpJson f("cli_classical.json", ginv::to_json(q));
    auto r = run({"transfer", "--input", f.path});
    CHECK(r.code == 0);
    Json j = r.json();
    CHECK(j["index"] == 1);
    CHECK(j["index_ac"] == 1);
    CHECK(j["index_bd"] == 1);
    CHECK(j["bound_holds"] == true);
    CHECK(j["slack"] == 2);
    CHECK(j["entries"][1][1]["re"] == "1");
}

TEST_CASE("jacobson verb on the scalar oracle") {
    GaussianRational half(ginv::Rational(1, 2));
    ginv::ClineQuadruple<GaussianRational> q{Mat::from_rows({{1}}), Mat::from_rows({{1}}),
                                             Mat::from_rows({{half}}), Mat::from_rows({{half}}),
                                             ginv::ConditionFamily::RingFour};
    TmpJson f("cli_jac.json", ginv::to_json(q));
    auto r = run({"jacobson", "--input", f.path});
    CHECK(r.code == 0);
    CHECK(r.json()["entries"][0][0]["re"] == "2");

    ginv::ClineQuadruple<GaussianRational> sing{Mat::identity(1), Mat::identity(1),
                                                Mat::identity(1), Mat::identity(1),
                                                ginv::ConditionFamily::RingFour};
    TmpJson fs("cli_jac_sing.json", ginv::to_json(sing));
    auto rs = run({"jacobson", "--input", fs.path});
    CHECK(rs.code == 1);
}

TEST_CASE("spectrum verb on a plain matrix") {
    TmpJson f("cli_spec_m.json", ginv::to_json(Mat::from_rows({{1, 1}, {0, 0}})));
    auto r = run({"spectrum", "--input", f.path});
    CHECK(r.code == 0);
    Json j = r.json();
    REQUIRE(j["eigenvalues"].size() == 2);
    CHECK(j["eigenvalues"][0]["re"] == 0.0);
    CHECK(j["eigenvalues"][1]["re"] == 1.0);
    CHECK(j["drazin_spectrum"]["values"].empty());
    CHECK(!j["drazin_spectrum"]["note"].get<std::string>().empty());
}

TEST_CASE("spectrum verb on a quadruple") {
    TmpJson f("cli_spec_q.json", ginv::to_json(ginv::example_3_7()));
    auto r = run({"spectrum", "--input", f.path});
    CHECK(r.code == 0);
    Json j = r.json();
    CHECK(j["nonzero_spectrum_equal"] == true);
    REQUIRE(j["lambda_checks"].is_array());
    CHECK(j["lambda_checks"].size() == 20);
    for (const auto& c : j["lambda_checks"]) CHECK(c["transfer_holds"] == true);
}

TEST_CASE("gen verb is deterministic and requires a family") {
    auto a = run({"gen", "--family", "miller-zguitti", "--dim", "3", "--seed", "11"});
    auto b = run({"gen", "--family", "miller-zguitti", "--dim", "3", "--seed", "11"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    Json j = a.json();
    CHECK(j["family"] == "miller-zguitti");
    CHECK(j["a"]["n"] == 3);

    auto missing = run({"gen", "--dim", "3"});
    CHECK(missing.code == 2);
}

TEST_CASE("demo verb accepts only the known instance") {
    auto r = run({"demo", "example-3-7"});
    CHECK(r.code == 0);
    Json j = r.json();
    CHECK(j["ac_index"] == 2);
    CHECK(j["bd_index"] == 2);
    CHECK(j["acd_equals_dbd"] == false);
    CHECK(j["transfer_equals_direct"] == true);
    CHECK(j["ac_nilpotent"] == true);
    CHECK(j["bd_nilpotent"] == true);
    CHECK(j["conditions"]["overall"] == true);

    auto rb = run({"demo", "example-3-8"});
    CHECK(rb.code == 2);
}

TEST_CASE("suite verb smoke run") {
    auto r = run({"suite", "--seeds", "1", "--dims", "1"});
    CHECK(r.code == 0);
    CHECK(r.json()["overall"] == true);
}

TEST_CASE("malformed input exits 2 with a located diagnostic") {
    std::ofstream("cli_broken.json") << "{\"n\": 2,\n  broken\n}";
    auto r = run({"drazin", "--input", "cli_broken.json"});
    std::remove("cli_broken.json");
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("missing file exits 2") {
    auto r = run({"drazin", "--input", "no_such_file.json"});
    CHECK(r.code == 2);
}

TEST_CASE("usage errors exit 2 and help exits 0") {
    CHECK(run({"drazin", "--frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"drazin"}).code == 2);  // --input is required
}

TEST_CASE("backend flag converts the computation") {
    TmpJson f("cli_bk.json", ginv::to_json(Mat::from_rows({{1, 1}, {0, 0}})));
    auto r = run({"drazin", "--backend", "f64", "--input", f.path});
    CHECK(r.code == 0);
    Json j = r.json();
    CHECK(j["backend"] == "f64");
    CHECK(j["entries"][0][0]["re"] == 1.0);
    CHECK(run({"drazin", "--backend", "f99", "--input", f.path}).code == 2);
}

TEST_CASE("out flag writes the file instead of stdout") {
    TmpJson f("cli_out_in.json", ginv::to_json(Mat::identity(2)));
    auto r = run({"index", "--input", f.path, "--out", "cli_out_res.json"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(ginv::load_file("cli_out_res.json") == Json{{"index", 0}});
    std::remove("cli_out_res.json");
}
