#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "gyro/cli.hpp"
#include "gyro/table_io.hpp"

using gyro::cli::run;
using gyro::cli::kExitFail;
using gyro::cli::kExitPass;
using gyro::cli::kExitUsage;

namespace {

std::string data_path(const std::string& name) { return std::string(GYRO_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / ("gyro_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

std::string corrupted_k1_file()
{
    auto text = gyro::io::read_file(data_path("K1.gyro"));
    const auto pos = text.find("6 7 4 5 3 2 1 0");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 15, "6 7 4 5 3 3 1 0");
    return write_temp("corrupted.gyro", text);
}

}  // namespace

TEST_CASE("verify K1")
{
    const auto r = run({"verify", "--fixture", "K1"});
    CHECK(r.exit_code == kExitPass);
    CHECK(r.report["valid"] == true);
    CHECK(r.report["distinct_gyrations"] == nlohmann::json{"()", "(4,5)(6,7)"});
    CHECK(r.out.find("result: pass") != std::string::npos);

    const auto expect = run({"verify", "--table", data_path("K1.gyro"), "--expect-gyr", data_path("K1.gyr")});
    CHECK(expect.exit_code == kExitPass);
    CHECK(expect.report["gyration_mismatches"].empty());
}

TEST_CASE("verify rejects the corrupted table")
{
    const auto r = run({"--json", "verify", "--table", corrupted_k1_file()});
    CHECK(r.exit_code == kExitFail);
    CHECK(r.report["valid"] == false);
    bool gyroassoc = false;
    for (const auto& v : r.report["violations"]) gyroassoc = gyroassoc || v["axiom"] == "GyroassociativityFails";
    CHECK(gyroassoc);
    CHECK(nlohmann::json::parse(r.out) == r.report);
}

TEST_CASE("normals K2 with golden comparison")
{
    const auto r = run({"normals", "--fixture", "K2", "--golden", "K2"});
    CHECK(r.exit_code == kExitPass);
    CHECK(r.report["sets"].size() == 19);
    CHECK(r.report["golden"]["missing"].empty());
    CHECK(r.report["golden"]["unexpected"].empty());
    CHECK(r.report["golden"]["flag_mismatches"].empty());
    CHECK(r.report["golden"]["order_matches"] == true);

    const auto mismatch = run({"normals", "--fixture", "K1", "--golden", "K2"});
    CHECK(mismatch.exit_code == kExitFail);
}

TEST_CASE("double emits the K2 document")
{
    const auto r = run({"double", "--fixture", "K1"});
    CHECK(r.exit_code == kExitPass);
    CHECK(r.out == gyro::io::read_file(data_path("K2.gyro")));
}

TEST_CASE("subs, quotient, classify, corollary and fixture")
{
    const auto subs = run({"subs", "--fixture", "K1"});
    CHECK(subs.exit_code == kExitPass);
    CHECK(subs.report["complete"] == true);

    const auto q = run({"quotient", "--fixture", "K1", "--by", "0,1"});
    CHECK(q.exit_code == kExitPass);
    CHECK(q.report["quotient_order"] == 4);
    CHECK(q.report["degenerate"] == true);
    CHECK(run({"quotient", "--fixture", "K1", "--by", "0,2"}).exit_code == kExitFail);

    const auto c = run({"classify", "--fixture", "K2", "--set", "0,1,8,9"});
    CHECK(c.exit_code == kExitPass);
    CHECK(c.report["classifications"][0]["clauses"] == nlohmann::json{"3"});

    const auto all = run({"classify", "--fixture", "K2"});
    CHECK(all.exit_code == kExitPass);
    CHECK(all.report["classifications"].size() == 19);

    CHECK(run({"corollary", "--fixture", "K3"}).exit_code == kExitPass);

    const auto f = run({"fixture", "K1", "--emit"});
    CHECK(f.exit_code == kExitPass);
    CHECK(f.out == gyro::io::read_file(data_path("K1.gyro")));
    CHECK(run({"fixture", "K2", "--golden"}).out == gyro::io::read_file(data_path("K2.normals")));
    CHECK(run({"fixture", "K2", "--gyr"}).out == gyro::io::read_file(data_path("K2.gyr")));
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).exit_code == kExitUsage);
    CHECK(run({"frobnicate"}).exit_code == kExitUsage);
    CHECK(run({"verify", "--fixture", "Q1"}).exit_code == kExitUsage);
    CHECK(run({"verify", "--fixture", "K9"}).exit_code == kExitUsage);
    CHECK(run({"quotient", "--fixture", "K1"}).exit_code == kExitUsage);
    CHECK(run({"fixture", "K3", "--golden"}).exit_code == kExitUsage);
    CHECK(run({"verify", "--table", write_temp("bad.gyro", "gyro 1\n2\n0 1\n")}).exit_code == kExitUsage);
    CHECK(run({"--help"}).exit_code == kExitPass);
    CHECK(run({"verify", "--table", "/nonexistent/table.gyro"}).exit_code == kExitUsage);
    CHECK(run({"quotient", "--fixture", "K1", "--by", "0,9"}).exit_code == kExitUsage);
    CHECK(run({"quotient", "--fixture", "K1", "--by", "x"}).exit_code == kExitUsage);
    const auto short_phi = write_temp("short.phi", "9 8\n");
    const auto bad_phi = run({"double", "--table", data_path("K1.gyro"), "--phi", short_phi});
    CHECK(bad_phi.exit_code == kExitUsage);
    CHECK(bad_phi.err.find("error:") != std::string::npos);
}

TEST_CASE("failures render without a payload")
{
    const auto r = run({"classify", "--base", data_path("K1.gyro"), "--set", "0,3,9", "--subs"});
    CHECK(r.exit_code == kExitFail);
    CHECK(r.out.find("result: fail") != std::string::npos);

    const auto phi = write_temp("reversed.phi", "15 14 13 12 11 10 9 8\n");
    const auto d = run({"double", "--table", data_path("K1.gyro"), "--phi", phi});
    CHECK(d.exit_code == kExitPass);
    CHECK(d.out.rfind("gyro 1\n16\n", 0) == 0);
}

TEST_CASE("output is deterministic")
{
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"--json", "normals", "--fixture", "K2"},
          std::vector<std::string>{"classify", "--fixture", "K2", "--subs"},
          std::vector<std::string>{"--json", "verify", "--fixture", "K3"}}) {
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.out == b.out);
        CHECK(a.exit_code == b.exit_code);
    }
}

TEST_CASE("human output is rendered from the report")
{
    const auto r = run({"normals", "--fixture", "K1"});
    CHECK(r.out == gyro::cli::render_human(r.report));
}
