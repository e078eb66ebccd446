/*
   Copyright 2026 The ratcurve Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "ratcurve/report.hpp"
#include "test_support.hpp"

namespace ratcurve {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ratcurve::testing;

TEST(ParamsFile, RoundTrip) {
    const auto fixture = load_fixture("example_3_1_params.json");
    const auto params = params_from_json(fixture);
    EXPECT_EQ(params.dims().n, 4);
    EXPECT_EQ(params_from_json(to_json(params)).values(), params.values());
    json j = to_json(params);
    j["l"][0][0][0] = "-3/2";
    EXPECT_EQ(params_from_json(j).l(0, 0, 0), Rational(mpz_class(-3), mpz_class(2)));
}

TEST(ParamsFile, Errors) {
    const auto good = load_fixture("example_3_1_params.json");
    EXPECT_THROW(params_from_json(json::array()), ParseError);
    json no_d = good;
    no_d.erase("d");
    EXPECT_THROW(params_from_json(no_d), ParseError);
    json short_rows = good;
    short_rows["l"].erase(0);
    EXPECT_THROW(params_from_json(short_rows), DimensionMismatch);
    json wide = good;
    wide["p"][0][0].push_back(1);
    EXPECT_THROW(params_from_json(wide), DimensionMismatch);
    json bad_entry = good;
    bad_entry["l"][0][0][0] = 1.5;
    EXPECT_THROW(params_from_json(bad_entry), ParseError);
    json wrong_dims = good;
    wrong_dims["d"] = 6;
    EXPECT_THROW(params_from_json(wrong_dims), DimensionMismatch);
    json scope = good;
    scope["d"] = 4;
    EXPECT_THROW(params_from_json(scope), OutOfScope);
    EXPECT_THROW(load_params_file("/nonexistent/params.json"), InputError);
}

TEST(Report, CertificateFields) {
    DominanceOptions opts;
    opts.n = 2;
    opts.d = 3;
    opts.seed = 42;
    const json j = to_json(certify_dominance(opts));
    for (const char* key : {"schema_version", "artifact_version", "kind", "n", "d", "fields", "seed", "trials",
                            "observed_rank", "target_rank", "verdict", "error_bound", "error_bound_kind", "timing_ms",
                            "point", "param_order", "trial_log", "identity_battery"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["verdict"], "dominant-certified");
    EXPECT_EQ(j["error_bound"], "0");
    EXPECT_TRUE(j["error_bound_log10"].is_null());
    EXPECT_FALSE(without_timing(j).contains("timing_ms"));
    const std::string header = csv_header();
    const std::string row = csv_row(certify_dominance(opts));
    EXPECT_EQ(std::count(header.begin(), header.end(), ','), std::count(row.begin(), row.end(), ','));
}

TEST(Report, Log10) {
    EXPECT_NEAR(log10_of(Rational(mpz_class(1), mpz_class("1000000000000000000000000000000000000000000000000"))), -48.0, 1e-9);
    EXPECT_NEAR(log10_of(Rational(1000)), 3.0, 1e-12);
}

// ---------------------------------------------------------------------------------------------
// CLI exit codes and determinism

struct Run {
    int code = -1;
    std::string out;
};

Run run_cli(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / ("ratcurve_cli_out_" + std::to_string(::getpid()));
    const std::string cmd = std::string("env -u RATCURVE_OUT_DIR ") + RATCURVE_CLI + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    fs::remove(out);
    return r;
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("ratcurve_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir / name;
}

TEST(Cli, Dims) {
    auto r = run_cli("dims --n 4 --d 5");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("q=1 a=3 b=1 dom=45 codom=21 diff=24"), std::string::npos);
    EXPECT_NE(run_cli("dims --n 2 --d 3").out.find("diff=8"), std::string::npos);
    EXPECT_EQ(run_cli("dims --n 3 --d 3").code, 3);
    EXPECT_EQ(run_cli("dims --n 3").code, 3);
    EXPECT_EQ(run_cli("nonsense").code, 3);
}

TEST(Cli, Example) {
    auto r = run_cli("example " + fixture_path("example_3_1_params.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("F2 = 16*s*t^3 + 8*s^2*t^2 + 4*s^3*t"), std::string::npos);
    auto j = run_cli("example --format json " + fixture_path("example_3_1_params.json"));
    EXPECT_EQ(j.code, 0);
    EXPECT_EQ(json::parse(j.out)["H"][0], "16*s^3*t^2 + 8*s^4*t");

    const auto zero = scratch("zero.json");
    json z = load_fixture("example_3_1_params.json");
    for (auto& row : z["l"])
        for (auto& e : row)
            for (auto& c : e) c = 0;
    for (auto& row : z["p"])
        for (auto& e : row)
            for (auto& c : e) c = 0;
    std::ofstream(zero) << z.dump();
    EXPECT_EQ(run_cli("example " + zero.string()).code, 2);

    const auto broken = scratch("broken.json");
    std::ofstream(broken) << "{\"n\": 4, \"d\": ";
    EXPECT_EQ(run_cli("example " + broken.string()).code, 3);
    EXPECT_EQ(run_cli("example /nonexistent.json").code, 3);
}

TEST(Cli, CertifyExitCodesAndDeterminism) {
    const auto a = scratch("cert_a.json");
    const auto b = scratch("cert_b.json");
    EXPECT_EQ(run_cli("certify --n 2 --d 3 --seed 42 --out " + a.string()).code, 0);
    EXPECT_EQ(run_cli("certify --n 2 --d 3 --seed 42 --out " + b.string()).code, 0);
    auto load = [](const fs::path& p) {
        std::ifstream in(p);
        return without_timing(json::parse(in)).dump();
    };
    EXPECT_EQ(load(a), load(b));
    EXPECT_EQ(json::parse(std::ifstream(a))["observed_rank"], 7);
    EXPECT_EQ(run_cli("certify --n 4 --d 5 --seed 1 --out " + a.string()).code, 2);
    EXPECT_EQ(run_cli("certify --n 4 --d 4").code, 3);
    EXPECT_EQ(run_cli("certify --n 2 --d 3 --field fp --prime 1000001").code, 3);
    auto fp = run_cli("certify --n 2 --d 3 --field fp --prime 1000003");
    EXPECT_EQ(fp.code, 0);
    EXPECT_EQ(json::parse(fp.out)["fields"][0], "F_1000003");
}

TEST(Cli, RelationsControl) {
    auto r = run_cli("relations --n 3 --trials 2");
    EXPECT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["verdict"], "no-relation-detected");
    EXPECT_EQ(j["observed_rank"], 2);
}

TEST(Cli, OutputDirectoryFromEnvironment) {
    const auto dir = scratch("envdir");
    const std::string cmd = std::string("RATCURVE_OUT_DIR=") + dir.string() + " " + RATCURVE_CLI +
                            " certify --n 2 --d 3 --seed 7 > /dev/null 2>&1";
    EXPECT_EQ(std::system(cmd.c_str()), 0);
    EXPECT_TRUE(fs::exists(dir / "certify_n2_d3_seed7.json"));
}

}  // namespace
}  // namespace ratcurve

namespace {

class ScratchCleanup : public ::testing::Environment {
public:
    void TearDown() override {
        std::error_code ec;
        std::filesystem::remove_all(std::filesystem::temp_directory_path() / ("ratcurve_test_" + std::to_string(::getpid())), ec);
    }
};

[[maybe_unused]] ::testing::Environment* const kCleanup = ::testing::AddGlobalTestEnvironment(new ScratchCleanup);

}  // namespace
