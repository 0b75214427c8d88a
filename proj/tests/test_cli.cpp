#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include <qcurve/errors.hpp>
#include <qcurve/families.hpp>

#include "qcurve_cli/cli.hpp"
#include "qcurve_cli/curve_io.hpp"

using namespace qcurve;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qcurve");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path tmpdir() {
    fs::path p(QCURVE_TEST_TMPDIR);
    fs::create_directories(p);
    return p;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
        out.push_back(line);
    }
    return out;
}

std::vector<double> split_numbers(const std::string& line) {
    std::vector<double> out;
    std::istringstream is(line);
    for (std::string cell; std::getline(is, cell, ',');) {
        out.push_back(std::stod(cell));
    }
    return out;
}

} // namespace

TEST(Cli, SampleWritesCsvTable) {
    const Result r = run_cli({"sample", "--family", "circle", "--radius", "2", "--n", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines_of(r.out);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0], "t,s,x,y,z");
    const auto last = split_numbers(rows[5]);
    EXPECT_NEAR(last[0], 2 * std::numbers::pi, 1e-11);
    EXPECT_NEAR(last[1], 4 * std::numbers::pi, 1e-9);
    EXPECT_NEAR(last[2], 2.0, 1e-11);
}

TEST(Cli, SampleJsonIsWellFormed) {
    const Result r = run_cli({"sample", "--family", "salkowski", "--m", "2", "--n", "11", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc.at("family"), "salkowski");
    EXPECT_DOUBLE_EQ(doc.at("params").at("m").get<double>(), 2.0);
    EXPECT_EQ(doc.at("rows").size(), 11u);
    EXPECT_EQ(doc.at("columns").size(), 5u);
}

TEST(Cli, SampledFileRoundTripsThroughFrenet) {
    const fs::path csv = tmpdir() / "salkowski.csv";
    const Result s = run_cli({"sample", "--family", "salkowski", "--n", "801", "--out", csv.string()});
    ASSERT_EQ(s.code, 0) << s.err;

    const Curve c = salkowski(1.0);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    for (std::string line; std::getline(in, line);) {
        const auto v = split_numbers(line);
        const SpatialQuaternion p = c(v[0]);
        EXPECT_NEAR(v[2], p.a1, 1e-11);
        EXPECT_NEAR(v[3], p.a2, 1e-11);
        EXPECT_NEAR(v[4], p.a3, 1e-11);
    }

    const Result f = run_cli({"frenet", "--input", csv.string(), "--n", "51"});
    ASSERT_EQ(f.code, 0) << f.err;
    const auto rows = lines_of(f.out);
    ASSERT_EQ(rows.size(), 52u);
    EXPECT_EQ(rows[0].rfind("t,s,speed,tx", 0), 0u);
    const auto mid = split_numbers(rows[26]);
    EXPECT_NEAR(mid[12], 1.0, 1e-4);
}

TEST(Cli, FrenetOnLineHasNoFrame) {
    const Result r = run_cli({"frenet", "--input", "line:vx=1,vy=2", "--n", "11"});
    EXPECT_EQ(r.code, cli::kFrameUndefined);
    EXPECT_NE(r.err.find("undefined"), std::string::npos);
}

TEST(Cli, FrenetFlagsTheAntiSalkowskiInflection) {
    const Result r = run_cli({"frenet", "--family", "anti-salkowski", "--n", "2001"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.err.find("warning"), std::string::npos);
    EXPECT_NE(r.out.find("nan"), std::string::npos);
}

TEST(Cli, ArgumentErrors) {
    EXPECT_EQ(run_cli({}).code, cli::kBadArguments);
    EXPECT_EQ(run_cli({"sample", "--family", "salkowski", "--m", "0"}).code, cli::kBadArguments);
    EXPECT_EQ(run_cli({"sample", "--family", "torus"}).code, cli::kBadArguments);
    EXPECT_EQ(run_cli({"sample", "--family", "circle", "--n", "1"}).code, cli::kBadArguments);
    EXPECT_EQ(run_cli({"sample", "--family", "circle", "--t0", "2", "--t1", "1"}).code, cli::kBadArguments);
    EXPECT_EQ(run_cli({"verify", "nonsense"}).code, cli::kBadArguments);
    EXPECT_EQ(run_cli({"compare", "--a", "circle", "--b", "circle", "--criterion", "length"}).code,
              cli::kBadArguments);
    EXPECT_EQ(run_cli({"--help"}).code, cli::kOk);
}

TEST(Cli, IoErrors) {
    const fs::path bad = tmpdir() / "missing-dir" / "out.csv";
    EXPECT_EQ(run_cli({"sample", "--family", "circle", "--out", bad.string()}).code, cli::kIoError);
    EXPECT_EQ(run_cli({"frenet", "--input", (tmpdir() / "absent.csv").string()}).code, cli::kIoError);
    const fs::path junk = tmpdir() / "junk.csv";
    std::ofstream(junk) << "t,x,y\n0,1,2\n";
    EXPECT_EQ(run_cli({"frenet", "--input", junk.string()}).code, cli::kIoError);
}

TEST(Cli, VerifyChecks) {
    const Result ok = run_cli({"verify", "torsion-law"});
    EXPECT_EQ(ok.code, 0) << ok.out;
    EXPECT_NE(ok.out.find("PASS"), std::string::npos);
    const Result js = run_cli({"verify", "slant-helix", "--json", "--m", "2"});
    ASSERT_EQ(js.code, 0) << js.out;
    const auto doc = nlohmann::json::parse(js.out);
    EXPECT_EQ(doc.at("check"), "slant-helix");
    EXPECT_TRUE(doc.at("pass").get<bool>());
    const Result cor = run_cli({"verify", "corollaries"});
    EXPECT_EQ(cor.code, 0) << cor.out;
}

TEST(Cli, CompareExitCodes) {
    const Result same = run_cli({"compare", "--a", "salkowski:m=1", "--b", "salkowski:m=1,angle=0.7,rx=1,dz=3",
                                 "--criterion", "tangent"});
    EXPECT_EQ(same.code, 0) << same.out << same.err;
    EXPECT_NE(same.out.find("similar"), std::string::npos);
    const Result differ = run_cli({"compare", "--a", "salkowski:m=1", "--b", "anti-salkowski:m=1"});
    EXPECT_EQ(differ.code, cli::kVerificationFailed) << differ.out << differ.err;
    const Result bad = run_cli({"compare", "--a", "line", "--b", "circle"});
    EXPECT_EQ(bad.code, cli::kIncomparable) << bad.err;
    const Result js = run_cli({"compare", "--a", "circle:radius=1", "--b", "circle:radius=2", "--json"});
    ASSERT_EQ(js.code, 0);
    const auto doc = nlohmann::json::parse(js.out);
    EXPECT_EQ(doc.at("special_case"), "plane-curves");
    EXPECT_TRUE(doc.at("verdict").get<bool>());
}

TEST(Cli, ConfigFileSuppliesDefaults) {
    const fs::path cfg = tmpdir() / "qcurve.toml";
    std::ofstream(cfg) << "n = 7\nfamily = \"circle\"\n";
    const Result r = run_cli({"sample", "--config", cfg.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines_of(r.out).size(), 8u);
    const Result flag = run_cli({"sample", "--config", cfg.string(), "--n", "3"});
    EXPECT_EQ(lines_of(flag.out).size(), 4u);
}

TEST(CurveIo, SpecParsing) {
    const cli::CurveSpec s = cli::parse_spec("helix:radius=2, pitch=0.5");
    EXPECT_EQ(s.family, "helix");
    EXPECT_DOUBLE_EQ(s.params.at("radius"), 2.0);
    EXPECT_DOUBLE_EQ(s.params.at("pitch"), 0.5);
    EXPECT_EQ(cli::parse_spec("some/file.csv").family, "file");
    EXPECT_THROW(cli::parse_spec("circle:radius"), ParameterError);
    EXPECT_THROW(cli::parse_spec("circle:radius=abc"), ParameterError);
    EXPECT_THROW(cli::build_curve(cli::parse_spec("circle:pitch=1")), ParameterError);
    const cli::CurveSource a = cli::build_curve(cli::parse_spec("anti-salkowski:m=2"));
    EXPECT_GT(a.regular.lo, 0.0);
    EXPECT_EQ(cli::format_number(std::nan("")), "nan");
    EXPECT_EQ(cli::format_number(0.1), "0.1");
}
