#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "framedual/cli.hpp"
#include "framedual/matrix_io.hpp"

using namespace framedual;
using nlohmann::json;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Invocation r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("framedual_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
    write("ex2x3.csv", "1,-1,0\n1,2,-1\n");
    write("spectral.csv", "# field=rational\n9/5,-6/25,-8/25\n12/5,9/50,6/25\n");
    write("onb.csv", "1,0\n0,1\n");
    write("deficient.csv", "1,2,3\n2,4,6\n");
    write("garbage.csv", "1,2\nx,y\n");
    write("wide.csv", "1,0,0,1,2\n0,1,0,3,1\n0,0,1,1,5\n");
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, AnalyzeReportsBoundsAndDimension) {
  const json j = run_json({"analyze", path("ex2x3.csv")});
  const json& r = j["results"];
  EXPECT_EQ(r["n"], 2);
  EXPECT_EQ(r["dual_set_dimension"], 2);
  EXPECT_NEAR(r["frame_bounds"]["lower"].get<double>(), 4 - std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(r["frame_bounds"]["upper"].get<double>(), 4 + std::sqrt(5.0), 1e-12);
  EXPECT_EQ(j["schema_version"], "1.0");
  EXPECT_EQ(j["inputs"][0]["sha256"].get<std::string>().size(), 64u);

  const json onb = run_json({"analyze", path("onb.csv")})["results"];
  EXPECT_EQ(onb["dual_set_dimension"], 0);
  EXPECT_EQ(onb["frame_bounds"]["lower"], 1.0);
  EXPECT_EQ(onb["tight"], true);
}

TEST_F(CliTest, AnalyzeWritesCanonicalDual) {
  run_json({"analyze", path("ex2x3.csv"), "-o", path("dual.csv")});
  const Matrix d = read_matrix_file(path("dual.csv"));
  EXPECT_EQ(d.rational()(0, 0), Rational(7) / Rational(11));
}

TEST_F(CliTest, InputErrorsExitTwo) {
  const Invocation deficient = run({"analyze", path("deficient.csv")});
  EXPECT_EQ(deficient.code, 2);
  EXPECT_NE(deficient.err.find("not a frame"), std::string::npos);
  EXPECT_EQ(run({"analyze", path("garbage.csv")}).code, 2);
  EXPECT_EQ(run({"analyze", path("missing.csv")}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, SparsestAllOnExample) {
  const json r = run_json({"sparsest", path("ex2x3.csv"), "--all", "--exact"})["results"];
  EXPECT_EQ(r["sparsity"], 3);
  EXPECT_EQ(r["count"], 3);
  EXPECT_EQ(r["exact_path"], true);
  EXPECT_EQ(r["duals"][0]["entries"], json::parse(R"([["0","-1","-2"],["0","0","-1"]])"));
  EXPECT_EQ(r["certificate"][0]["support"].size(), 2u);
  EXPECT_EQ(r["certificate_verified"], true);
}

TEST_F(CliTest, TightPrescribeFeasible) {
  const json t = run_json({"tight", path("spectral.csv")})["results"];
  EXPECT_NEAR(t["sigma_psi"].get<double>(), 2.0, 1e-12);
  EXPECT_NEAR(std::abs(t["s"][0].get<double>()), std::sqrt(35.0) / 3, 1e-12);
  EXPECT_EQ(t["case"], "Exact2nMinus1");

  const json p = run_json({"prescribe", path("spectral.csv"), "--picks", "1=1"})["results"];
  EXPECT_NEAR(p["measured_spectrum"][0].get<double>(), 2.0, 1e-12);
  EXPECT_NEAR(p["measured_spectrum"][1].get<double>(), 1.0, 1e-12);

  const json f = run_json({"feasible", path("spectral.csv"), "--spectrum", "3,0.3333333333"})["results"];
  EXPECT_EQ(f["feasible"], true);
  EXPECT_EQ(f["constructive"], true);
}

TEST_F(CliTest, SpectralExitCodes) {
  EXPECT_EQ(run({"tight", path("spectral.csv"), "--sigma", "3"}).code, 5);
  EXPECT_EQ(run({"prescribe", path("spectral.csv"), "--picks", "1=0.1"}).code, 5);
  EXPECT_EQ(run({"prescribe", path("spectral.csv"), "--picks", "1=1,2=3"}).code, 6);
  EXPECT_EQ(run({"feasible", path("spectral.csv"), "--spectrum", "0.1,3"}).code, 6);
  EXPECT_EQ(run({"feasible", path("spectral.csv"), "--spectrum", "3,x"}).code, 6);
  write("narrow.csv", "3,0,0,0\n0,2,0,0\n0,0,1,1\n");
  EXPECT_EQ(run({"tight", path("narrow.csv")}).code, 4);
}

TEST_F(CliTest, TetrisCommand) {
  const json r = run_json({"tetris", "--eigs", "2.5,2.5,2", "-o", path("f.csv"), "--dual", path("d.csv")})["results"];
  EXPECT_EQ(r["m"], 7);
  EXPECT_EQ(r["k_hat"], 3);
  EXPECT_EQ(r["sparsity"], 3);
  EXPECT_EQ(r["dual_check"]["is_dual"], true);
  EXPECT_EQ(read_matrix_file(path("f.csv")).cols(), 7);
  const json two = run_json({"tetris", "--eigs", "2,2"})["results"];
  EXPECT_EQ(two["frame"]["entries"], json::parse(R"([["1","1","0","0"],["0","0","1","1"]])"));
  EXPECT_EQ(run({"tetris", "--eigs", "1.5,2"}).code, 7);
}

TEST_F(CliTest, RandomAndSurface) {
  const json r = run_json({"random", "-n", "3", "-m", "5", "--trials", "100", "--seed", "7"})["results"];
  EXPECT_EQ(r["count_sparsity_n2"], 100);
  EXPECT_EQ(run({"random", "-n", "5", "-m", "9"}).code, 3);

  const Invocation csv = run({"surface", path("spectral.csv"), "--step", "0.5"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "s1,s2,lambda1,lambda2");
  const json s = run_json({"surface", path("spectral.csv"), "-o", path("s.csv")})["results"];
  EXPECT_EQ(s["grid"]["points"], 121 * 121);
  EXPECT_NEAR(std::abs(s["min_gap"]["s1"].get<double>()), std::sqrt(35.0) / 3, 0.05);
  EXPECT_EQ(run({"surface", path("wide.csv")}).code, 2);
}

TEST_F(CliTest, GenerateRoundTripsThroughAnalyze) {
  const json g = run_json({"generate", "vandermonde", "--xs", "1,2,3,4,5", "--ys", "0.5,1,1.7", "-o", path("v.csv")});
  EXPECT_EQ(g["results"]["matrix"]["rows"], 3);
  const json a = run_json({"analyze", path("v.csv")});
  EXPECT_EQ(a["results"]["m"], 5);
  const json sp = run_json({"sparsest", path("v.csv")})["results"];
  EXPECT_EQ(sp["sparsity"], 9);

  const json dft = run_json({"generate", "dft", "-n", "3", "-m", "4"})["results"];
  EXPECT_EQ(dft["warnings"].size(), 1u);
  EXPECT_EQ(run({"generate", "vandermonde", "--xs", "1,1", "--ys", "1"}).code, 2);
  EXPECT_EQ(run({"generate", "gabor", "--window", "0,0"}).code, 2);
  const Invocation raw = run({"generate", "gabor", "--window", "1+i,0.5"});
  EXPECT_EQ(raw.code, 0);
  EXPECT_EQ(parse_matrix(raw.out).cols(), 4);
}

TEST_F(CliTest, NudgeCommand) {
  write("spiky.csv", "1,1,2,0\n0,1,3,1\n");
  const json r = run_json({"nudge", path("spiky.csv")})["results"];
  EXPECT_EQ(r["sparsity"], 4);
  EXPECT_NE(r["t"], "0");
}

TEST_F(CliTest, TextOutputFlattensResults) {
  const Invocation r = run({"analyze", path("ex2x3.csv")});
  EXPECT_NE(r.out.find("frame_bounds.lower: "), std::string::npos);
  EXPECT_NE(r.out.find("dual_set_dimension: 2"), std::string::npos);
}

TEST_F(CliTest, DeterministicJsonApartFromTiming) {
  auto strip = [](json j) {
    j.erase("timing");
    return j.dump();
  };
  EXPECT_EQ(strip(run_json({"random", "-n", "2", "-m", "4", "--trials", "5", "--seed", "3"})),
            strip(run_json({"random", "-n", "2", "-m", "4", "--trials", "5", "--seed", "3"})));
  EXPECT_EQ(strip(run_json({"sparsest", path("ex2x3.csv"), "--all"})),
            strip(run_json({"sparsest", path("ex2x3.csv"), "--all"})));
}
