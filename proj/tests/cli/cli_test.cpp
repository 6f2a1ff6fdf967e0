// Copyright 2026 The qdiff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "qdiff_cli/commands.hpp"

namespace qdiff::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  args.insert(args.begin(), "qdiff");
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::ifstream in(p);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qdiff_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string sub(const char* name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, BasisCheckPasses) {
  const Result r = invoke({"basis-check", "--n", "16", "--out", sub("bc")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = read_csv(dir_ / "bc" / "basis_check.csv");
  ASSERT_GT(rows.size(), 5u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"check", "value", "tolerance", "status"}));
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i].back(), "PASS") << rows[i][0];
  const auto spectrum = read_csv(dir_ / "bc" / "spectrum.csv");
  EXPECT_EQ(spectrum.size(), 17u);
  const json m = json::parse(slurp(dir_ / "bc" / "manifest.json"));
  EXPECT_EQ(m["status"], "ok");
  EXPECT_EQ(m["command"], "basis-check");
  EXPECT_EQ(m["config"]["n"], 16);
}

TEST_F(Cli, UsageErrorsExitTwoWithOneLine) {
  const Result r = invoke({"basis-check", "--n", "1", "--out", sub("bad")});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error: code=", 0), 0u) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);

  EXPECT_EQ(invoke({"simulate", "--model", "navier"}).code, 2);
  EXPECT_EQ(invoke({"blob", "--point", "1,1,1", "--out", sub("p")}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"simulate", "--h", "0.1", "--dt", "0.1"}).code, 2);
}

TEST_F(Cli, RuntimeErrorsExitOne) {
  EXPECT_EQ(invoke({"render", "--input", sub("missing.qcoef"), "--out", sub("x.ppm")}).code, 2);
  {
    std::ofstream bad(dir_ / "bad.qcoef");
    bad << "format=qcoef-v1\nlmax=3\nend\n";
  }
  const Result r = invoke({"render", "--input", sub("bad.qcoef"), "--out", sub("x.ppm")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("code=format"), std::string::npos) << r.err;
}

TEST_F(Cli, SimulateZeroTimeWritesInitialState) {
  const Result r = invoke({"simulate", "--n", "8", "--t-final", "0", "--save-states", "--width", "64", "--out", sub("s0")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = read_csv(dir_ / "s0" / "diagnostics.csv");
  EXPECT_EQ(rows.size(), 2u);
  for (const char* f : {"final_w.qmat", "states.qmat", "final_vorticity.qcoef", "vorticity.ppm", "vorticity.ppm.range"})
    EXPECT_TRUE(fs::exists(dir_ / "s0" / f)) << f;
}

TEST_F(Cli, SimulateConservesCasimirs) {
  const Result r = invoke({"simulate", "--n", "12", "--t-final", "2", "--h", "0.1", "--width", "64", "--out", sub("s")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = read_csv(dir_ / "s" / "diagnostics.csv");
  ASSERT_EQ(rows.size(), 22u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LE(std::stod(rows[i][6]), 1e-8);
    EXPECT_LE(std::stod(rows[i][7]), 1e-8);
  }
  const json m = json::parse(slurp(dir_ / "s" / "manifest.json"));
  EXPECT_EQ(m["results"]["steps"], 20.0);
}

TEST_F(Cli, BlobDensityLandsNearExactFlow) {
  const Result r = invoke({"blob", "--n", "16", "--mode", "density", "--width", "64", "--out", sub("b")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json m = json::parse(slurp(dir_ / "b" / "manifest.json"));
  EXPECT_LE(m["results"]["exact_distance"].get<double>(), 0.15);
  EXPECT_TRUE(fs::exists(dir_ / "b" / "track.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "b" / "blob.ppm"));
}

TEST_F(Cli, BlobCenterModeMovesNorth) {
  const Result r = invoke({"blob", "--n", "16", "--mode", "center", "--steps", "50", "--width", "64", "--out", sub("c")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = read_csv(dir_ / "c" / "track.csv");
  ASSERT_EQ(rows.size(), 52u);
  EXPECT_GT(std::stod(rows.back()[4]), std::stod(rows[1][4]));
}

TEST_F(Cli, DeformAtTimeZeroIsIdentity) {
  const Result r = invoke({"deform", "--refinements", "2", "--t-final", "0", "--n", "8", "--width", "64", "--out", sub("d")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json m = json::parse(slurp(dir_ / "d" / "manifest.json"));
  EXPECT_NEAR(m["results"]["south_min_ratio"].get<double>(), 1.0, 1e-9);
  EXPECT_NEAR(m["results"]["north_max_ratio"].get<double>(), 1.0, 1e-9);
  for (const char* f : {"mesh.qmesh", "ff.qmat", "ff.qcoef", "ff.ppm"}) EXPECT_TRUE(fs::exists(dir_ / "d" / f)) << f;
}

TEST_F(Cli, RenderRoundTrip) {
  ASSERT_EQ(invoke({"simulate", "--n", "8", "--t-final", "0", "--width", "64", "--out", sub("s")}).code, 0);
  const Result r = invoke({"render", "--input", sub("s/final_vorticity.qcoef"), "--out", sub("r.ppm"), "--width", "64"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(dir_ / "r.ppm"), slurp(dir_ / "s" / "vorticity.ppm"));
}

TEST_F(Cli, OutputsAreDeterministic) {
  for (const char* d : {"one", "two"}) {
    ASSERT_EQ(invoke({"simulate", "--n", "10", "--t-final", "1", "--h", "0.1", "--save-states", "--width", "64",
                      "--out", sub(d)})
                  .code,
              0);
  }
  for (const char* f : {"final_w.qmat", "states.qmat", "diagnostics.csv", "vorticity.ppm"})
    EXPECT_EQ(slurp(dir_ / "one" / f), slurp(dir_ / "two" / f)) << f;
}

TEST_F(Cli, EigenbasisCacheIsReused) {
  const std::string cache = sub("eig.qmat");
  ASSERT_EQ(invoke({"simulate", "--n", "8", "--t-final", "0.2", "--width", "64", "--cache-eigenbasis", cache, "--out", sub("a")}).code, 0);
  ASSERT_TRUE(fs::exists(cache));
  ASSERT_EQ(invoke({"simulate", "--n", "8", "--t-final", "0.2", "--width", "64", "--cache-eigenbasis", cache, "--out", sub("b")}).code, 0);
  EXPECT_EQ(slurp(dir_ / "a" / "final_w.qmat"), slurp(dir_ / "b" / "final_w.qmat"));
  EXPECT_EQ(invoke({"simulate", "--n", "9", "--t-final", "0.2", "--cache-eigenbasis", cache, "--out", sub("c")}).code, 1);
}

}  // namespace
}  // namespace qdiff::cli
