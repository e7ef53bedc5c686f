// Copyright 2026 The tricount Authors
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

// End-to-end checks of the command-line tool.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"
#include "tricount/model_fit.hpp"
#include "tricount/report.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("tricount_cli_" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  RunResult run(const std::string& args) {
    const auto err_path = dir_ / "stderr.txt";
    const std::string cmd = std::string("\"") + TRICOUNT_CLI + "\" " + args + " 2>\"" + err_path.string() + "\"";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed");
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out, slurp(err_path)};
  }

  fs::path write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

  static std::string data(const std::string& name) {
    return std::string("\"") + TRICOUNT_TEST_DATA + "/" + name + "\"";
  }

  std::string soa_csv(std::initializer_list<double> grid) {
    std::vector<tricount::MeasurementRecord> rows;
    for (double ne : grid) {
      tricount::MeasurementRecord r;
      r.graph_name = "synthetic";
      r.algorithm = "lu";
      r.n_e = static_cast<std::uint64_t>(ne);
      r.nnz = 2 * r.n_e;
      r.trials = 1;
      r.time_s_median = r.time_s_min = std::pow(ne / 1e8, 4.0 / 3.0);
      r.rate_eps = ne / r.time_s_median;
      rows.push_back(r);
    }
    return tricount::write_measurement_csv(rows);
  }

  static std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
  }

  fs::path dir_;
};

TEST_F(CliTest, CountFig1WithOneKernel) {
  auto r = run("count --input " + data("fig1.tsv") + " --algo a2a");
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("\ntriangles: 2\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("edges: 5"), std::string::npos);
}

TEST_F(CliTest, CountAllKernelsAgree) {
  auto r = run("count --input " + data("fig1.tsv"));
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(count_of(r.out, "triangles: 2"), 5u) << r.out;
  for (const char* algo : {"ae", "a2a", "lu", "oracle"}) {
    EXPECT_NE(r.out.find(std::string("algorithm: ") + algo + " "), std::string::npos) << algo;
  }
}

TEST_F(CliTest, MalformedInputReportsLine) {
  auto r = run("count --input " + data("malformed.tsv"));
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST_F(CliTest, UnknownAlgorithmFails) {
  auto r = run("count --input " + data("fig1.tsv") + " --algo nope");
  EXPECT_NE(r.status, 0);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, FitRecoversStateOfTheArt) {
  const auto csv = write("soa.csv", soa_csv({1e4, 1e5, 1e6, 1e7, 1e8, 1e9}));
  auto r = run("fit --in \"" + csv.string() + "\"");
  ASSERT_EQ(r.status, 0) << r.err;
  const auto json_end = r.out.rfind('}');
  ASSERT_NE(json_end, std::string::npos);
  const auto fit = tricount::fit_from_json(nlohmann::json::parse(r.out.substr(0, json_end + 1)));
  EXPECT_NEAR(fit.beta, 4.0 / 3.0, 1e-9);
  EXPECT_LT(std::abs(fit.n1 - 1e8) / 1e8, 1e-6);
}

TEST_F(CliTest, FitNeedsTwoRows) {
  const auto csv = write("one.csv", soa_csv({1e6}));
  auto r = run("fit --in \"" + csv.string() + "\"");
  EXPECT_NE(r.status, 0);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, FitMinNeFilter) {
  const auto csv = write("soa.csv", soa_csv({1e4, 1e5, 1e6, 1e7}));
  const auto out = dir_ / "fit.json";
  auto r = run("fit --in \"" + csv.string() + "\" --min-ne 1e5 --out \"" + out.string() + "\"");
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(j.at("num_points").get<int>(), 3);
  EXPECT_NE(run("fit --in \"" + csv.string() + "\" --min-ne 1e7").status, 0);
}

TEST_F(CliTest, CompareReferenceTable) {
  auto r = run("compare --grid 1e4:1e11:8");
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(count_of(r.out, "# series: "), 12u);
  auto one = run("compare --grid 1e6:1e6:1");
  ASSERT_EQ(one.status, 0) << one.err;
  EXPECT_EQ(count_of(one.out, "# series: "), 12u);
  EXPECT_EQ(count_of(one.out, "\n1e+06\t"), 12u) << one.out;
}

TEST_F(CliTest, CompareWithFitOnly) {
  const auto json = write("fit.json", R"({"alpha": 1e-8, "beta": 1.0, "n1": 1e8})");
  auto r = run("compare --no-refs --fit \"" + json.string() + "\" --grid 1e4:1e8:5");
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(count_of(r.out, "# series: "), 1u);
  EXPECT_NE(r.out.find("kind=fit"), std::string::npos);
}

TEST_F(CliTest, GenerateIsReproducible) {
  const std::string args = "generate --kind er --n 300 --p 0.05 --seed 17";
  auto a = run(args);
  auto b = run(args);
  ASSERT_EQ(a.status, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.err.find("17"), std::string::npos) << a.err;
  EXPECT_NE(run("generate --kind er --n 300 --p 0.05 --seed 18").out, a.out);
}

TEST_F(CliTest, GenerateKroneckerThenCount) {
  const auto out = dir_ / "kron2.tsv";
  auto g = run("generate --kind kronecker --seed-graph " + data("fig1.tsv") + " --power 2 --out \"" +
               out.string() + "\"");
  ASSERT_EQ(g.status, 0) << g.err;
  auto c = run("count --input \"" + out.string() + "\" --algo lu");
  ASSERT_EQ(c.status, 0) << c.err;
  EXPECT_NE(c.out.find("edges: 50"), std::string::npos) << c.out;
  EXPECT_NE(c.out.find("\ntriangles: 24\n"), std::string::npos) << c.out;
}

TEST_F(CliTest, BenchFeedsFit) {
  const auto csv = dir_ / "sweep.csv";
  auto s = run("sweep --gen er:200:0.05:1 --gen er:400:0.05:2 --gen er:800:0.05:3 --algos lu,a2a --verify --out \"" +
               csv.string() + "\"");
  ASSERT_EQ(s.status, 0) << s.err;
  const auto rows = tricount::read_measurement_csv(slurp(csv));
  ASSERT_EQ(rows.size(), 6u);
  for (std::size_t i = 2; i < rows.size(); ++i) EXPECT_GT(rows[i].n_e, rows[i - 2].n_e);
  auto f = run("fit --in \"" + csv.string() + "\" --algo lu");
  EXPECT_EQ(f.status, 0) << f.err;
  EXPECT_NE(f.out.find("\"num_points\": 3"), std::string::npos) << f.out;

  auto b = run("bench --input " + data("fig1.tsv") + " --algo ae --trials 3");
  ASSERT_EQ(b.status, 0) << b.err;
  const auto one = tricount::read_measurement_csv(b.out);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].n_t, 2u);
  EXPECT_EQ(one[0].trials, 3u);
}

TEST_F(CliTest, SweepReportsFailures) {
  auto r = run("sweep --gen kron:/nonexistent/seed.tsv:2 --algos lu");
  EXPECT_NE(r.status, 0);
  EXPECT_FALSE(r.err.empty());
}

}  // namespace
