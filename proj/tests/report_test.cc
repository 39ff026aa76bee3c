// Copyright 2026 The pmcover Authors.
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

#include "pmcover/report.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "testing.h"

namespace pmcover {
namespace {

namespace fs = std::filesystem;

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = (fs::temp_directory_path() /
             ("pmcover_report_test_" + std::to_string(::getpid()) + "_" +
              std::to_string(counter++) + ".g6"))
                .string();
    std::ofstream(path_) << contents;
  }
  ~TempFile() { fs::remove(path_); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

std::string G6(FixtureKind kind, int k = 0) { return EncodeGraph6(Fixture(kind, k)); }

// Drops every "timing_ms" member, recursively.
nlohmann::ordered_json WithoutTiming(nlohmann::ordered_json j) {
  if (j.is_object()) {
    j.erase("timing_ms");
    for (auto& [key, value] : j.items()) value = WithoutTiming(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = WithoutTiming(value);
  }
  return j;
}

AnalyzeOptions Options(int t, bool exact) {
  AnalyzeOptions options;
  options.t = t;
  options.exact = exact;
  return options;
}

TEST(AnalyzeTest, PetersenExact) {
  const RunReport r = AnalyzeGraph(Fixture(FixtureKind::kPetersen), "PETERSEN", Options(5, true));
  ASSERT_FALSE(r.error.has_value());
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.n, 10);
  EXPECT_EQ(r.num_edges, 15);
  EXPECT_EQ(r.pm_count, 6u);
  EXPECT_EQ(r.greedy_coverage, (std::vector<int>{5, 9, 12, 14, 15}));
  ASSERT_EQ(r.steps.size(), 5u);
  EXPECT_EQ(r.steps[4].exact_fraction, Rational(1));
  EXPECT_EQ(r.steps[1].exact_fraction, Rational(3, 5));
  EXPECT_TRUE(r.corollary_cover);
  EXPECT_EQ(r.corollary_required, 14);
  EXPECT_EQ(r.cover_number, 5);
}

TEST(AnalyzeTest, K4CoverNumber) {
  const RunReport r = AnalyzeGraph(Fixture(FixtureKind::kK4), "K4", Options(5, true));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.cover_number, 3);
}

TEST(AnalyzeTest, ShortHorizonStillRunsFiveGreedySteps) {
  const RunReport r = AnalyzeGraph(Fixture(FixtureKind::kPetersen), "P", Options(2, false));
  EXPECT_EQ(r.steps.size(), 2u);
  EXPECT_EQ(r.greedy_coverage.size(), 5u);
  EXPECT_FALSE(r.steps[0].exact_fraction.has_value());
  EXPECT_FALSE(r.cover_number.has_value());
}

TEST(AnalyzeTest, ErrorsAreCaptured) {
  const RunReport bridged =
      AnalyzeGraph6(EncodeGraph6(testing::BridgedCubicGraph()), "bridged", Options(5, false));
  ASSERT_TRUE(bridged.error.has_value());
  EXPECT_EQ(bridged.error->code, "NotBridgeless");
  EXPECT_FALSE(bridged.ok());

  const RunReport malformed = AnalyzeGraph6("not graph6!", "bad", Options(5, false));
  ASSERT_TRUE(malformed.error.has_value());
  EXPECT_EQ(malformed.error->code, "MalformedGraph6");

  AnalyzeOptions capped = Options(3, true);
  capped.limits.pm_cap = 10;
  const RunReport flower = AnalyzeGraph(Fixture(FixtureKind::kFlower, 5), "F5", capped);
  EXPECT_FALSE(flower.error.has_value());
  ASSERT_TRUE(flower.exact_error.has_value());
  EXPECT_EQ(flower.exact_error->code, "TooManyMatchings");
  EXPECT_TRUE(flower.ok());
}

TEST(JsonTest, FractionsAreStrings) {
  const RunReport r = AnalyzeGraph(Fixture(FixtureKind::kPetersen), "PETERSEN", Options(5, true));
  const auto j = ToJson(r);
  EXPECT_EQ(j["graph_id"], "PETERSEN");
  EXPECT_EQ(j["graph6"], G6(FixtureKind::kPetersen));
  ASSERT_EQ(j["steps"].size(), 5u);
  EXPECT_EQ(j["steps"][0]["greedy_fraction"], "1/3");
  EXPECT_EQ(j["steps"][2]["bound"], "27/35");
  EXPECT_EQ(j["steps"][4]["exact_fraction"], "1/1");
  EXPECT_EQ(j["cover_number"], 5);
  EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(JsonTest, ErrorReportShape) {
  const RunReport r = AnalyzeGraph6("???", "x:1", Options(5, false));
  const auto j = ToJson(r);
  EXPECT_EQ(j["graph_id"], "x:1");
  EXPECT_EQ(j["error"]["code"], "MalformedGraph6");
  EXPECT_FALSE(j["ok"].get<bool>());
  EXPECT_FALSE(j.contains("steps"));
}

TEST(JsonTest, BoundsRows) {
  const auto j = ToJson(BoundsTable(5));
  ASSERT_EQ(j.size(), 5u);
  EXPECT_EQ(j[4]["a"], "215/231");
  EXPECT_EQ(j[4]["inverse_gap"], "231/16");
  EXPECT_EQ(j[4]["threshold"], "14");
  EXPECT_TRUE(j[4]["size_bound_check"].get<bool>());
  EXPECT_FALSE(j[0]["size_bound_check"].get<bool>());
}

TEST(JsonTest, DeterministicModuloTiming) {
  const auto a = ToJson(AnalyzeGraph(Fixture(FixtureKind::kFlower, 5), "F5", Options(5, true)));
  const auto b = ToJson(AnalyzeGraph(Fixture(FixtureKind::kFlower, 5), "F5", Options(5, true)));
  EXPECT_EQ(WithoutTiming(a).dump(), WithoutTiming(b).dump());
}

TEST(ReadGraph6FileTest, HeaderCommentsAndBlankLines) {
  const TempFile file(">>graph6<<" + G6(FixtureKind::kK4) + "\n\n>> comment\n" +
                      G6(FixtureKind::kPetersen) + "\r\n");
  const auto lines = ReadGraph6File(file.path());
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].text, G6(FixtureKind::kK4));
  EXPECT_EQ(lines[0].id, file.path() + ":1");
  EXPECT_EQ(lines[1].text, G6(FixtureKind::kPetersen));
  EXPECT_EQ(lines[1].id, file.path() + ":4");
}

TEST(ReadGraph6FileTest, MissingFileThrows) {
  EXPECT_THROW(ReadGraph6File("/nonexistent/pmcover.g6"), std::runtime_error);
}

TEST(BatchTest, EmptyFile) {
  const TempFile file("");
  const BatchResult result = RunBatch(ReadGraph6File(file.path()), Options(5, false), 2);
  EXPECT_TRUE(result.reports.empty());
  EXPECT_EQ(result.summary.graphs, 0);
  EXPECT_EQ(result.summary.errors, 0);
  EXPECT_EQ(result.summary.violations, 0);
}

TEST(BatchTest, CorpusRunHasNoViolations) {
  const TempFile file(G6(FixtureKind::kPetersen) + "\n" + G6(FixtureKind::kFlower, 5) + "\n" +
                      G6(FixtureKind::kFlower, 7) + "\n");
  const BatchResult result = RunBatch(ReadGraph6File(file.path()), Options(5, false), 1);
  ASSERT_EQ(result.reports.size(), 3u);
  EXPECT_EQ(result.summary.graphs, 3);
  EXPECT_EQ(result.summary.bound_met, 3);
  EXPECT_EQ(result.summary.violations, 0);
  EXPECT_EQ(result.summary.errors, 0);
  std::ostringstream out;
  PrintSummary(out, result.summary);
  EXPECT_NE(out.str().find("violations: 0"), std::string::npos);
}

TEST(BatchTest, MalformedLineIsIsolated) {
  const TempFile file(G6(FixtureKind::kK4) + "\n@@@\n" + G6(FixtureKind::kPetersen) + "\n");
  const BatchResult result = RunBatch(ReadGraph6File(file.path()), Options(5, false), 2);
  ASSERT_EQ(result.reports.size(), 3u);
  EXPECT_FALSE(result.reports[0].error.has_value());
  ASSERT_TRUE(result.reports[1].error.has_value());
  EXPECT_EQ(result.reports[1].graph_id, file.path() + ":2");
  EXPECT_FALSE(result.reports[2].error.has_value());
  EXPECT_EQ(result.summary.errors, 1);
  EXPECT_EQ(result.summary.violations, 0);
}

TEST(BatchTest, ParallelMatchesSequential) {
  std::string contents;
  for (const auto& [name, g] : testing::Corpus()) contents += EncodeGraph6(g) + "\n";
  contents += "bad\n";
  contents += EncodeGraph6(testing::BridgedCubicGraph()) + "\n";
  const TempFile file(contents);
  const auto lines = ReadGraph6File(file.path());
  const auto one = ToJson(RunBatch(lines, Options(4, true), 1));
  const auto four = ToJson(RunBatch(lines, Options(4, true), 4));
  EXPECT_EQ(WithoutTiming(one).dump(), WithoutTiming(four).dump());
  EXPECT_EQ(one["summary"]["errors"], 2);
}

TEST(PrintTest, HumanTables) {
  std::ostringstream report;
  PrintReport(report, AnalyzeGraph(Fixture(FixtureKind::kK4), "K4", Options(3, false)));
  EXPECT_NE(report.str().find("K4"), std::string::npos);
  std::ostringstream table;
  PrintBoundsTable(table, BoundsTable(5));
  EXPECT_NE(table.str().find("215/231"), std::string::npos);
  EXPECT_NE(table.str().find("231/16"), std::string::npos);
}

}  // namespace
}  // namespace pmcover
