#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "commands.hpp"
#include "json.hpp"
#include "pmob/error.hpp"
#include "pmob/poset_oracle.hpp"
#include "pmob/shape.hpp"
#include "test_support.hpp"

namespace pmob {
namespace {

using test::P;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST(CliMobius, KnownValueOnEveryEngine) {
  for (const char* engine : {"naive", "general", "oscillation", "auto"}) {
    const Result r = run({"mobius", "1", "24153", "--engine", engine});
    EXPECT_EQ(r.code, 0) << engine << r.err;
    EXPECT_EQ(r.out, "6\n") << engine;
  }
}

TEST(CliMobius, NotContainedIsZero) {
  const Result r = run({"mobius", "21", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
  EXPECT_EQ(run({"mobius", "24153", "3142", "--engine", "oscillation"}).out, "0\n");
}

TEST(CliMobius, OscillationTraceLayout) {
  const Result r = run({"mobius", "3142", "315274968", "--engine", "oscillation", "--trace"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 19u);
  EXPECT_EQ(lines[0], "shape        min_k  max_k");
  EXPECT_EQ(lines[1], "21           1      1");
  EXPECT_EQ(lines[2], "Plain        2      4");
  EXPECT_EQ(lines[5], "BothCapped   2      3");
  EXPECT_EQ(lines[7], "shape=21 no possibilities");
  EXPECT_EQ(lines[8], "alpha=3142 r=2 weight=0 mu=1");
  EXPECT_EQ(lines[16], "alpha=24163857 r=1 weight=1 mu=3");
  EXPECT_EQ(lines.back(), "-6");
}

TEST(CliMobius, GeneralTraceSumsToValue) {
  const Result r = run({"mobius", "3142", "315274968", "--engine", "general", "--trace"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::int64_t sum = 0;
  for (const auto& line : lines_of(r.out)) {
    int weight = 0;
    long long mu = 0;
    if (std::sscanf(line.c_str(), "alpha=%*s r=%*d weight=%d mu=%lld", &weight, &mu) == 2) sum -= weight * mu;
  }
  EXPECT_EQ(sum, -6);
  EXPECT_EQ(lines_of(r.out).back(), "-6");
}

TEST(CliMobius, JsonFormat) {
  const Result r = run({"mobius", "1", "24153", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["mu"], 6);
  EXPECT_EQ(doc["pi"], "24153");
}

TEST(CliMobius, ExitCodes) {
  EXPECT_EQ(run({"mobius", "12", "3x1"}).code, cli::kUsage);
  EXPECT_EQ(run({"mobius", "12", "113"}).code, cli::kUsage);
  EXPECT_EQ(run({"mobius", "12"}).code, cli::kUsage);
  EXPECT_EQ(run({"mobius", "1", "2413", "--engine", "fast"}).code, cli::kUsage);
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
  const Result not_osc = run({"mobius", "1", "2143", "--engine", "oscillation"});
  EXPECT_EQ(not_osc.code, cli::kToolError);
  EXPECT_NE(not_osc.err.find("NotAnOscillation"), std::string::npos);
  EXPECT_EQ(run({"mobius", "1", "2413675", "--engine", "naive", "--downset-cap", "6"}).code, cli::kToolError);
}

TEST(CliInterval, Rows) {
  const Result chain = run({"interval", "1", "123"});
  EXPECT_EQ(chain.out, "length,permutation,mu\n1,1,1\n2,12,-1\n3,123,0\n");
  EXPECT_EQ(run({"interval", "21", "21"}).out, "length,permutation,mu\n2,21,1\n");

  const Result r = run({"interval", "1", "24153"});
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 15u);
  std::int64_t total = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) total += std::stoll(lines[i].substr(lines[i].rfind(',') + 1));
  EXPECT_EQ(total, 0);
  EXPECT_EQ(lines.back(), "5,24153,6");
  EXPECT_EQ(run({"interval", "1", "24153"}).out, r.out);
}

TEST(CliDownset, MatchesOracle) {
  const Result r = run({"downset", "24153"});
  const auto lines = lines_of(r.out);
  EXPECT_EQ(lines.size(), 1 + layer_total(downset(P("24153"))));
  EXPECT_EQ(lines[1], "0,");
  const auto doc = nlohmann::json::parse(run({"downset", "2413", "--format", "json"}).out);
  EXPECT_EQ(doc["layers"][4].size(), 1u);
  EXPECT_EQ(doc["layers"][3].size(), 4u);
  EXPECT_EQ(doc["layers"][2].size(), 2u);
}

TEST(CliSeries, CsvRowsAndFormat) {
  const Result r = run({"series", "--n-max", "100"});
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 1 + 2 * 97u);
  EXPECT_EQ(lines[0], "n,kind,mu,abs,ratio,class_mod_12");
  EXPECT_EQ(lines[1], "4,W,-3,3,0.750000000,4");
  EXPECT_EQ(lines[2], "4,M,-3,3,0.750000000,4");
  EXPECT_EQ(lines[3], "5,W,6,6,1.000000000,5");
  EXPECT_EQ(run({"series", "--n-max", "3"}).code, cli::kUsage);
}

TEST(CliSeries, SeriesMatchesOracle) {
  const auto lines = lines_of(run({"series", "--n-max", "10"}).out);
  ASSERT_EQ(lines.size(), 15u);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    std::string n, kind, mu;
    std::getline(row, n, ',');
    std::getline(row, kind, ',');
    std::getline(row, mu, ',');
    const OscillationId id{kind == "W" ? OscKind::W : OscKind::M, std::stoll(n)};
    EXPECT_EQ(std::stoll(mu), mobius_naive(P("1"), oscillation(id))) << lines[i];
  }
}

TEST(CliSeries, LogLogAndOutFile) {
  const Result r = run({"series", "--n-max", "100", "--loglog"});
  const auto lines = lines_of(r.out);
  EXPECT_EQ(lines[0], "log_n,log_abs");
  EXPECT_EQ(lines.size(), 98u);

  const auto path = std::filesystem::temp_directory_path() / "pmob_cli_test_series.csv";
  const Result to_file = run({"series", "--n-max", "50", "--out", path.string()});
  EXPECT_EQ(to_file.code, 0);
  EXPECT_TRUE(to_file.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), run({"series", "--n-max", "50"}).out);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"series", "--n-max", "50", "--out", "/nonexistent-dir/x.csv"}).code, cli::kToolError);
}

TEST(CliCheck, SignAndBoundAreClean) {
  for (const char* suite : {"sign", "bound"}) {
    const Result r = run({"check", "--suite", suite, "--n-max", "3000"});
    EXPECT_EQ(r.code, cli::kOk) << suite;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc["violations"].empty());
    EXPECT_EQ(doc["range"][1], 3000);
  }
}

TEST(CliCheck, JelinekReportsViolationsWithExitThree) {
  const Result stated = run({"check", "--suite", "jelinek", "--range", "51..400"});
  EXPECT_EQ(stated.code, cli::kViolations);
  const auto doc = nlohmann::json::parse(stated.out);
  ASSERT_FALSE(doc["violations"].empty());
  for (const auto& v : doc["violations"]) {
    EXPECT_TRUE(v.contains("n") && v.contains("rule") && v.contains("expected") && v.contains("actual"));
  }
  const Result plus = run({"check", "--suite", "jelinek", "--range", "51..400", "--jelinek-rules", "plus"});
  EXPECT_EQ(plus.code, cli::kOk);
  EXPECT_EQ(run({"check", "--suite", "jelinek", "--range", "40..400"}).code, cli::kToolError);
  EXPECT_EQ(run({"check", "--suite", "jelinek", "--range", "51-400"}).code, cli::kUsage);
}

TEST(CliCheck, BandingReport) {
  const Result r = run({"check", "--suite", "banding", "--range", "1000..3000"});
  EXPECT_EQ(r.code, cli::kOk) << r.out;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["classes"].size(), 12u);
  for (const char* name : {"a", "b", "c", "d", "e", "f", "g"}) EXPECT_TRUE(doc["constants"].contains(name));
  EXPECT_TRUE(doc["ordered"].get<bool>());
  EXPECT_EQ(r.out, run({"check", "--suite", "banding", "--range", "1000..3000"}).out);
}

TEST(CliCheck, Crosscheck) {
  const Result r = run({"check", "--suite", "crosscheck", "--max-len", "6"});
  EXPECT_EQ(r.code, cli::kOk) << r.out;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_GT(doc["pairs"].get<std::int64_t>(), 0);
  EXPECT_TRUE(doc["violations"].empty());
}

TEST(CliEnvironment, CacheBytes) {
  ::setenv("MOBIUS_CACHE_BYTES", "0", 1);
  EXPECT_EQ(run({"mobius", "1", "315274968"}).out, run({"mobius", "1", "315274968", "--engine", "oscillation"}).out);
  ::setenv("MOBIUS_CACHE_BYTES", "lots", 1);
  EXPECT_EQ(run({"mobius", "1", "24153"}).code, cli::kUsage);
  ::unsetenv("MOBIUS_CACHE_BYTES");
}

TEST(CliHelpers, ParseRange) {
  EXPECT_EQ(cli::parse_range("51..2000"), (std::pair<std::int64_t, std::int64_t>{51, 2000}));
  EXPECT_THROW(cli::parse_range("51.."), Error);
  EXPECT_THROW(cli::parse_range("x..3"), Error);
  EXPECT_EQ(cli::format_permutation(P("315264")), "315264");
  EXPECT_EQ(cli::format_permutation(Permutation::identity(10)), "1 2 3 4 5 6 7 8 9 10");
}

}  // namespace
}  // namespace pmob
