#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"
#include "schema_check.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GROUPRING_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string tmp_path(const std::string& name) { return ::testing::TempDir() + name; }

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST(Cli, AnalyzeCleanLocal) {
  const auto r = run("analyze 'Z4[C2]' --predicates clean,local");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("16/16"), std::string::npos) << r.out;
  const std::string path = tmp_path("analyze.json");
  ASSERT_EQ(run("analyze 'Z4[C2]' --predicates clean,local --json " + path).code, 0);
  const auto doc = read_json(path);
  EXPECT_EQ(doc["schema"], "groupring-report/1");
  EXPECT_EQ(doc["results"]["clean"]["value"], true);
  EXPECT_EQ(doc["results"]["local"]["value"], true);
}

TEST(Cli, AnalyzeZ9Radical) {
  const std::string path = tmp_path("z9.json");
  const auto r = run("analyze Z9 --json " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("{0,3,6}"), std::string::npos) << r.out;
  const auto doc = read_json(path);
  EXPECT_EQ(doc["results"]["radical"]["members"], (std::vector<int>{0, 3, 6}));
}

TEST(Cli, TableAndJsonAgree) {
  const std::string path = tmp_path("agree.json");
  const auto r = run("analyze 'Z2[S3]' --json " + path);
  ASSERT_EQ(r.code, 0);
  const auto doc = read_json(path);
  for (const auto& [name, res] : doc["results"].items()) {
    if (!res.contains("value")) continue;
    std::istringstream lines(r.out);
    bool found = false;
    for (std::string line; std::getline(lines, line);) {
      std::istringstream words(line);
      std::string key, value;
      words >> key >> value;
      if (key == name) found = value == (res["value"].get<bool>() ? "true" : "false");
    }
    EXPECT_TRUE(found) << name << "\n" << r.out;
  }
}

TEST(Cli, ParseErrorExitTwoWithCaret) {
  const auto r = run("analyze 'Z4[C2'");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("Z4[C2\n     ^"), std::string::npos) << r.out;
}

TEST(Cli, UnknownPredicateExitTwo) { EXPECT_EQ(run("analyze Z4 --predicates bogus").code, 2); }

TEST(Cli, CapExceededExitThree) {
  EXPECT_EQ(run("analyze 'Z4[S3]' --cap 100").code, 3);
  EXPECT_EQ(run("analyze 'Z4[S3]' --predicates sr1").code, 3);
  EXPECT_EQ(run("verify T9 --base Z4 --group S3").code, 3);
}

TEST(Cli, EnvironmentCap) {
  const auto r = run("analyze 'Z3[C2]' --predicates units");
  EXPECT_EQ(r.code, 0);
  const std::string cmd = "GROUPRING_CAP=5 " + std::string(GROUPRING_CLI) + " analyze 'Z3[C2]' --predicates units >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 3);
}

TEST(Cli, VerifyT8AllFalse) {
  const std::string path = tmp_path("t8.json");
  const auto r = run("verify T8 --base Z2 --group C2 --json " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  const auto doc = read_json(path);
  ASSERT_EQ(doc["reports"].size(), 1u);
  const auto& c = doc["reports"][0]["summary"]["conditions"];
  for (const char* k : {"i", "ii", "iii", "iv"}) EXPECT_EQ(c[k], false);
}

TEST(Cli, VerifyT9Pass) {
  const auto r = run("verify T9 --base Z3 --group S3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, VerifySkippedIsNotFailure) {
  const auto r = run("verify T5 --base Z3 --p 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("SKIPPED"), std::string::npos);
}

TEST(Cli, VerifyUsageErrors) {
  EXPECT_EQ(run("verify T10 --base Z2 --group C2").code, 2);
  EXPECT_EQ(run("verify T8 --base Z2").code, 2);
  EXPECT_EQ(run("verify T8 --base Z2[C2] --group C2").code, 2);
  EXPECT_EQ(run("verify --suite /nonexistent.suite").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, SuiteThreadsDoNotChangeOutput) {
  const std::string a = tmp_path("s1.json"), b = tmp_path("s4.json");
  ASSERT_EQ(run(std::string("verify --suite ") + GROUPRING_SUITE + " --json " + a).code, 0);
  ASSERT_EQ(run(std::string("verify --suite ") + GROUPRING_SUITE + " --threads 4 --json " + b).code, 0);
  EXPECT_EQ(read_json(a), read_json(b));
}

TEST(Cli, OutputsMatchSchema) {
  const std::string a = tmp_path("schema_verify.json"), b = tmp_path("schema_analyze.json");
  ASSERT_EQ(run("verify T4 --base Z3 --witnesses --timings --json " + a).code, 0);
  ASSERT_EQ(run("analyze 'Z2[C2xC2]' --json " + b).code, 0);
  std::string err;
  EXPECT_TRUE(schema_check::validate_file(a, GROUPRING_SCHEMA, err)) << err;
  EXPECT_TRUE(schema_check::validate_file(b, GROUPRING_SCHEMA, err)) << err;
}

TEST(Cli, SchemaCheckerRejectsMalformedReport) {
  std::ifstream s(GROUPRING_SCHEMA);
  const auto schema = nlohmann::json::parse(s);
  auto doc = nlohmann::json::parse(R"({"schema":"groupring-report/1","command":"verify","seed":0,"reports":[],"totals":{"pass":0,"skipped":0,"fail":0}})");
  std::string err;
  EXPECT_TRUE(schema_check::validate(doc, schema, schema, err)) << err;
  doc["schema"] = "groupring-report/2";
  EXPECT_FALSE(schema_check::validate(doc, schema, schema, err));
  doc["schema"] = "groupring-report/1";
  doc["reports"] = nlohmann::json::array({{{"theorem", "T4"}}});
  EXPECT_FALSE(schema_check::validate(doc, schema, schema, err));
}
