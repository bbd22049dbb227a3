#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "compseq");
  std::ostringstream out, err;
  const int code = compseq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("compseq_cli_test_" + name);
}

TEST(CliTest, LambdaSquares) {
  const auto r = run({"lambda", "--poly", "j^2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "lambda = 128"));
  EXPECT_TRUE(contains(r.out, "n1 = 23"));
  EXPECT_TRUE(contains(r.out, "base cases = 129 .. 529"));
  EXPECT_TRUE(contains(r.out, "certificate = verified"));
}

TEST(CliTest, CheckReportsGcd) {
  const auto r = run({"check", "--poly", "2*j"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "value gcd = 2"));
  EXPECT_TRUE(contains(r.err, "error: not-complete"));
  EXPECT_EQ(run({"check", "--poly", "j^2"}).code, 0);
  EXPECT_EQ(run({"lambda", "--poly", "2*j"}).code, 1);
}

TEST(CliTest, InfeasibleNamesRequiredSize) {
  const auto r = run({"lambda", "--poly", "j^6", "--memory", "1000000"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "error: infeasible"));
  EXPECT_TRUE(contains(r.err, "required table size K="));
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"lambda"}).code, 3);
  EXPECT_EQ(run({"lambda", "--poly", "j^2", "--reps", "0"}).code, 3);
  EXPECT_EQ(run({"frobnicate"}).code, 3);
  const auto r = run({"lambda", "--poly", "2j"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(contains(r.err, "error: parse"));
  EXPECT_TRUE(contains(r.err, "byte 1"));
}

TEST(CliTest, HelpListsEveryFlag) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> expected = {
      {"check", {"--poly", "--j0", "--format"}},
      {"counts", {"--poly", "--j0", "--reps", "--k", "--out", "--memory"}},
      {"lambda", {"--poly", "--j0", "--reps", "--offset", "--initial-k", "--max-k", "--memory", "--format",
                  "--certificate"}},
      {"prove", {"--certificate", "--max-k", "--memory"}},
      {"oracle", {"--poly", "--j0", "--n"}},
  };
  for (const auto& [sub, flags] : expected) {
    const auto r = run({sub, "--help"});
    EXPECT_EQ(r.code, 0) << sub;
    for (const auto& f : flags) EXPECT_TRUE(contains(r.out, f)) << sub << " " << f;
  }
}

TEST(CliTest, CertificateRoundTripThroughFile) {
  const auto path = scratch("cert.json");
  auto r = run({"lambda", "--poly", "j^2", "--format", "json", "--certificate", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "\"lambda\": 128"));
  r = run({"prove", "--certificate", path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "N1 = 23"));

  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  std::string tampered = text.str();
  const auto at = tampered.find("\"lambda\": 128");
  ASSERT_NE(at, std::string::npos);
  tampered.replace(at, 13, "\"lambda\": 127");
  std::ofstream(path) << tampered;
  r = run({"prove", "--certificate", path.string()});
  EXPECT_EQ(r.code, 4);
  EXPECT_TRUE(contains(r.err, "error: verification-failed"));

  std::ofstream(path) << "not json";
  EXPECT_EQ(run({"prove", "--certificate", path.string()}).code, 4);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"prove", "--certificate", path.string()}).code, 3);
}

TEST(CliTest, CountsTable) {
  const auto r = run({"counts", "--poly", "j", "--reps", "2", "--k", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "# cap=2\n0\t1\n1\t1\n2\t1\n3\t2\n4\t2\n");
  const auto path = scratch("counts.tsv");
  EXPECT_EQ(run({"counts", "--poly", "j^2", "--k", "3", "--out", path.string()}).code, 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), "# cap=1\n0\t1\n1\t1\n2\t0\n3\t0\n");
  std::filesystem::remove(path);
}

TEST(CliTest, Oracle) {
  const auto r = run({"oracle", "--poly", "j^2", "--n", "25"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
}

}  // namespace
