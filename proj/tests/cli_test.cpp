#include "cli.hpp"
#include "format.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <sstream>

namespace qtheta::cli {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

TEST(CliTest, Coeff) {
  EXPECT_EQ(invoke({"coeff", "5", "2"}).out, "q^3 + 6*q^4 + 3*q^6\n");
  EXPECT_EQ(invoke({"coeff", "0", "0"}).out, "1\n");
  for (const char* m : {"series", "rec4", "rec5", "partitions", "compositions"}) {
    const Result r = invoke({"coeff", "5", "2", "--method", m});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "q^3 + 6*q^4 + 3*q^6\n") << m;
  }
}

TEST(CliTest, CoeffFormats) {
  EXPECT_EQ(invoke({"coeff", "5", "2", "--format", "json"}).out,
            "[\"0\",\"0\",\"0\",\"1\",\"6\",\"0\",\"3\"]\n");
  EXPECT_EQ(invoke({"coeff", "5", "2", "--format", "latex"}).out, "q^{3} + 6q^{4} + 3q^{6}\n");
  EXPECT_EQ(invoke({"coeff", "5", "2", "--format", "csv"}).out, "q^3 + 6*q^4 + 3*q^6\n");
  EXPECT_EQ(invoke({"coeff", "4", "3", "--format", "latex"}).out, "4q\n");
}

TEST(CliTest, ErrorsExitNonzeroWithoutOutput) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"coeff", "2", "3"},
           {"coeff", "5", "2", "--method", "magic"},
           {"coeff", "5", "2", "--format", "xml"},
           {"coeff", "x", "2"},
           {"coeff", "-1", "0"},
           {"coeff", "45", "2", "--method", "partitions"},
           {"triangle", "0"},
           {"triangle", "4", "--method", "nope"},
           {"inverse", "0", "3"},
           {"inverse", "1", "0"},
           {"inverse", "1", "3", "--method", "rec4"},
           {"verify", "--max-n", "0"},
           {"frobnicate"},
           {}}) {
    const Result r = invoke(args);
    EXPECT_NE(r.status, 0) << ::testing::PrintToString(args);
    EXPECT_TRUE(r.out.empty()) << r.out;
  }
  EXPECT_NE(invoke({"coeff", "2", "3"}).err.find("error"), std::string::npos);
}

TEST(CliTest, Triangle) {
  EXPECT_EQ(invoke({"triangle", "1"}).out, "1\n");
  const std::string expected =
      "1\n"
      "q; 1\n"
      "q^3; 2*q; 1\n"
      "q^6; q^2 + 2*q^3; 3*q; 1\n"
      "q^10; 2*q^4 + 2*q^6; 3*q^2 + 3*q^3; 4*q; 1\n"
      "q^15; q^6 + 2*q^7 + 2*q^10; q^3 + 6*q^4 + 3*q^6; 6*q^2 + 4*q^3; 5*q; 1\n";
  for (const char* m : {"series", "rec4", "rec5", "partitions", "compositions"}) {
    EXPECT_EQ(invoke({"triangle", "6", "--method", m}).out, expected) << m;
  }
}

TEST(CliTest, TriangleCsvAndLatex) {
  EXPECT_EQ(invoke({"triangle", "3", "--format", "csv"}).out, "1,,\nq,1,\nq^3,2*q,1\n");
  EXPECT_EQ(invoke({"triangle", "2", "--format", "latex"}).out,
            "\\begin{pmatrix}\n1 & 0 \\\\\nq & 1\n\\end{pmatrix}\n");
}

TEST(CliTest, TriangleJsonIsEngineIndependent) {
  const std::string rec4 = invoke({"triangle", "10", "--format", "json"}).out;
  const std::string series = invoke({"triangle", "10", "--method", "series", "--format", "json"}).out;
  EXPECT_EQ(rec4, series);
  const auto table = nlohmann::json::parse(rec4);
  ASSERT_EQ(table.size(), 10u);
  EXPECT_EQ(table[5][2], nlohmann::json::parse(R"(["0","0","0","1","6","0","3"])"));
  EXPECT_EQ(table[0][0], nlohmann::json::parse(R"(["1"])"));
}

TEST(CliTest, JsonRoundTripsToPlain) {
  for (unsigned n = 0; n < 9; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      const std::string ns = std::to_string(n), ks = std::to_string(k);
      std::string json = invoke({"coeff", ns, ks, "--format", "json"}).out;
      const std::string plain = invoke({"coeff", ns, ks}).out;
      EXPECT_EQ(parse_json(json).render() + "\n", plain);
    }
  }
  const auto inverse = nlohmann::json::parse(invoke({"inverse", "1", "4", "--format", "json"}).out);
  EXPECT_EQ(parse_json(inverse[3].dump()).render(), "-q^3 + 2*q^4 - q^6");
}

TEST(CliTest, Inverse) {
  const std::string expected = "1\n-q\nq^2 - q^3\n-q^3 + 2*q^4 - q^6\n";
  EXPECT_EQ(invoke({"inverse", "1", "4"}).out, expected);
  EXPECT_EQ(invoke({"inverse", "1", "4", "--method", "series"}).out, expected);
  EXPECT_EQ(invoke({"inverse", "2", "1"}).out, "1\n");
  EXPECT_EQ(invoke({"inverse", "2", "3", "--method", "formula"}).out,
            invoke({"inverse", "2", "3", "--method", "series"}).out);
  EXPECT_EQ(invoke({"inverse", "3", "12", "--method", "formula", "--format", "json"}).out,
            invoke({"inverse", "3", "12", "--method", "series", "--format", "json"}).out);
}

TEST(CliTest, Verify) {
  Result r = invoke({"verify", "--max-n", "12"});
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("all suites passed"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);

  r = invoke({"verify", "--max-n", "1"});
  EXPECT_EQ(r.status, 0) << r.out;

  r = invoke({"verify", "--max-n", "6"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("PASS golden table: 105 passed, 0 failed"), std::string::npos) << r.out;
}

TEST(FormatTest, LatexSigns) {
  EXPECT_EQ(render_latex(QPoly::parse("-q^3 + 2*q^4 - q^6")), "-q^{3} + 2q^{4} - q^{6}");
  EXPECT_EQ(render_latex(QPoly()), "0");
  EXPECT_EQ(render_latex(QPoly::parse("-2 - q")), "-2 - q");
}

TEST(FormatTest, JsonRejectsNonStrings) {
  EXPECT_THROW(parse_json("[1,2]"), std::invalid_argument);
  EXPECT_THROW(parse_json("{}"), std::invalid_argument);
  EXPECT_EQ(parse_json("[]"), QPoly());
  EXPECT_EQ(parse_json(R"(["0","0"])"), QPoly());
}

}  // namespace
}  // namespace qtheta::cli
