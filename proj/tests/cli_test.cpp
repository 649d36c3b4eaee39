#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace repseq::cli {
namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args, const std::string& stdin_data = "", Environment env = {}) {
  std::istringstream in(stdin_data);
  std::ostringstream out, err;
  const int code = run(args, in, out, err, env);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("repseq_cli_test_" + name);
}

TEST(CliFindTest, JsonWitnessRecord) {
  const auto r = invoke({"find", "--mode", "nonint", "--text", "abcaaaca", "--witness", "--format", "json"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out,
            "{\"mode\":\"nonint\",\"n\":8,\"length\":8,\"witness\":{\"positions\":[1,2,3,4,5,6,7,8],"
            "\"string\":\"abcaaaca\",\"minPeriod\":7,\"maxExponent\":{\"num\":8,\"den\":7},"
            "\"domainExponent\":{\"num\":8,\"den\":7}}}\n");
}

TEST(CliFindTest, JsonWitnessWithoutFullBorder) {
  // Without the final "a" no border spans the whole text.
  const auto r = invoke({"find", "--mode", "nonint", "--text", "abcaaac", "--witness", "--format", "json"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "{\"mode\":\"nonint\",\"n\":7,\"length\":6,\"witness\":{\"positions\":[1,3,4,5,6,7],"
            "\"string\":\"acaaac\",\"minPeriod\":4,\"maxExponent\":{\"num\":3,\"den\":2},"
            "\"domainExponent\":{\"num\":3,\"den\":2}}}\n");
}

TEST(CliFindTest, TextFormat) {
  const auto none = invoke({"find", "--mode", "periodic", "--text", "abcdef"});
  EXPECT_EQ(none.code, kOk);
  EXPECT_EQ(none.out, "mode periodic\nn 6\nlength 0\n");
  const auto any = invoke({"find", "--mode", "any", "--text", "abab", "--witness"});
  EXPECT_EQ(any.out,
            "mode any\nn 4\nlength 4\npositions 1,2,3,4\nstring abab\nminPeriod 2\nmaxExponent 2/1\n"
            "domainExponent 2/1\n");
  const auto zero = invoke({"find", "--mode", "d4", "--text", "abc", "--witness", "--format", "json"});
  EXPECT_EQ(zero.out, "{\"mode\":\"d4\",\"n\":3,\"length\":0,\"witness\":null}\n");
}

TEST(CliFindTest, PaperLiteral) {
  EXPECT_EQ(invoke({"find", "--mode", "nonint", "--text", "bab", "--paper-literal"}).out,
            "mode nonint\nn 3\nlength 0\n");
  EXPECT_EQ(invoke({"find", "--mode", "nonint", "--text", "bab"}).out, "mode nonint\nn 3\nlength 3\n");
}

TEST(CliFindTest, StdinAndFileTrimming) {
  EXPECT_EQ(invoke({"find", "--mode", "square"}, "abab\n").out, "mode square\nn 4\nlength 4\n");
  EXPECT_EQ(invoke({"find", "--mode", "square", "--no-trim"}, "abab\n").out, "mode square\nn 5\nlength 4\n");
  EXPECT_EQ(invoke({"find", "--mode", "square"}, "abab\r\n").out, "mode square\nn 4\nlength 4\n");

  const auto path = temp_path("input.txt");
  {
    std::ofstream f(path, std::ios::binary);
    f << "aaaa\n";
  }
  EXPECT_EQ(invoke({"find", "--mode", "periodic", "--file", path.string()}).out, "mode periodic\nn 4\nlength 4\n");
  std::filesystem::remove(path);
}

TEST(CliFindTest, NonAsciiBytesAreEscaped) {
  const std::string text = "\xc3\xa9\xc3\xa9";
  const auto r = invoke({"find", "--mode", "square", "--text", text, "--witness", "--format", "json"});
  EXPECT_NE(r.out.find("\"string\":\"\\u00c3\\u00a9\\u00c3\\u00a9\""), std::string::npos) << r.out;
}

TEST(CliErrorsTest, ExitCodes) {
  EXPECT_EQ(invoke({"find", "--mode", "cubes", "--text", "ab"}).code, kUsage);
  EXPECT_EQ(invoke({"find", "--text", "ab"}).code, kUsage);
  EXPECT_EQ(invoke({"find", "--mode", "any", "--text", "ab", "--file", "x"}).code, kUsage);
  EXPECT_EQ(invoke({"find", "--mode", "any", "--text", "ab", "--bogus"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"find", "--mode", "any", "--file", "/nonexistent/repseq/input"}).code, kIo);

  const auto guard = invoke({"find", "--mode", "d4", "--text", std::string(41, 'a')});
  EXPECT_EQ(guard.code, kGuard);
  EXPECT_NE(guard.err.find("d4"), std::string::npos);
  EXPECT_NE(guard.err.find("--max-n"), std::string::npos);
  EXPECT_EQ(invoke({"find", "--mode", "d4", "--text", std::string(41, 'a'), "--max-n", "41"}).code, kOk);

  EXPECT_EQ(invoke({"oracle", "--mode", "any", "--text", std::string(23, 'a')}).code, kGuard);
  EXPECT_EQ(invoke({"oracle", "--mode", "any", "--text", "aaaa", "--limit", "3"}).code, kGuard);
  EXPECT_EQ(invoke({"oracle", "--mode", "any", "--text", "aaaa", "--limit", "30"}).code, kUsage);
  EXPECT_EQ(invoke({"analyze", "--text", ""}).code, kUsage);

  Environment bad;
  bad.threads = "zero";
  EXPECT_EQ(invoke({"find", "--mode", "any", "--text", "ab"}, "", bad).code, kUsage);
}

TEST(CliAnalyzeTest, Records) {
  EXPECT_EQ(invoke({"analyze", "--text", "abaab", "--format", "json"}).out,
            "{\"n\":5,\"periods\":[3,5],\"exponents\":[{\"num\":5,\"den\":3},{\"num\":1,\"den\":1}],"
            "\"class\":\"sub-periodic\"}\n");
  EXPECT_EQ(invoke({"analyze", "--text", "aaaa"}).out,
            "n 4\nperiods 1,2,3,4\nexponents 4/1,2/1,4/3,1/1\nclass periodic\n");
}

TEST(CliOracleTest, SameShapeAsFind) {
  EXPECT_EQ(invoke({"oracle", "--mode", "periodic", "--text", "abcaaaca"}).out, "mode periodic\nn 8\nlength 6\n");
  const auto find = invoke({"find", "--mode", "d3", "--text", "ababab", "--witness", "--format", "json"});
  const auto oracle = invoke({"oracle", "--mode", "d3", "--text", "ababab", "--witness", "--format", "json"});
  EXPECT_EQ(find.out, oracle.out);
}

TEST(CliOutputTest, ThreadCountDoesNotChangeBytes) {
  Environment one, three;
  one.threads = "1";
  three.threads = "3";
  for (std::string mode : {"nonint", "periodic", "square", "any", "d3", "d4"}) {
    const std::vector<std::string> args{"find", "--mode", mode, "--text", "abacabcbbacab", "--witness",
                                        "--format", "json"};
    const auto a = invoke(args, "", one), b = invoke(args, "", three);
    EXPECT_EQ(a.out, b.out) << mode;
    EXPECT_EQ(a.out.find('\r'), std::string::npos);
  }
}

TEST(CliBenchTest, WritesCsv) {
  const auto path = temp_path("bench.csv");
  std::filesystem::remove(path);
  const auto r = invoke({"bench", "--mode", "nonint", "--sizes", "8,16,32", "--alphabet", "2", "--seed", "42",
                         "--reps", "3", "--out", path.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.substr(0, 7), "rows 9\n");
  EXPECT_NE(r.out.find("slope "), std::string::npos);
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  EXPECT_EQ(line, "mode,n,sigma,seed,rep,nanos,length");
  std::size_t rows = 0;
  while (std::getline(f, line)) {
    EXPECT_EQ(line.rfind("nonint,", 0), 0u) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 9u);
  std::filesystem::remove(path);

  const auto guard = invoke({"bench", "--mode", "d4", "--sizes", "8,64", "--alphabet", "2", "--seed", "1", "--out",
                             path.string()});
  EXPECT_EQ(guard.code, kGuard);
  EXPECT_FALSE(std::filesystem::exists(path));
  EXPECT_EQ(invoke({"bench", "--mode", "d4", "--sizes", "16,8", "--alphabet", "2", "--seed", "1", "--out",
                    path.string()})
                .code,
            kUsage);
}

}  // namespace
}  // namespace repseq::cli
