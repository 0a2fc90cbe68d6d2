#include <gtest/gtest.h>

#include <sstream>

#include "lefschetz/cli.hpp"
#include "lefschetz/error.hpp"

using namespace lefschetz;

namespace {

std::string data(const std::string& name) { return std::string(LEFSCHETZ_TEST_DATA) + "/data/" + name; }

int parse_error_line(const std::string& text, std::string* key = nullptr) {
  try {
    parse_scenario(text);
  } catch (const ParseError& e) {
    if (key) *key = e.key();
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(Cli, MRange) {
  EXPECT_EQ(parse_m_range("1..3"), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(parse_m_range("2,5"), (std::vector<int>{2, 5}));
  EXPECT_THROW(parse_m_range("3..1"), Error);
  EXPECT_THROW(parse_m_range("x"), Error);
}

TEST(Cli, UnknownKeyReportsLine) {
  std::string key;
  EXPECT_EQ(parse_error_line("space = affine_line\np = 3\n# note\nfoo = 1\nm_range = 1\n", &key), 4);
  EXPECT_EQ(key, "foo");
}

TEST(Cli, DuplicateKeyRejected) {
  std::string key;
  EXPECT_EQ(parse_error_line("space = affine_line\np = 3\np = 5\nm_range = 1\n", &key), 3);
  EXPECT_EQ(key, "p");
}

TEST(Cli, SingularCurveIsAParseError) {
  std::string key;
  EXPECT_EQ(parse_error_line("space = open_elliptic\np = 5\ncurve = 0 0 0\nm_range = 1\n", &key), 3);
  EXPECT_EQ(key, "curve");
}

TEST(Cli, PointOffCurveIsAParseError) {
  std::string key;
  parse_error_line("space = open_elliptic\np = 5\ncurve = 0 1 1\npoint_P = 1 1\nm_range = 1\n", &key);
  EXPECT_EQ(key, "point_P");
}

TEST(Cli, MissingRequiredKey) {
  std::string key;
  EXPECT_EQ(parse_error_line("space = affine_line\nm_range = 1\n", &key), 0);
  EXPECT_EQ(key, "p");
}

TEST(Cli, ParsesMatrixAndDefaults) {
  const Scenario s = parse_scenario("space = affine_line\np = 3\nalpha = 2\nbeta = 1\nsheaf_n = 2\nsheaf_rank = 2\nu = 1 2; 0 4\nm_range = 1..2\n");
  EXPECT_EQ(s.sheaf.modulus(), 9);
  EXPECT_EQ(s.sheaf.trace(), 5);
  EXPECT_EQ(s.m_range.size(), 2u);
  EXPECT_TRUE(s.corr.is_affine());
}

TEST(Cli, ReportFormat) {
  std::ostringstream out, err;
  RunOptions o;
  EXPECT_EQ(run(Command::Verify, {data("affine_line_p3.scn")}, o, out, err), 0);
  const std::string text = out.str();
  EXPECT_NE(text.find("scenario affine_line_p3 (mod 3)"), std::string::npos) << text;
  EXPECT_NE(text.find("m | lhs | rhs | fix_count | verdict"), std::string::npos) << text;
  EXPECT_NE(text.find("OK 3/3"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  std::ostringstream out, err;
  RunOptions o;
  EXPECT_EQ(run(Command::Verify, {data("negative_control.scn")}, o, out, err), 1);
  EXPECT_NE(out.str().find("FAIL 2/3"), std::string::npos) << out.str();
  EXPECT_EQ(run(Command::Verify, {data("does_not_exist.scn")}, o, out, err), 2);
  EXPECT_EQ(parse_command("hasse-witt"), Command::HasseWitt);
  EXPECT_FALSE(parse_command("frobnicate"));
}
