#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "codespec.hpp"
#include "mtdual/error.hpp"
#include "random_codes.hpp"

using mtdual::testing::fixture;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mtdual::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(CodeSpec, LoadsFixtures) {
  const auto spec = mtdual::cli::load_codespec(fixture("f16_three_blocks.json"));
  EXPECT_EQ(spec.field->order(), 16u);
  EXPECT_EQ(spec.block_lengths, (std::vector<int>{3, 4, 4}));
  EXPECT_EQ(spec.shifts[1], spec.field->power_of_generator(10));
  EXPECT_EQ(spec.code().dimension(), 5);
  EXPECT_EQ(mtdual::cli::load_codespec(fixture("f3_two_blocks.json")).code().dimension(), 6);
  EXPECT_EQ(mtdual::cli::load_codespec(fixture("f81_direct_sum.json")).code().dimension(), 6);
}

TEST(CodeSpec, IntegerEntriesAccepted) {
  const auto spec = mtdual::cli::parse_codespec(
      R"({"field": {"p": 5, "e": 1}, "shifts": [2], "block_lengths": [4], "rows": [[1]]})");
  EXPECT_EQ(spec.shifts[0], spec.field->from_int(2));
  EXPECT_EQ(spec.code().dimension(), 4);
}

TEST(CodeSpec, Rejections) {
  using mtdual::cli::parse_codespec;
  EXPECT_THROW(parse_codespec("{"), mtdual::ParseError);
  EXPECT_THROW(parse_codespec(R"({"shifts": [1]})"), mtdual::ParseError);
  EXPECT_THROW(parse_codespec(R"({"field": {"p": 2, "e": 2}, "shifts": [1], "block_lengths": [2], "rows": []})"),
               mtdual::ParseError);
  EXPECT_THROW(parse_codespec(R"({"field": {"p": 2, "e": 2, "modulus": [1, 0, 1]}, "shifts": [1],
                                  "block_lengths": [2], "rows": []})"),
               mtdual::PreconditionError);
  EXPECT_THROW(parse_codespec(R"({"field": {"p": 4, "e": 1}, "shifts": [1], "block_lengths": [2], "rows": []})"),
               mtdual::PreconditionError);
  EXPECT_THROW(mtdual::cli::load_codespec("/nonexistent/spec.json"), mtdual::ParseError);
}

TEST(Cli, InfoText) {
  const Result r = run({"info", fixture("f16_three_blocks.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dimension: 5\n"), std::string::npos);
  EXPECT_NE(r.out.find("companion:\ng^10 + x | 0 | g^2\n"), std::string::npos);
}

TEST(Cli, InfoZeroCode) {
  const Result r = run({"info", fixture("zero_code.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("dimension: 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("gpm:\n1 + x^3 | 0\n0 | g + x^2\n"), std::string::npos) << r.out;
}

TEST(Cli, HnfReportsRank) {
  const Result r = run({"hnf", fixture("f16_three_blocks.json"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rank"], 3);
  EXPECT_EQ(j["construction"], "hnf");
}

TEST(Cli, DualSteps) {
  const Result r = run({"dual", "--steps", fixture("f3_two_blocks.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("A*:\n1 + x + x^2 + 2*x^5 + 2*x^6 | 2*x^-25 + 2*x^-24 + 2*x^-22 + 2*x^-21\n0 | 1\n"),
            std::string::npos);
  EXPECT_NE(r.out.find("A**:\n1 + x + x^2 + 2*x^5 + 2*x^6 | 2*x^15 + 2*x^16 + 2*x^18 + 2*x^19\n"), std::string::npos);
  EXPECT_NE(r.out.find("gpm:\n1 | 2*x + 2*x^2 + x^3 + x^4 + x^5\n0 | 2 + 2*x + 2*x^2 + x^5 + x^6\n"),
            std::string::npos);
  EXPECT_NE(r.out.find("dimension: 54\n"), std::string::npos);
}

TEST(Cli, DualJson) {
  const Result r = run({"dual", fixture("f3_two_blocks.json"), "--json", "--steps"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["construction"], "euclidean_dual");
  EXPECT_EQ(j["dimensions"]["output"], 54);
  EXPECT_EQ(j["output_gpm"][1][1], "2 + 2*x + 2*x^2 + x^5 + x^6");
  EXPECT_EQ(j["steps"]["A(1/x)"][0][0], "x^-6 + x^-5 + x^-4 + 2*x^-1 + 2");
}

TEST(Cli, GaloisLeft) {
  const Result r = run({"galois", fixture("f16_three_blocks.json"), "--kappa", "3", "--side", "left", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["output_gpm"][0][1], "g^12");
  for (const auto& ic : j["identity_checks"]) EXPECT_TRUE(ic["holds"].get<bool>());
}

TEST(Cli, TwoSidedKappaThree) {
  const Result r = run({"two-sided", fixture("f16_three_blocks.json"), "--kappa", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("dimension: 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("gpm:\ng^10 + x | 0 | 0\n0 | g^10 + x^4 | 0\n0 | 0 | g^10 + x^4\n"), std::string::npos);
  EXPECT_NE(r.out.find("X:\ng^5 + g^10*x + x^2 | 0 | 0\n0 | 1 | 0\n0 | 0 | 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("trace equation: holds\n"), std::string::npos);

  const Result j = run({"two-sided", fixture("f16_three_blocks.json"), "--kappa", "3", "--json"});
  ASSERT_EQ(j.code, 0);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["certificate"]["upsilon"], 2);
  EXPECT_TRUE(doc["trace_equation"]["holds"].get<bool>());
  EXPECT_EQ(doc["dimensions"]["output"], 2);
}

TEST(Cli, VerifyPasses) {
  const Result r = run({"verify", fixture("f16_three_blocks.json")});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}

TEST(Cli, Distance) {
  const Result r = run({"distance", fixture("f16_three_blocks.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("minimum distance: 5\n"), std::string::npos);
  const Result capped = run({"distance", fixture("f16_three_blocks.json"), "--cap", "1000"});
  EXPECT_EQ(capped.code, mtdual::cli::kPreconditionError);
  EXPECT_NE(capped.err.find("enumeration too large"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, mtdual::cli::kParseError);
  EXPECT_EQ(run({"frobnicate"}).code, mtdual::cli::kParseError);
  EXPECT_EQ(run({"galois", fixture("f16_three_blocks.json")}).code, mtdual::cli::kParseError);
  EXPECT_EQ(run({"info", write_temp("broken.json", "{\"field\": ")}).code, mtdual::cli::kParseError);
  EXPECT_EQ(run({"info", "/nonexistent/spec.json"}).code, mtdual::cli::kParseError);
  EXPECT_EQ(run({"--help"}).code, mtdual::cli::kOk);

  const Result two = run({"two-sided", fixture("f16_three_blocks.json"), "--kappa", "1"});
  EXPECT_EQ(two.code, mtdual::cli::kOk);
  const Result bad_kappa = run({"galois", fixture("f16_three_blocks.json"), "--kappa", "4"});
  EXPECT_EQ(bad_kappa.code, mtdual::cli::kPreconditionError);
  const std::string f8 = write_temp("f8.json", R"({"field": {"p": 2, "e": 3, "modulus": [1, 1, 0, 1]},
      "shifts": ["1"], "block_lengths": [3], "rows": [["1 + x"]]})");
  const Result no_divide = run({"two-sided", f8, "--kappa", "1"});
  EXPECT_EQ(no_divide.code, mtdual::cli::kPreconditionError);
  EXPECT_NE(no_divide.err.find("e does not divide 4κ"), std::string::npos);
  const Result zero_shift = run({"info", write_temp("zero_shift.json", R"({"field": {"p": 3},
      "shifts": ["0"], "block_lengths": [3], "rows": []})")});
  EXPECT_EQ(zero_shift.code, mtdual::cli::kPreconditionError);
  EXPECT_EQ(run({"distance", fixture("zero_code.json")}).code, mtdual::cli::kPreconditionError);
}

TEST(Cli, ExceptionMapping) {
  std::ostringstream err;
  auto code = [&](auto e) { return mtdual::cli::report_exception(std::make_exception_ptr(e), err); };
  EXPECT_EQ(code(mtdual::ParseError("p")), mtdual::cli::kParseError);
  EXPECT_EQ(code(mtdual::PreconditionError("q")), mtdual::cli::kPreconditionError);
  EXPECT_EQ(code(mtdual::InvariantError("r")), mtdual::cli::kInvariantError);
  EXPECT_EQ(code(std::runtime_error("s")), mtdual::cli::kInvariantError);
  EXPECT_NE(err.str().find("internal invariant failed: r"), std::string::npos);
}
