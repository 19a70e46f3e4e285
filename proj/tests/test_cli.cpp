#include "vpf/cli.hpp"

#include <gtest/gtest.h>

using namespace vpf;
using namespace vpf::cli;

namespace {

const char* kDelannoy = R"({"matrix": [[1, 0, 1], [0, 1, 1]], "bound": 4, "target": [2, 2]})";

CommandResult run(const std::string& command, const std::string& input, const std::string& which = "",
                  bool json = false) {
  return run_command(command, which, input, json);
}

}  // namespace

TEST(ParseProblem, ReadsEveryField) {
  const auto spec = parse_problem_text(R"({
    "matrix": [[1, 0], [0, 1]],
    "weight": {"type": "geometric", "q": ["1/2", 3]},
    "c": ["1/3", "2/3"],
    "bound": 5,
    "target": [1, 2]
  })");
  ASSERT_TRUE(spec.matrix && spec.weight && spec.c && spec.bound && spec.target);
  EXPECT_EQ(spec.matrix->cols(), 2u);
  EXPECT_EQ((*spec.weight)(LatticeVector{1, 1}), Scalar(3, 2));
  EXPECT_EQ((*spec.c)[1], Scalar(2, 3));
  EXPECT_EQ(*spec.bound, 5);
  EXPECT_EQ(*spec.target, (LatticeVector{1, 2}));
}

TEST(ParseProblem, WeightVariants) {
  const auto mm = parse_problem_text(R"({"weight": {"type": "multinomial_monomial", "c": ["1/2", "1/2"], "j": 1}})");
  EXPECT_EQ((*mm.weight)(LatticeVector{1, 1}), Scalar(1, 4));
  const auto table = parse_problem_text(R"({"weight": {"type": "table", "box": [1, 1], "values": [1, 2, 3, "4/5"]}})");
  EXPECT_EQ((*table.weight)(LatticeVector{0, 1}), 2);
  EXPECT_EQ((*table.weight)(LatticeVector{1, 1}), Scalar(4, 5));
  const auto paths = parse_problem_text(R"({"matrix": [[1, 0, 1], [0, 1, 1]], "weight": {"type": "lattice_path_count"}})");
  EXPECT_EQ(paths.weight->arity(), 3u);
  const auto ones = parse_problem_text(R"({"weight": {"type": "constant_one", "arity": 2}})");
  EXPECT_EQ(weight_kind(*ones.weight), "constant_one");
}

TEST(ParseProblem, ErrorsCarryAJsonPointer) {
  const auto where = [](const std::string& text) {
    try {
      parse_problem_text(text);
    } catch (const SpecError& e) {
      return e.where();
    }
    return std::string("no error");
  };
  EXPECT_EQ(where(R"({"matrix": [[1, 0], [0, "x"]]})"), "/matrix/1/1");
  EXPECT_EQ(where(R"({"c": ["1/2", 0.5]})"), "/c/1");
  EXPECT_EQ(where(R"({"c": ["1/0"]})"), "/c/0");
  EXPECT_EQ(where(R"({"colour": 1})"), "/colour");
  EXPECT_EQ(where(R"({"weight": {"type": "geometric", "q": [1], "extra": 0}})"), "/weight/extra");
  EXPECT_EQ(where(R"({"weight": {"type": "bogus"}})"), "/weight/type");
  EXPECT_EQ(where(R"({"weight": {"type": "constant_one"}})"), "/weight/arity");
  EXPECT_EQ(where(R"({"weight": {"type": "multinomial_monomial", "c": [1], "j": 2}})"), "/weight/j");
  EXPECT_EQ(where(R"({"weight": {"type": "table", "box": [1], "values": [1]}})"), "/weight");
  EXPECT_EQ(where(R"({"matrix": [[1, 2]], "weight": {"type": "constant_one", "arity": 3}})"), "/weight");
  EXPECT_EQ(where(R"({"matrix": [[0, 1], [0, 1]]})"), "/matrix");
  EXPECT_EQ(where(R"({"bound": -1})"), "/bound");
  EXPECT_EQ(where(R"({"target": []})"), "/target");
  EXPECT_EQ(where("[1, 2]"), "/");
  EXPECT_EQ(where("{\"matrix\": "), "byte 12");
}

TEST(RunCommand, Pointed) {
  const auto ok = run("pointed", kDelannoy);
  EXPECT_EQ(ok.exit_code, kOk);
  EXPECT_EQ(ok.out, "ell = (1, 1)\nstep degrees = (1, 1, 2)\n");
  const auto bad = run("pointed", R"({"matrix": [[1, -1]]})");
  EXPECT_EQ(bad.exit_code, kViolated);
  EXPECT_EQ(bad.out, "not pointed: zero combination = (1, 1)\n");
  const auto json = run("pointed", R"({"matrix": [[1, -1]]})", "", true);
  EXPECT_EQ(nlohmann::json::parse(json.out)["pointed"], false);
}

TEST(RunCommand, Count) {
  EXPECT_EQ(run("count", R"({"matrix": [[1, 1]], "target": [3]})").out, "4\n");
  EXPECT_EQ(run("count", kDelannoy).out, "3\n");
  const auto weighted =
      run("count", R"({"matrix": [[1, 0, 1], [0, 1, 1]], "weight": {"type": "lattice_path_count"}, "target": [2, 2]})");
  EXPECT_EQ(weighted.out, "13\n");
  const auto json = nlohmann::json::parse(run("count", kDelannoy, "", true).out);
  EXPECT_EQ(json["value"], "3/1");
  EXPECT_EQ(run("count", R"({"matrix": [[1, 1]]})").exit_code, kUsage);
  const auto not_pointed = run("count", R"({"matrix": [[1, -1]], "target": [0]})");
  EXPECT_EQ(not_pointed.exit_code, kViolated);
  EXPECT_FALSE(not_pointed.err.empty());
}

TEST(RunCommand, SeriesAndPaths) {
  const auto series = run("series", kDelannoy);
  EXPECT_EQ(series.exit_code, kOk);
  EXPECT_NE(series.out.find("(2,2) : 13/1\n"), std::string::npos);
  const auto weighted = run("series", R"({"matrix": [[1, 1]], "weight": {"type": "constant_one"}, "bound": 2})");
  EXPECT_EQ(weighted.out, "(0) : 1/1\n(1) : 2/1\n(2) : 3/1\n");
  const auto paths = run("paths", kDelannoy);
  EXPECT_NE(paths.out.find("(2,2) : 13\n"), std::string::npos);
  const auto json = nlohmann::json::parse(run("series", kDelannoy, "", true).out);
  EXPECT_EQ(json["grading"], nlohmann::json::array({1, 1}));
  EXPECT_EQ(json["terms"][0]["coefficient"], "1/1");
}

TEST(RunCommand, Verify) {
  const auto thm1 = run("verify",
                        R"({"matrix": [[1, 0, 1], [0, 1, 1]], "weight": {"type": "lattice_path_count"},
                            "c": ["1/4", "1/4", "1/2"], "bound": 4})",
                        "thm1");
  EXPECT_EQ(thm1.exit_code, kOk);
  EXPECT_EQ(thm1.out.substr(0, 6), "holds:");

  const auto rec = run("verify", R"({"weight": {"type": "constant_one", "arity": 2}, "bound": 3})", "rec");
  EXPECT_EQ(rec.exit_code, kViolated);
  EXPECT_NE(rec.out.find("first violation at (1,1): lhs = 1, rhs = 2"), std::string::npos);

  EXPECT_EQ(run("verify", kDelannoy, "prop1").exit_code, kOk);
  EXPECT_EQ(run("verify", kDelannoy, "prop2").exit_code, kOk);
  EXPECT_EQ(run("verify", R"({"matrix": [[1, 0, 1], [0, 1, 1]], "c": ["3/2", "-1/2", 0], "target": [2, 3]})", "prop3")
                .exit_code,
            kOk);
  EXPECT_EQ(run("verify", R"({"c": ["1/2", "1/3", "1/6"], "target": [2, 1, 3]})", "cb").exit_code, kOk);
  EXPECT_EQ(run("verify", R"({"c": ["3/5", "2/5"], "target": [4, 7]})", "cb1d").out,
            "holds: Chaundy-Bullard identity on mu = (4,7) (1 coefficients)\n");

  const auto json = nlohmann::json::parse(
      run("verify", R"({"weight": {"type": "geometric", "q": ["1/2", "1/2"]}, "bound": 3})", "rec", true).out);
  EXPECT_EQ(json["holds"], false);
  EXPECT_EQ(json["first_violation"]["lhs"], "1/4");
  EXPECT_EQ(json["first_violation"]["rhs"], "1/1");
}

TEST(RunCommand, UsageErrors) {
  EXPECT_EQ(run("count", "{not json").exit_code, kUsage);
  EXPECT_EQ(run("frobnicate", "{}").exit_code, kUsage);
  EXPECT_EQ(run("verify", "{}", "prop9").exit_code, kUsage);
  EXPECT_EQ(run("verify", R"({"c": ["1/2"], "target": [1]})", "cb1d").exit_code, kUsage);
  const auto missing = run("verify", R"({"matrix": [[1]]})", "prop2");
  EXPECT_EQ(missing.exit_code, kUsage);
  EXPECT_EQ(missing.err, "input error at /bound: required by this command\n");
  // Precondition failures inside the library are input errors too.
  EXPECT_EQ(run("verify", R"({"c": ["1/2", "1/3"], "target": [1, 1]})", "cb").exit_code, kUsage);
  EXPECT_EQ(run("verify", R"({"matrix": [[1, 1]], "weight": {"type": "constant_one"}, "bound": 3})", "prop1")
                .exit_code,
            kUsage);
}
