#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aprop/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = aprop::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(APROP_DATA_DIR "/") + name; }

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Compares against tests/golden/<name>; APROP_UPDATE_GOLDEN=1 rewrites it.
void expect_golden(const std::string& name, const std::string& actual) {
  const std::filesystem::path path = std::filesystem::path(APROP_GOLDEN_DIR) / name;
  if (std::getenv("APROP_UPDATE_GOLDEN")) std::ofstream(path) << actual;
  ASSERT_TRUE(std::filesystem::exists(path)) << path;
  EXPECT_EQ(actual, slurp(path)) << "golden mismatch: " << name;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(CliAp, CheckAndSolve) {
  EXPECT_EQ(run({"ap", "check", "a", "b", "a", "b"}).out, "true\n");
  EXPECT_EQ(run({"ap", "check", "a", "b", "b", "a"}).out, "false\n");
  const Result s = run({"ap", "solve", "g", "g", "h"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out, "h\n");
  EXPECT_EQ(run({"ap", "solve", "0,1", "1,1", "0,0"}).out, "1,0\n");
}

TEST(CliAp, NoSolutionExitsThree) {
  const Result r = run({"ap", "solve", "a", "b", "c"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.out, "NO-SOLUTION\n");
}

TEST(CliAp, CoffeeColumnsAsTuples) {
  EXPECT_EQ(run({"ap", "solve", "coffee,no,no", "coffee,yes,no", "coffee,no,yes"}).out, "coffee,yes,yes\n");
}

TEST(CliAp, Json) {
  const auto j = nlohmann::json::parse(run({"ap", "check", "0", "1", "0", "1", "--format", "json"}).out);
  EXPECT_EQ(j["result"], true);
  const auto k = nlohmann::json::parse(run({"ap", "solve", "a", "b", "c", "--format", "json"}).out);
  EXPECT_TRUE(k["solution"].is_null());
}

TEST(CliAp, UsageErrors) {
  const Result r = run({"ap", "check", "a", "b", "c"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"ap", "check", "a", "b", "c", "z", "--domain", "a,b,c"}).code, 1);
  EXPECT_EQ(run({"ap", "check", "a,b", "b", "c", "d"}).code, 1);
  EXPECT_EQ(run({"ap", "guess", "a", "b", "c"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
}

TEST(CliEvaluate, ValidationErrorsAreAllListed) {
  const Result r = run({"evaluate", "--benchmark", "monk1", "--strategy", "forest", "--subsample", "0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("unknown strategy"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("subsample"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("--seed is required"), std::string::npos) << r.err;
}

TEST(CliEvaluate, DataErrorsExitTwo) {
  EXPECT_EQ(run({"evaluate", "--data", "/nonexistent.csv", "--seed", "1"}).code, 2);
  const auto ragged = temp_file("aprop_ragged.csv", "a,b,c\n1,2,x\n1,2\n");
  EXPECT_EQ(run({"evaluate", "--data", ragged.string(), "--seed", "1"}).code, 2);
}

TEST(CliEvaluate, JsonIsByteIdenticalAcrossRunsAndWorkers) {
  const std::vector<std::string> base{"evaluate", "--benchmark", "monk3", "--profile", "table2",
                                      "--seed", "7", "--format", "json"};
  auto with_workers = [&](const std::string& w) {
    auto args = base;
    args.insert(args.end(), {"--workers", w});
    return run(args);
  };
  const Result one = with_workers("1");
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(one.out, with_workers("1").out);
  EXPECT_EQ(one.out, with_workers("3").out);
  EXPECT_EQ(one.out, with_workers("8").out);

  const auto j = nlohmann::json::parse(one.out);
  EXPECT_EQ(j["config"]["strategy"], "selected");
  EXPECT_EQ(j["config"]["subsample"], 0.5);
  EXPECT_EQ(j["config"]["radius"], 2);
  EXPECT_EQ(j["metrics"]["folds"].size(), 10U);
  EXPECT_FALSE(j["metrics"].contains("seconds"));
  std::size_t rows = 0;
  for (const auto& f : j["metrics"]["folds"]) rows += f["test_rows"].size();
  EXPECT_EQ(rows, 432U);
}

TEST(CliEvaluate, TimingIsOptIn) {
  const Result r = run({"evaluate", "--benchmark", "balance", "--strategy", "knn", "--k", "3", "--seed", "1",
                        "--format", "json", "--timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out)["metrics"].contains("seconds"));
}

TEST(CliEvaluate, GridReportsBestK) {
  const Result r = run({"evaluate", "--benchmark", "monk2", "--strategy", "knn", "--profile", "table3", "--seed",
                        "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["runs"].size(), 6U);
  EXPECT_TRUE(j.contains("best_k"));
}

TEST(CliEvaluate, ResubstitutionNeedsNoSeed) {
  const Result r = run({"evaluate", "--data", data("monk1.csv"), "--strategy", "knn", "--resubstitution"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("accuracy: 100.00"), std::string::npos) << r.out;
}

TEST(CliExplain, WhyMilkForD) {
  const Result r = run({"explain", "--data", data("coffee.csv"), "--row", "3", "--result", "with_milk", "--target",
                        "no", "--attributes", "situation,contraind,dec", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  expect_golden("explain_milk.json", r.out);
  EXPECT_EQ(nlohmann::json::parse(r.out)["change"][0]["attribute"], "situation");
}

TEST(CliExplain, WhySugarForD) {
  const Result r = run({"explain", "--data", data("coffee.csv"), "--row", "3", "--result", "with_sugar",
                        "--question", "why", "--attributes", "situation,contraind,dec", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  expect_golden("explain_sugar.json", r.out);
  EXPECT_EQ(nlohmann::json::parse(r.out)["change"][0]["attribute"], "contraind");
}

TEST(CliExplain, HumanSentence) {
  const Result r = run({"explain", "--data", data("coffee.csv"), "--query", "sit_2,no,coffee,yes,yes", "--result",
                        "with_milk", "--target", "no", "--attributes", "situation,contraind,dec"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("because situation is sit_2 and not sit_1"), std::string::npos) << r.out;
}

TEST(CliExplain, VacuousAndUnsupported) {
  EXPECT_EQ(run({"explain", "--data", data("coffee.csv"), "--row", "3", "--result", "with_milk", "--target", "yes"})
                .code,
            1);
  const auto schema = temp_file("aprop_milk_schema.json", R"({"attributes": [
      {"name": "situation", "domain": ["sit_1", "sit_2"]}, {"name": "with_milk", "domain": ["no", "yes"]}]})");
  const auto csv = temp_file("aprop_milk.csv", "situation,with_milk\nsit_1,yes\nsit_2,yes\n");
  const Result r = run({"explain", "--data", csv.string(), "--schema", schema.string(), "--row", "0", "--result",
                        "with_milk", "--target", "no"});
  EXPECT_EQ(r.code, 3) << r.err;
}

TEST(CliExplain, Relevance) {
  const Result r = run({"explain", "--data", data("coffee.csv"), "--row", "3", "--result", "with_milk", "--target",
                        "no", "--relevance", "mi", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["relevance"]["scores"][0]["attribute"], "situation");
}

TEST(CliDeps, ExhaustiveCourses) {
  const Result r = run({"deps", "--data", data("courses.csv"), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  expect_golden("deps_courses.json", r.out);
  const auto j = nlohmann::json::parse(r.out);
  std::size_t nontrivial = 0;
  for (const auto& d : j["dependencies"]) {
    if (d["trivial"].get<bool>() || !d["mvd"].get<bool>()) continue;
    ++nontrivial;
    EXPECT_EQ(d["x"], nlohmann::json::array({"course"}));
    EXPECT_TRUE(d["lossless_join"].get<bool>());
  }
  EXPECT_EQ(nontrivial, 2U);
  EXPECT_EQ(j["inference"]["violations"], 0);
}

TEST(CliDeps, SingleWithViolation) {
  const auto csv = temp_file("aprop_courses_minus.csv",
                             "course,teacher,time\nMaths,Peter,8am\nMaths,Peter,2pm\nMaths,Mary,8am\nMaths,Mary,2pm\n"
                             "Maths,Paul,8am\nComp.Sci.,Peter,8am\nComp.Sci.,Mary,8am\n");
  const Result r = run({"deps", "--data", csv.string(), "--mode", "single", "--x", "course", "--y", "teacher",
                        "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["mvd"].get<bool>());
  EXPECT_FALSE(j["lossless_join"].get<bool>());
  EXPECT_EQ(j["mvd_witness"]["missing"], nlohmann::json::array({"Maths", "Paul", "2pm"}));
}

TEST(CliDeps, TooManyAttributesForExhaustiveMode) {
  const auto csv = temp_file("aprop_wide.csv", "a,b,c,d,e,f,g\n1,1,1,1,1,1,1\n");
  EXPECT_EQ(run({"deps", "--data", csv.string()}).code, 1);
  EXPECT_EQ(run({"deps", "--data", csv.string(), "--mode", "single", "--x", "a", "--y", "b"}).code, 0);
}

TEST(CliGenerate, BenchmarkMatchesShippedFile) {
  for (const char* name : {"monk1", "monk2", "monk3", "balance"}) {
    const Result r = run({"generate", "benchmark", "--name", name});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, slurp(data(std::string(name) + ".csv"))) << name;
  }
}

TEST(CliGenerate, AffineAndRelation) {
  const Result a = run({"generate", "affine", "--n", "2", "--coefficients", "0,1,1"});
  EXPECT_EQ(a.out, "x1,x2,f\n0,0,0\n0,1,1\n1,0,1\n1,1,0\n");
  EXPECT_EQ(run({"generate", "affine", "--n", "3"}).code, 1);
  EXPECT_EQ(run({"generate", "relation", "--attributes", "3"}).code, 1);
  const Result r = run({"generate", "relation", "--attributes", "3", "--domain-size", "2", "--tuples", "5", "--seed",
                        "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
}

TEST(CliGenerate, PlantedWritesTruth) {
  const auto spec = temp_file("aprop_planted.json", R"({"attributes": 5, "seed": 3,
      "rules": [{"change": [{"attribute": 0, "from": 0, "to": 1}], "label_from": 0, "label_to": 1,
                 "instances": 3, "exceptions": 1}]})");
  const auto truth = std::filesystem::temp_directory_path() / "aprop_truth.json";
  const Result r = run({"generate", "planted", "--spec", spec.string(), "--truth", truth.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(slurp(truth));
  EXPECT_EQ(j[0]["confidence"], 0.75);
  EXPECT_EQ(j[0]["change"][0]["attribute"], "A1");
}
