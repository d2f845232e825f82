#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "hwprobe/error.hpp"
#include "hwprobe_cli/job.hpp"

using namespace hwprobe;
using namespace hwprobe::cli;

namespace {

const char* kCuspJob = R"({
  "name": "cusp",
  "field": 7,
  "variables": ["x", "y"],
  "weights": [3, 2],
  "ideal": ["x^2 - y^3"],
  "domain": true,
  "modules": [
    {"name": "k", "quotient": ["x", "y"]},
    {"name": "m", "syzygy": "k", "index": 1}
  ],
  "tasks": [
    {"op": "hw_check", "module": "m"}
  ]
})";

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Job, CuspHwCheck) {
  auto report = runJob(parseJob(kCuspJob));
  ASSERT_EQ(report.tasks.size(), 1u);
  const auto& t = report.tasks[0];
  EXPECT_EQ(t.status, TaskStatus::Ok);
  EXPECT_GE(t.result.at("torsion_length").get<int>(), 1);
  EXPECT_EQ(t.result.at("verdict"), "CONJECTURE_HOLDS");
  EXPECT_FALSE(report.hasAnomaly());
}

TEST(Job, UnparseablePolynomialNamesToken) {
  auto spec = parseJob(R"({"field": 7, "variables": ["x", "y"], "ideal": ["x^2 + $y"]})");
  try {
    runJob(spec);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.token(), "$");
    EXPECT_NE(std::string(e.what()).find("'$'"), std::string::npos);
  }
}

TEST(Job, MalformedDocumentReportsPosition) {
  std::string text = "{\"field\": 7,\n \"variables\": [x]}";
  try {
    parseJob(text);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(Job, UnknownVariableRejected) {
  std::string text = R"({"field": 7, "variables": ["x"], "ideal": ["x*q"]})";
  EXPECT_THROW(runJob(parseJob(text)), ParseError);
}

TEST(Job, MissingKeyNamed) {
  try {
    parseJob(R"({"field": 7})");
    FAIL() << "expected an input error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("variables"), std::string::npos);
  }
}

TEST(Job, UnknownOperationRejectedBeforeRunning) {
  auto spec = parseJob(R"({"field": 7, "variables": ["x"], "tasks": [{"op": "frobnicate"}]})");
  EXPECT_THROW(runJob(spec), InputError);
}

TEST(Job, EmptyTaskListGivesEmptyReport) {
  auto report = runJob(parseJob(R"({"field": 7, "variables": ["x"]})"));
  EXPECT_TRUE(report.tasks.empty());
  EXPECT_FALSE(report.hasAnomaly());
  auto doc = nlohmann::json::parse(emitStructured(report));
  EXPECT_EQ(doc.at("tasks"), nlohmann::json::array());
  EXPECT_EQ(doc.at("summary").at("tasks"), 0);
}

TEST(Job, RoundTripThroughPrinter) {
  for (const auto& name : catalogNames()) {
    auto spec = catalog(name);
    EXPECT_EQ(parseJob(printJob(spec)), spec) << name;
  }
}

TEST(Job, DegreeBoundTruncatesInsteadOfFailing) {
  auto spec = parseJob(kCuspJob);
  RunOptions opts;
  opts.degreeBound = 0;
  auto report = runJob(spec, opts);
  ASSERT_EQ(report.tasks.size(), 1u);
  EXPECT_NE(report.tasks[0].status, TaskStatus::Ok);
}

TEST(Job, ExpectationMismatchIsReported) {
  std::string text = R"({"field": 7, "variables": ["x"],
    "modules": [{"name": "q", "quotient": ["x^3"]}],
    "tasks": [{"op": "length", "module": "q", "expect": 4}]})";
  auto report = runJob(parseJob(text));
  ASSERT_EQ(report.tasks.size(), 1u);
  EXPECT_EQ(report.tasks[0].expectation, "failed");
  EXPECT_TRUE(report.hasAnomaly());
}

TEST(Catalog, UnknownNameListsEntries) {
  try {
    catalog("nope");
    FAIL() << "expected an input error";
  } catch (const InputError& e) {
    std::string msg = e.what();
    for (const auto& name : catalogNames()) EXPECT_NE(msg.find(name), std::string::npos) << name;
  }
}

TEST(Catalog, EntriesMeetTheirExpectations) {
  for (const auto& name : catalogNames()) {
    auto report = runJob(catalog(name));
    for (const auto& t : report.tasks) {
      EXPECT_EQ(t.status, TaskStatus::Ok) << name << " " << t.op << " " << t.error;
      EXPECT_NE(t.expectation, "failed") << name << " " << t.op << " " << t.result.dump();
    }
    EXPECT_FALSE(report.hasAnomaly()) << name;
  }
}

TEST(Catalog, StructuredOutputMatchesGolden) {
  for (const auto& name : catalogNames()) {
    std::string golden = readFile(std::string(HWPROBE_GOLDEN_DIR) + "/" + name + ".json");
    ASSERT_FALSE(golden.empty()) << name;
    EXPECT_EQ(emitStructured(runJob(catalog(name))), golden) << name;
  }
}

TEST(Report, StructuredOutputIsDeterministic) {
  auto spec = catalog("cusp-hw");
  EXPECT_EQ(emitStructured(runJob(spec)), emitStructured(runJob(spec)));
}

TEST(Report, TextOutputMentionsEveryTask) {
  auto report = runJob(catalog("cusp-hw"));
  std::string text = emitText(report);
  for (const auto& t : report.tasks) EXPECT_NE(text.find(t.op), std::string::npos) << t.op;
}
