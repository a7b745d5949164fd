#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli/cli.hpp"

namespace {

namespace fs = std::filesystem;
using kolkata::cli::ColumnSelector;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "kolkata");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code =
      kolkata::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("kolkata-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) const {
    const auto path = dir_ / name;
    std::ofstream(path) << content;
    return path.string();
  }

  fs::path dir_;
};

std::vector<double> read(const std::string& text, const ColumnSelector& column) {
  std::istringstream in(text);
  return kolkata::cli::read_incomes(in, column);
}

TEST(ParseColumn, DigitsSelectByIndex) {
  EXPECT_EQ(kolkata::cli::parse_column("2"), ColumnSelector(std::size_t{2}));
  EXPECT_EQ(kolkata::cli::parse_column("income"), ColumnSelector(std::string("income")));
}

TEST(ReadIncomes, SkipsBlankAndCommentLines) {
  EXPECT_EQ(read("# header comment\n1\n\n2.5\n# more\n3\n", std::size_t{0}),
            (std::vector<double>{1.0, 2.5, 3.0}));
}

TEST(ReadIncomes, SelectsColumnByIndexAndName) {
  const std::string csv = "id,income\n1,10\n2,20\n";
  EXPECT_EQ(read(csv, std::string("income")), (std::vector<double>{10.0, 20.0}));
  EXPECT_EQ(read("1,10\n2,20\n", std::size_t{1}), (std::vector<double>{10.0, 20.0}));
}

TEST(ReadIncomes, ReportsLineOfBadField) {
  try {
    (void)read("1\n2\nabc\n", std::size_t{0});
    FAIL() << "expected InputError";
  } catch (const kolkata::cli::InputError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ReadIncomes, HeaderWithoutColumnNameIsAnError) {
  EXPECT_THROW((void)read("income\n1\n", std::size_t{0}), kolkata::cli::InputError);
}

TEST(ReadIncomes, MissingColumnIsAnError) {
  EXPECT_THROW((void)read("1\n2\n", std::size_t{3}), kolkata::cli::InputError);
  EXPECT_THROW((void)read("a,b\n1,2\n", std::string("c")), kolkata::cli::InputError);
}

TEST(ReadIncomes, NegativeIncomeIsValidationError) {
  EXPECT_THROW((void)read("1\n-2\n", std::size_t{0}), kolkata::ValidationError);
}

TEST_F(TempDir, AnalyzeFourIncomes) {
  const auto path = write("four.csv", "1\n2\n3\n4\n");
  const auto result = run({"analyze", "--input", path});
  ASSERT_EQ(result.code, 0) << result.err;
  const auto j = nlohmann::ordered_json::parse(result.out);
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"k", "normalized_k", "gini", "pietra",
                                            "pietra_argmax", "p_star", "pareto_ratio", "n",
                                            "mean", "tolerances"}));
  EXPECT_NEAR(j["gini"].get<double>(), 0.25, 1e-15);
  EXPECT_NEAR(j["pietra"].get<double>(), 0.2, 1e-15);
  EXPECT_NEAR(j["k"].get<double>(), 1.3 / 2.2, 1e-15);
  EXPECT_EQ(j["n"].get<int>(), 4);
  EXPECT_DOUBLE_EQ(j["mean"].get<double>(), 2.5);
}

TEST_F(TempDir, AnalyzeIsDeterministic) {
  const auto path = write("four.csv", "1\n2\n3\n4\n");
  EXPECT_EQ(run({"analyze", "--input", path}).out, run({"analyze", "--input", path}).out);
}

TEST(Analyze, ParametricDistributions) {
  const auto pareto = run({"analyze", "--dist", "pareto", "--alpha", "1.160964"});
  ASSERT_EQ(pareto.code, 0) << pareto.err;
  EXPECT_NEAR(nlohmann::json::parse(pareto.out)["k"].get<double>(), 0.8, 1e-6);

  const auto exponential = run({"analyze", "--dist", "exponential", "--lambda", "1"});
  ASSERT_EQ(exponential.code, 0) << exponential.err;
  EXPECT_NEAR(nlohmann::json::parse(exponential.out)["k"].get<double>(), 0.6822, 5e-5);
}

TEST(Analyze, SchemaIsStableAcrossCurveKinds) {
  const auto keys_of = [](const std::string& text) {
    std::vector<std::pair<std::string, nlohmann::json::value_t>> keys;
    const auto j = nlohmann::ordered_json::parse(text);
    for (const auto& item : j.items()) {
      const auto type = item.value().is_number() ? nlohmann::json::value_t::number_float
                                                 : item.value().type();
      keys.emplace_back(item.key(), type);
    }
    return keys;
  };
  const auto reference = keys_of(run({"analyze", "--preset", "lf1"}).out);
  for (const auto& name : {"exp1", "circular", "identity", "oligarchy:0.3"}) {
    EXPECT_EQ(keys_of(run({"analyze", "--preset", name}).out), reference) << name;
  }
}

TEST(Analyze, TsvFormat) {
  const auto result = run({"analyze", "--preset", "oligarchy:0.5", "--format", "tsv"});
  ASSERT_EQ(result.code, 0);
  EXPECT_NE(result.out.find("gini\t0.5\n"), std::string::npos) << result.out;
}

TEST_F(TempDir, ExitCodes) {
  EXPECT_EQ(run({"analyze", "--input", (dir_ / "missing.csv").string()}).code, 2);
  EXPECT_EQ(run({"analyze", "--input", write("bad.csv", "1\nx\n")}).code, 2);
  EXPECT_EQ(run({"analyze", "--input", write("neg.csv", "1\n-1\n")}).code, 3);
  EXPECT_EQ(run({"analyze", "--input", write("zero.csv", "0\n0\n")}).code, 3);
  EXPECT_EQ(run({"analyze", "--dist", "pareto", "--alpha", "0.5"}).code, 3);
  EXPECT_EQ(run({"analyze", "--dist", "pareto"}).code, 2);
  EXPECT_EQ(run({"analyze"}).code, 2);
  EXPECT_EQ(run({"analyze", "--preset", "nope"}).code, 2);
  EXPECT_EQ(run({"analyze", "--preset", "nonconvex"}).code, 3);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Curve, UniformRow) {
  const auto result = run({"curve", "--preset", "uniform01", "--points", "5", "--format", "tsv"});
  ASSERT_EQ(result.code, 0) << result.err;
  EXPECT_NE(result.out.find("p\tL\tLhat\tD\n"), std::string::npos);
  EXPECT_NE(result.out.find("\n0.5\t0.25\t0.75\t0.125\n"), std::string::npos) << result.out;
  EXPECT_NE(result.out.find("# k\t"), std::string::npos);
  EXPECT_NE(result.out.find("# p_star\t"), std::string::npos);
  EXPECT_NE(result.out.find("# pietra_argmax\t"), std::string::npos);
}

TEST(Curve, EndpointRows) {
  const auto result = run({"curve", "--dist", "circular", "--points", "3", "--format", "tsv"});
  ASSERT_EQ(result.code, 0) << result.err;
  EXPECT_NE(result.out.find("\n0\t0\t1\t0\n"), std::string::npos) << result.out;
  EXPECT_NE(result.out.find("\n1\t1\t0\t0\n"), std::string::npos) << result.out;
}

TEST(Curve, EgalitarianLEqualsP) {
  const auto result = run({"curve", "--dist", "identity", "--points", "5", "--format", "json"});
  ASSERT_EQ(result.code, 0) << result.err;
  const auto j = nlohmann::json::parse(result.out);
  ASSERT_EQ(j["columns"][1], "L");
  for (const auto& row : j["rows"]) EXPECT_EQ(row[0], row[1]);
}

TEST(Curve, RejectsTinyGrid) {
  EXPECT_EQ(run({"curve", "--preset", "exp1", "--points", "1"}).code, 2);
}

TEST(Compare, PiecewiseExamples) {
  const auto result = run({"compare", "--preset", "lf1", "--preset", "lf2"});
  ASSERT_EQ(result.code, 0) << result.err;
  const auto j = nlohmann::json::parse(result.out);
  EXPECT_EQ(j["curves"].size(), 2u);
  EXPECT_FALSE(j["discordant"].empty());
  const auto& pietra = j["orderings"]["pietra"];
  EXPECT_EQ(pietra[0]["label"], "lf2");
}

TEST(Compare, DuplicateLabelsAreMadeUnique) {
  const auto result = run({"compare", "--preset", "exp1", "--preset", "exp1"});
  ASSERT_EQ(result.code, 0) << result.err;
  const auto j = nlohmann::json::parse(result.out);
  EXPECT_EQ(j["curves"][0]["label"], "exp1");
  EXPECT_EQ(j["curves"][1]["label"], "exp1#2");
}

TEST_F(TempDir, CompareReportsEachInvalidInput) {
  const auto result = run({"compare", "--preset", "lf1", "--preset", "nonconvex", "--input",
                           write("neg.csv", "-1\n")});
  EXPECT_EQ(result.code, 3);
  EXPECT_NE(result.err.find("nonconvex"), std::string::npos) << result.err;
  EXPECT_NE(result.err.find("neg.csv"), std::string::npos) << result.err;
}

TEST(Compare, NeedsTwoSources) {
  EXPECT_EQ(run({"compare", "--preset", "lf1"}).code, 2);
}

TEST(Verify, DefaultSeedPasses) {
  const auto result = run({"verify", "--random", "100"});
  EXPECT_EQ(result.code, 0) << result.out;
  EXPECT_NE(result.out.find("6/6 suites passed"), std::string::npos);
}

TEST(Verify, OrderingSuiteCountsRandomCurves) {
  const auto result = run({"verify", "--suite", "ordering", "--random", "1000"});
  EXPECT_EQ(result.code, 0);
  EXPECT_NE(result.out.find("random 1000/1000 PASS"), std::string::npos) << result.out;
}

TEST(Verify, NonConvexPresetFails) {
  const auto result = run({"verify", "--suite", "ordering", "--random", "5", "--preset",
                           "nonconvex"});
  EXPECT_EQ(result.code, 1);
  EXPECT_NE(result.out.find("failure [nonconvex]"), std::string::npos) << result.out;
}

TEST(Verify, UnknownSuite) {
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, 2);
}

TEST_F(TempDir, OutWritesFile) {
  const auto target = (dir_ / "report.json").string();
  const auto result = run({"analyze", "--preset", "exp1", "--out", target});
  ASSERT_EQ(result.code, 0) << result.err;
  EXPECT_TRUE(result.out.empty());
  std::ifstream in(target);
  const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(written, run({"analyze", "--preset", "exp1"}).out);
  for (const auto& entry : fs::directory_iterator(dir_)) {
    EXPECT_EQ(entry.path().filename(), "report.json");
  }
}

}  // namespace
