#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "afdt/cli.h"

namespace afdt {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run afdt(std::vector<std::string> args) {
  args.insert(args.begin(), "afdt");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const char* file) { return std::string(AFDT_CORPUS_DIR) + "/" + file; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("afdt_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST(Cli, ValidateCleanModel) {
  auto r = afdt({"validate", corpus("fig4.afdt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
  r = afdt({"validate", corpus("fig4.afdt"), "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(r.out), nlohmann::json::parse(R"({"violations": []})"));
}

TEST_F(TempDir, ValidateReportsViolations) {
  auto path = write("cyclic.afdt", "toplevel T; T and T;");
  auto r = afdt({"validate", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("CYCLE T", 0), 0u) << r.out;
  r = afdt({"validate", path, "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["violations"][0]["code"], "CYCLE");
  EXPECT_EQ(j["violations"][0]["node"], "T");

  // Analyses refuse invalid models.
  r = afdt({"mcs", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("CYCLE"), std::string::npos);
}

TEST_F(TempDir, ParseErrorsAreUsageErrors) {
  auto path = write("bad.afdt", "toplevel T;\nT xor A;\n");
  auto r = afdt({"validate", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(":2:3: UNKNOWN_KEYWORD"), std::string::npos) << r.err;
  EXPECT_EQ(afdt({"validate", (dir_ / "missing.afdt").string()}).code, 2);
}

TEST(Cli, McsFig3) {
  auto r = afdt({"mcs", corpus("fig3.afdt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{A1, A2}\n{A1, C1}\n{A1, C2}\n{A2, C2}\n");
}

TEST(Cli, McsFig4WithDefenses) {
  auto r = afdt({"mcs", corpus("fig4.afdt"), "--defenses", "D1,D2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{A1, C1, C3}\n");

  r = afdt({"mcs", corpus("fig4.afdt"), "--defenses", "D2", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["defense"], nlohmann::json::array({"D2"}));
  EXPECT_EQ(j["cuts"], nlohmann::json::parse(R"([["A1","C1"]])"));

  r = afdt({"mcs", corpus("fig4.afdt"), "--format", "csv"});
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "index,size,members");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
}

TEST(Cli, UnknownDefenseIsUsageError) {
  auto r = afdt({"mcs", corpus("fig4.afdt"), "--defenses", "NOPE"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("UNKNOWN_DEFENSE"), std::string::npos);
}

TEST(Cli, TableMatchesGolden) {
  auto r = afdt({"table", corpus("fig4.afdt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(std::string(AFDT_GOLDEN_DIR) + "/fig4_table.txt"));
  r = afdt({"table", corpus("fig4.afdt"), "--ascii"});
  EXPECT_EQ(r.out.find("✗"), std::string::npos);
  EXPECT_NE(r.out.find("| -"), std::string::npos);
}

TEST(Cli, ImpactMatchesGolden) {
  auto r = afdt({"impact", corpus("gsaas.afdt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(std::string(AFDT_GOLDEN_DIR) + "/gsaas_impact.txt"));
  r = afdt({"impact", corpus("gsaas.afdt"), "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(r.out).size(), 22u);
}

TEST(Cli, EvalExitCodes) {
  auto r = afdt({"eval", corpus("fig3.afdt"), "--active", "C1,A1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "TLE: active\n");
  r = afdt({"eval", corpus("fig3.afdt"), "--active", "A1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "TLE: inactive\n");
  r = afdt({"eval", corpus("fig4.afdt"), "--active", "C1,A1,C3,D1", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["tle"], true);
  EXPECT_EQ(afdt({"eval", corpus("fig3.afdt"), "--active", "G1"}).code, 2);
}

TEST_F(TempDir, ProbExactAndMonteCarlo) {
  auto probs = write("p.json", R"({"A1":0.5,"A2":0.5,"C1":0.5,"C2":0.5})");
  auto r = afdt({"prob", corpus("fig3.afdt"), "--probs", probs});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0.5625 exact\n");

  r = afdt({"prob", corpus("fig3.afdt"), "--probs", probs, "--mc", "1000", "--seed", "7", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["method"], "MONTE_CARLO");
  EXPECT_EQ(j["samples"], 1000);
  EXPECT_EQ(j["seed"], 7);
  EXPECT_NEAR(j["value"].get<double>(), 0.5625, 0.06);

  auto partial = write("q.json", R"({"A1":0.5})");
  r = afdt({"prob", corpus("fig3.afdt"), "--probs", partial});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("MISSING_PROB"), std::string::npos);
  EXPECT_EQ(afdt({"prob", corpus("fig3.afdt")}).code, 2);
}

TEST_F(TempDir, JsonModelInput) {
  auto r = afdt({"dot", corpus("fig3.afdt"), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(nlohmann::json::parse(r.out)["dot"].get<std::string>().find("digraph"), std::string::npos);

  auto path = write("m.afdt.json",
                    R"({"tle":"T","nodes":[{"id":"T","kind":"or","children":["A","B"]},)"
                    R"({"id":"A","kind":"bas"},{"id":"B","kind":"bcf"}]})");
  r = afdt({"mcs", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{A}\n{B}\n");

  auto bad = write("bad.json", R"({"nodes":[]})");
  r = afdt({"mcs", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("SCHEMA_ERROR"), std::string::npos);
}

TEST(Cli, Usage) {
  EXPECT_EQ(afdt({}).code, 2);
  EXPECT_EQ(afdt({"frobnicate"}).code, 2);
  EXPECT_EQ(afdt({"mcs", corpus("fig3.afdt"), "--format", "xml"}).code, 2);
  EXPECT_EQ(afdt({"--help"}).code, 0);
}

}  // namespace
}  // namespace afdt
