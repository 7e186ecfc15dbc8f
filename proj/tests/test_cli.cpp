#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "kpvc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = kpvc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(KPVC_DATA_DIR) + "/" + name; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("kpvc_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(CliSolve, ReadsEdgeListFile) {
  auto r = cli({"solve", "-i", data("k6mm.el"), "-k", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "psi=4\ncover=0 1 2 3\noptimal=true\nresidual_longest_path=1\n");
}

TEST(CliSolve, FamilyAndJson) {
  auto r = cli({"solve", "-f", "petersen", "-k", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = kpvc::Json::parse(r.out);
  EXPECT_EQ(j["psi"], 4);
  EXPECT_EQ(j["k"], 4);
  EXPECT_EQ(j["optimal"], true);
}

TEST(CliSolve, Graph6Input) {
  auto path = temp_file("c4.g6");
  std::ofstream(path) << "Cr\n";
  auto r = cli({"solve", "-i", path.string(), "-k", "3"});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 6), "psi=2\n");
}

TEST(CliSolve, ExitCodes) {
  EXPECT_EQ(cli({"solve", "-f", "path(30)", "-k", "3"}).code, 3);
  EXPECT_EQ(cli({"solve", "-k", "3"}).code, 2);
  EXPECT_EQ(cli({"solve", "-i", "/nonexistent/file.el"}).code, 2);
  EXPECT_EQ(cli({"solve", "-f", "cycle(4", "-k", "3"}).code, 2);
  EXPECT_EQ(cli({"solve", "-f", "cycle(4)", "-k", "1"}).code, 2);
  EXPECT_EQ(cli({"nosuch"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  auto bad = temp_file("bad.el");
  std::ofstream(bad) << "3 2\n0 1\n";
  EXPECT_EQ(cli({"solve", "-i", bad.string()}).code, 2);
  std::filesystem::remove(bad);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(CliCover, NamedMethod) {
  auto r = cli({"cover", "-f", "cycle(4)", "-k", "3", "-m", "nm4_psi3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("algorithm=nm4_psi3\n"), std::string::npos);
  EXPECT_NE(r.out.find("size=2\n"), std::string::npos);
  EXPECT_NE(r.out.find("guarantee_met=true\n"), std::string::npos);
}

TEST(CliCover, AutoAndJson) {
  auto r = cli({"cover", "-f", "ktree(20,3)", "-k", "4", "-m", "chordal_decomp", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = kpvc::Json::parse(r.out);
  EXPECT_EQ(j["algorithm"], "chordal_decomp");
  EXPECT_EQ(j["guarantee_value"], "80/7");
  EXPECT_TRUE(j["trace"].is_array());
  EXPECT_EQ(cli({"cover", "-f", "petersen", "-k", "3"}).code, 0);
}

TEST(CliCover, PairPeelOptions) {
  auto r = cli({"cover", "-f", "gnm(12,40)", "-k", "3", "-m", "pair_peel", "--base", "nm4_psi3", "--xs", "3,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("algorithm=pair_peel"), std::string::npos);
}

TEST(CliCover, ListAndRefusal) {
  auto list = cli({"cover", "--list"});
  ASSERT_EQ(list.code, 0);
  EXPECT_EQ(list.out.rfind("trivial", 0), 0u);
  EXPECT_NE(list.out.find("from_forest"), std::string::npos);
  auto r = cli({"cover", "-f", "cycle(4)", "-k", "3", "-m", "chordal_classes"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("not chordal"), std::string::npos);
}

TEST(CliBounds, TextJsonCsv) {
  auto t = cli({"bounds", "-f", "cycle(4)", "-k", "3", "--applicable"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_NE(t.out.find("upper psi3_n_plus_m_over_4 2"), std::string::npos);
  EXPECT_EQ(t.out.find("n/a"), std::string::npos);
  auto j = kpvc::Json::parse(cli({"bounds", "-f", "octahedron", "-k", "3", "--planar", "--format", "json"}).out);
  bool found = false;
  for (const auto& row : j)
    if (row["name"] == "planar_psi3_11_15") {
      found = true;
      EXPECT_EQ(row["numerator"], "22");
      EXPECT_EQ(row["denominator"], "5");
    }
  EXPECT_TRUE(found);
  auto c = cli({"bounds", "-f", "cycle(4)", "-k", "3", "--format", "csv"});
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "name,kind,numerator,denominator,applicable,reason");
  EXPECT_EQ(cli({"bounds", "-f", "cycle(4)", "--format", "xml"}).code, 2);
}

TEST(CliPairs, DefaultChain) {
  auto r = cli({"pairs"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "x a b");
  EXPECT_NE(r.out.find("14 19/24 1/72\n"), std::string::npos);
}

TEST(CliPairs, CustomBaseAndErrors) {
  auto r = cli({"pairs", "--base", "1/4,1/4", "--xs", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = kpvc::Json::parse(r.out);
  EXPECT_EQ(j.back()["a"], "2/5");
  EXPECT_EQ(j.back()["b"], "3/20");
  EXPECT_EQ(cli({"pairs", "--xs", "3"}).code, 2);
  EXPECT_EQ(cli({"pairs", "--base", "x,y"}).code, 2);
}

TEST(CliGenerate, EdgeListAndGraph6) {
  auto el = cli({"generate", "-f", "cycle(4)"});
  ASSERT_EQ(el.code, 0);
  EXPECT_EQ(el.out, "4 4\n0 1\n0 3\n1 2\n2 3\n");
  auto g6 = cli({"generate", "-f", "petersen", "--format", "graph6"});
  EXPECT_EQ(g6.out, "IheA@GUAo\n");
  auto path = temp_file("gen.el");
  ASSERT_EQ(cli({"generate", "-f", "gnm(9,14)", "--seed", "4", "-o", path.string()}).code, 0);
  auto back = cli({"solve", "-i", path.string(), "-k", "3"});
  auto direct = cli({"solve", "-f", "gnm(9,14)", "--seed", "4", "-k", "3"});
  std::filesystem::remove(path);
  EXPECT_EQ(back.out, direct.out);
}

TEST(CliVerify, ExhaustiveSummary) {
  auto r = cli({"verify", "--exhaustive", "1-4", "--k", "3,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("graphs=75 instances=150", 0), 0u);
  EXPECT_NE(r.out.find("violations=0"), std::string::npos);
  EXPECT_NE(r.out.find("tight psi3_n_plus_m_over_4 3\n"), std::string::npos);
}

TEST(CliVerify, SamplesJsonAndCsv) {
  auto j = cli({"verify", "--exhaustive", "", "--sample", "gnm(8):5", "--k", "3", "--format", "json"});
  ASSERT_EQ(j.code, 0) << j.err;
  auto doc = kpvc::Json::parse(j.out);
  EXPECT_EQ(doc["totals"]["graphs"], 5);
  EXPECT_EQ(doc["rows"].size(), 5u);
  auto c = cli({"verify", "--exhaustive", "3", "--k", "3", "--no-algorithms", "--format", "csv"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.find(",algorithm,"), std::string::npos);
  EXPECT_EQ(cli({"verify", "--sample", "gnm(8)"}).code, 2);
  EXPECT_EQ(cli({"verify", "--exhaustive", "7"}).code, 2);
}

TEST(CliTable, DefaultGrid) {
  auto r = cli({"table"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3 4 2/3 2/3 both\n"), std::string::npos);
  auto j = kpvc::Json::parse(cli({"table", "--k", "5", "--omega", "3", "--format", "json"}).out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["best"], "right");
}
