#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spinal_cli/cli.hpp"

namespace spinal::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("spinalfill_cli_test_" + name);
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

TEST(Cli, TwistPrintsComposedMatrix) {
  const auto r = invoke({"twist", "--preset", "a2-3pt-n2", "--word", "t1 t2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "[[8,3],[-3,-1]]\n");
}

TEST(Cli, SnfPrintsDiagonalAndTransforms) {
  const auto r = invoke({"snf", "--matrix", "[[0,-3],[0,0]]"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("diag(3,0)"), std::string::npos);
  EXPECT_NE(r.out.find("U = "), std::string::npos);
  EXPECT_NE(r.out.find("V = "), std::string::npos);

  const auto j = invoke({"snf", "--matrix", "[[54,21],[-21,-9]]", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["diagonal"], nlohmann::json::array({"3", "15"}));
  EXPECT_EQ(doc["cokernel"], "Z/3+Z/15");
}

TEST(Cli, FillingsCsv) {
  const auto r =
      invoke({"fillings", "--preset", "a2-3pt-n3", "--word", "t1", "--kmax", "5", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "k,degree,rank,invariant_factors,class");
  std::vector<std::string> torsion;
  while (std::getline(lines, line)) {
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cols.push_back(cell);
    if (line.back() == ',') cols.emplace_back();
    ASSERT_EQ(cols.size(), 5u) << line;
    EXPECT_EQ(cols[0], cols[4]);  // class id equals k here
    if (cols[1] == "3") torsion.push_back(cols[3]);
  }
  EXPECT_EQ(torsion, (std::vector<std::string>{"3", "6", "9", "12", "15"}));
}

TEST(Cli, FillingsJsonAndTable) {
  const auto j =
      invoke({"fillings", "--preset", "a2-3pt-n2", "--word", "t1 t2", "--kmax", "3", "--format", "json"});
  ASSERT_EQ(j.code, 0) << j.err;
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["distinct_classes"], 3);
  EXPECT_EQ(doc["entries"][2]["torsion_order"], "320");
  EXPECT_TRUE(doc.contains("torsion_placement"));

  const auto t = invoke({"fillings", "--preset", "a2-3pt-n1", "--word", "t1", "--kmax", "3"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_NE(t.out.find("Z/3"), std::string::npos);
  EXPECT_NE(t.out.find("distinct homology types: 3 of 3"), std::string::npos);
}

TEST(Cli, FormHomologyTorus) {
  EXPECT_EQ(invoke({"form", "--preset", "a2-3pt-n3"}).out, "[[0,3],[-3,0]]\n");
  EXPECT_EQ(invoke({"homology", "--preset", "a2-3pt-n3"}).out, "H_0  Z\nH_1  Z^2\nH_3  Z^2\n");
  const auto torus = invoke({"torus", "--preset", "a2-3pt-n3", "--word", "t1", "--format", "csv"});
  EXPECT_NE(torus.out.find("3,1,3\n"), std::string::npos) << torus.out;
  EXPECT_EQ(invoke({"form", "--preset", "a2-3pt-n1"}).code, 1);
}

TEST(Cli, ValidateEmitRoundTrips) {
  const auto graph_path = temp_file("graph.json");
  write_file(graph_path, R"({"dimension": 4, "vertices": ["a","b","c"],
    "edges": [{"between": ["a","b"]}, {"between": ["b","c"], "sign": -1}, {"between": ["a","c"]}]})");
  const auto first = invoke({"validate", "--graph", graph_path.string(), "--emit"});
  ASSERT_EQ(first.code, 0) << first.err;

  const auto echoed = temp_file("echo.json");
  write_file(echoed, first.out);
  const auto second = invoke({"validate", "--graph", echoed.string(), "--emit"});
  EXPECT_EQ(second.code, 0);
  EXPECT_EQ(second.out, first.out);
  EXPECT_EQ(invoke({"validate", "--graph", echoed.string(), "--format", "json"}).out,
            invoke({"validate", "--graph", graph_path.string(), "--format", "json"}).out);
}

TEST(Cli, InvalidGraphExitsOne) {
  const auto path = temp_file("disconnected.json");
  write_file(path, R"({"dimension": 2, "vertices": ["a","b"], "edges": []})");
  const auto r = invoke({"validate", "--graph", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("disconnected"), std::string::npos);
  EXPECT_EQ(invoke({"homology", "--graph", path.string()}).code, 1);
  EXPECT_EQ(invoke({"homology", "--graph", "/nonexistent/graph.json"}).code, 1);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"frobnicate"}).code, 1);
  EXPECT_EQ(invoke({"twist", "--preset", "a2-3pt-n2", "--bogus"}).code, 1);
  EXPECT_EQ(invoke({"twist", "--preset", "a2-3pt-n2"}).code, 1);  // missing --word
  EXPECT_EQ(invoke({"twist", "--preset", "a2-3pt-n2", "--word", "t9"}).code, 1);
  EXPECT_EQ(invoke({"fillings", "--preset", "a2-3pt-n3", "--word", "t1"}).code, 1);
  EXPECT_EQ(invoke({"fillings", "--preset", "a2-3pt-n3", "--word", "t1", "--kmax", "0"}).code, 1);
  EXPECT_EQ(invoke({"form", "--preset", "nope"}).code, 1);
  EXPECT_EQ(invoke({"form"}).code, 1);
  EXPECT_EQ(invoke({"form", "--preset", "a2-3pt-n3", "--graph", "x.json"}).code, 1);
  EXPECT_EQ(invoke({"form", "--preset", "a2-3pt-n3", "--format", "xml"}).code, 1);
  EXPECT_EQ(invoke({"snf", "--matrix", "[[1,2],[3]]"}).code, 1);
  EXPECT_EQ(invoke({"snf"}).code, 1);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, OutputIsDeterministicAndCanGoToFile) {
  const std::vector<std::string> args{"fillings", "--preset", "a2-3pt-n2", "--word", "t1 t2",
                                      "--kmax", "6", "--format", "json"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  EXPECT_EQ(a.out, b.out);

  const auto path = temp_file("out.json");
  auto with_out = args;
  with_out.insert(with_out.end(), {"--out", path.string()});
  const auto c = invoke(with_out);
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(c.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), a.out);
}

}  // namespace
}  // namespace spinal::cli
