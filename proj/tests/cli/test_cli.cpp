#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "mixcay/report.hpp"

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

// stdout only; stderr is discarded.
CliRun run(const std::string& args) {
  const std::string cmd = std::string(MIXCAY_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "mixcay_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

const char* kBelowDelta = "--group Z4 --s0 2 --s1 2 --t0 0,1 --t1 0,2";

}  // namespace

TEST(Cli, AnalyzeBelowDelta) {
  const CliRun r = run(std::string("analyze ") + kBelowDelta);
  ASSERT_EQ(r.status, 0);
  const auto j = mixcay::Json::parse(r.out);
  EXPECT_EQ(j["connectivity"]["lambda"], 2);
  EXPECT_EQ(j["connectivity"]["delta"], 3);
  EXPECT_EQ(j["connectivity"]["is_max_lambda"], false);
  EXPECT_EQ(r.out, run(std::string("analyze ") + kBelowDelta).out);
}

TEST(Cli, AnalyzeSymmetricSquareLabels) {
  const CliRun r = run("analyze --group Z2 --s0 1 --s1 1 --t0 0 --t1 0");
  ASSERT_EQ(r.status, 0);
  const auto j = mixcay::Json::parse(r.out);
  EXPECT_EQ(j["connectivity"]["is_super_lambda"], false);
  const auto labels = j["family_labels"].get<std::vector<std::string>>();
  EXPECT_NE(std::find(labels.begin(), labels.end(), "symmetric_cycle"), labels.end());
  EXPECT_NE(std::find(labels.begin(), labels.end(), "family_F"), labels.end());
}

TEST(Cli, ClassifyBelowDelta) {
  const CliRun r = run(std::string("classify ") + kBelowDelta);
  ASSERT_EQ(r.status, 0);
  const auto j = mixcay::Json::parse(r.out);
  EXPECT_EQ(j["max_lambda"]["not_max_lambda"], true);
  EXPECT_EQ(j["max_lambda"]["condition"], 2);
  EXPECT_EQ(j["max_lambda"]["witness"]["subgroup"], (std::vector<int>{0, 2}));
}

TEST(Cli, ClassifyOneLayerSuperatom) {
  const CliRun r = run("classify --group Z4 --s0 2 --s1 1,3 --t0 0 --t1 0");
  ASSERT_EQ(r.status, 0);
  const auto j = mixcay::Json::parse(r.out);
  EXPECT_EQ(j["super_lambda"]["not_super_lambda"], true);
  EXPECT_EQ(j["super_lambda"]["condition"], 1);
}

TEST(Cli, ExportDotDirectedSquare) {
  const CliRun r = run("export --group Z2 --s0 none --s1 none --t0 1 --t1 0 --format dot");
  ASSERT_EQ(r.status, 0);
  std::size_t nodes = 0, arcs = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) {
    if (line.find("->") != std::string::npos) ++arcs;
    else if (line.find("[label=") != std::string::npos) ++nodes;
  }
  EXPECT_EQ(nodes, 4u);
  EXPECT_EQ(arcs, 4u);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
}

TEST(Cli, ExportJsonReingests) {
  const CliRun r = run(std::string("export --format json ") + kBelowDelta);
  ASSERT_EQ(r.status, 0);
  const auto j = mixcay::Json::parse(r.out);
  const auto params = scratch("d_params.json");
  write(params, j["params"].dump());
  const CliRun again = run("export --format json --params-file " + params.string());
  EXPECT_EQ(again.status, 0);
  EXPECT_EQ(again.out, r.out);
}

TEST(Cli, GroupFile) {
  const auto path = scratch("z3.txt");
  write(path, "order 3\n0 1 2\n1 2 0\n2 0 1\n");
  const CliRun r = run("analyze --group-file " + path.string() + " --s0 1 --s1 none --t0 0 --t1 0");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(mixcay::Json::parse(r.out)["connectivity"]["lambda"], 1);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("analyze --group Q7 --t0 0 --t1 0").status, 1);
  EXPECT_EQ(run("analyze --group Z3 --s0 0 --t0 0 --t1 0").status, 1);
  EXPECT_EQ(run("export --group Z2 --t0 0 --t1 0 --format svg").status, 1);
  EXPECT_EQ(run("analyze --group Z2 --s0 none --s1 none --t0 0 --t1 0").status, 2);
  EXPECT_EQ(run("classify --group Z2 --s0 none --s1 none --t0 0 --t1 0").status, 2);
  EXPECT_EQ(run("classify --group Z30 --s0 1 --s1 1 --t0 0 --t1 0").status, 3);
  const auto bad = scratch("bad.json");
  write(bad, "{not json");
  EXPECT_EQ(run("analyze --params-file " + bad.string()).status, 1);
}

TEST(Cli, CrosscheckIsDeterministic) {
  const CliRun a = run("crosscheck --groups Z2,Z3 --threads 1 --quiet");
  const CliRun b = run("crosscheck --groups Z2,Z3 --threads 2 --quiet");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = mixcay::Json::parse(a.out);
  EXPECT_EQ(j["instances_total"], 612);
  EXPECT_TRUE(j["mismatches"].empty());

  const auto space = scratch("space.json");
  write(space, R"({"groups":["Z5"],"sample_limit":50,"seed":9})");
  const CliRun s1 = run("crosscheck --quiet --space-file " + space.string());
  const CliRun s2 = run("crosscheck --quiet --space-file " + space.string());
  ASSERT_EQ(s1.status, 0);
  EXPECT_EQ(s1.out, s2.out);
  EXPECT_EQ(mixcay::Json::parse(s1.out)["instances_total"], 50);
}
