#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(SCLAYOUT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  Outcome o;
  if (!pipe) return o;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) o.out.append(buf, got);
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::string data(const std::string& name) { return std::string(SCLAYOUT_DATA_DIR) + "/" + name; }

std::string save(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("sclayout_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

nlohmann::json report(const std::string& args) {
  const Outcome o = run("--json " + args);
  EXPECT_LE(o.code, 1) << args;
  return nlohmann::json::parse(o.out);
}

void expect_verified(const std::string& name, const std::string& args) {
  const Outcome o = run("--json " + args);
  ASSERT_LE(o.code, 1) << args;
  const Outcome v = run("verify " + save(name + ".json", o.out));
  EXPECT_EQ(v.code, 0) << args << "\n" << v.out;
  EXPECT_NE(v.out.find("verified"), std::string::npos);
}

}  // namespace

TEST(Cli, CutwidthOfTriangle) {
  const Outcome o = run("ctw " + data("triangle.dg"));
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("value: 1\n"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("cuts: 0 1 1 0\n"), std::string::npos) << o.out;
  const auto r = report("ctw " + data("triangle.dg"));
  EXPECT_EQ(r["value"], 1);
  EXPECT_EQ(r["witness"], nlohmann::json({1, 2, 3}));
  EXPECT_EQ(r["input"]["sha256"].get<std::string>().size(), 64u);
}

TEST(Cli, OlaSolversAgree) {
  for (const char* solver : {"brute", "dp", "pure-dp"}) {
    EXPECT_EQ(report(std::string("ola --solver ") + solver + " " + data("two_triangles.dg"))["value"], 4) << solver;
  }
}

TEST(Cli, TuringKernelRejectsBidirectedK5) {
  const Outcome o = run("turing-kernel --c 1 " + data("k5_bidirected.dg"));
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.out.find("verdict: REJECT"), std::string::npos) << o.out;
}

TEST(Cli, GeneratorPipesIntoSolver) {
  const Outcome o = run("gen circular --t 2 --x 1 | " + std::string(SCLAYOUT_CLI) + " ctw -");
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("value: 2\n"), std::string::npos) << o.out;
}

TEST(Cli, OutputIsByteStable) {
  for (const char* args : {"--json ctw ", "--json approx ", "--json lean "}) {
    EXPECT_EQ(run(args + data("k5_bidirected.dg")).out, run(args + data("k5_bidirected.dg")).out);
  }
  EXPECT_EQ(run("--seed 9 gen random --n 12 --p-sym 0.3").out, run("gen random --n 12 --p-sym 0.3 --seed 9").out);
  EXPECT_NE(run("--seed 9 gen random --n 12 --p-sym 0.3").out, run("--seed 10 gen random --n 12 --p-sym 0.3").out);
}

TEST(Cli, TimingOnlyOnRequest) {
  EXPECT_FALSE(report("ctw " + data("triangle.dg")).contains("wall_ms"));
  EXPECT_TRUE(report("--timing ctw " + data("triangle.dg")).contains("wall_ms"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("ctw " + save("bad.dg", "p digraph 2 1\na 1 1\n")).code, 2);
  EXPECT_EQ(run("ctw /nonexistent/file.dg").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("approx " + data("two_triangles.dg")).code, 2);
  EXPECT_EQ(run("--cap-n 4 --cap-k 2 ctw " + data("two_triangles.dg")).code, 2);
  EXPECT_EQ(run("--cap-n 4 ctw " + data("two_triangles.dg")).code, 0);
  EXPECT_EQ(run("ola-kernel --k 2 " + data("two_triangles.dg")).code, 1);
  EXPECT_EQ(run("ola-kernel --k 3 " + data("two_triangles.dg")).code, 0);
  EXPECT_EQ(run("cvd branch --c 0 --k 1 " + data("two_triangles.dg")).code, 1);
  EXPECT_EQ(run("cvd branch --c 0 --k 2 " + data("two_triangles.dg")).code, 0);
  EXPECT_EQ(run("gen nae " + save("trivial.cnf", "p cnf 3 1\n1 2 3 0\n")).code, 2);
}

TEST(Cli, ReportsVerify) {
  expect_verified("ctw", "ctw " + data("two_triangles.dg"));
  expect_verified("ola", "ola " + data("k5_bidirected.dg"));
  expect_verified("approx", "approx " + data("k5_bidirected.dg"));
  expect_verified("lean", "lean " + data("k5_bidirected.dg"));
  expect_verified("turing", "turing-kernel --c 1 " + data("k5_bidirected.dg"));
  expect_verified("turing-yes", "turing-kernel --c 6 " + data("k5_bidirected.dg"));
  expect_verified("olak", "ola-kernel --k 2 " + data("two_triangles.dg"));
  expect_verified("obs", "obstruction --c 1 " + data("k5_bidirected.dg"));
  expect_verified("obs-within", "obstruction --c 1 " + data("two_triangles.dg"));
  expect_verified("enum", "enumerate --c 1 --nmax 4 --family sc");
  expect_verified("cvd-branch", "cvd branch --c 0 --k 2 " + data("two_triangles.dg"));
  expect_verified("cvd-approx", "cvd approx --c 0 " + data("two_triangles.dg"));
  expect_verified("cvd-kernel", "cvd kernel --c 0 --k 2 " + data("two_triangles.dg"));
  expect_verified("gen-nae", "gen complement-nae " + data("single_clause.cnf"));
  expect_verified("gen-vc", "gen vc --c 1 " + data("path3.graph"));
  expect_verified("gen-rand", "--seed 3 gen random --n 9 --p-sym 0.2");
}

TEST(Cli, TournamentReportIsSorted) {
  const std::string path = save("circ.dg", run("gen circular --t 3 --x 1").out);
  const auto r = report("tournament " + path);
  EXPECT_EQ(r["ctw"], 5);
  expect_verified("tour", "tournament " + path);
}

TEST(Cli, TamperedReportFails) {
  auto r = report("ctw " + data("two_triangles.dg"));
  r["value"] = 0;
  EXPECT_EQ(run("verify " + save("tamper1.json", r.dump())).code, 1);
  r = report("ctw " + data("two_triangles.dg"));
  r["input"]["text"] = "p digraph 1 0\n";
  EXPECT_EQ(run("verify " + save("tamper2.json", r.dump())).code, 1);
  EXPECT_EQ(run("verify " + save("tamper3.json", "{not json")).code, 2);
}

TEST(Cli, HardnessGeneratorMetadata) {
  const Outcome o = run("gen complement-nae " + data("unsat_clause.cnf"));
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("c ctw_target 38\n"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("p digraph 14 "), std::string::npos);
}
