#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "oracles.hpp"

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run(const std::string& args) {
  std::string cmd = std::string(PATCHKIT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(PATCHKIT_DATA_DIR) + "/" + name; }

std::size_t count_prefix(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    if (line.rfind(prefix, 0) == 0) ++n;
  }
  return n;
}

}  // namespace

TEST(CliEval, Examples) {
  CliResult hex = run("eval --input " + data("hexagon.json") + " --at 0.5,0.25");
  EXPECT_EQ(hex.exit_code, 0);
  EXPECT_EQ(hex.out, "0.5 0.25\n");
  CliResult bern = run("eval --input " + data("bernstein1.json") + " --at 0.25");
  EXPECT_EQ(bern.exit_code, 0);
  EXPECT_EQ(bern.out, "0.25 0 0\n");
  EXPECT_EQ(run("eval --input " + data("hexagon.json") + " --at 2,0").exit_code, 3);
  EXPECT_EQ(run("eval --input " + data("segment.json") + " --at 1").exit_code, 2);
  EXPECT_EQ(run("eval --input " + data("hexagon.json") + " --at 0.5").exit_code, 2);
  EXPECT_EQ(run("eval --input /nonexistent.json --at 0").exit_code, 2);
}

TEST(CliTessellate, Examples) {
  CliResult sq = run("tessellate --input " + data("square.json") + " --grid 2 --out -");
  EXPECT_EQ(sq.exit_code, 0);
  EXPECT_EQ(count_prefix(sq.out, "v "), 4u);
  EXPECT_EQ(count_prefix(sq.out, "f "), 2u);

  CliResult pent = run("tessellate --input " + data("pentagon.json") + " --grid 21 --out -");
  EXPECT_EQ(pent.exit_code, 0);
  EXPECT_EQ(count_prefix(pent.out, "v "), oracle::pentagon_grid_count(21));
  EXPECT_EQ(run("tessellate --input " + data("pentagon.json") + " --grid 21 --out -").out, pent.out);

  EXPECT_EQ(run("tessellate --input " + data("square.json") + " --grid 1").exit_code, 2);
}

TEST(CliTessellate, WritesFile) {
  std::string path = ::testing::TempDir() + "patchkit_square.obj";
  EXPECT_EQ(run("tessellate --input " + data("square.json") + " --grid 3 --out " + path).exit_code, 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(count_prefix(text.str(), "v "), 9u);
  EXPECT_EQ(count_prefix(text.str(), "f "), 8u);
}

TEST(CliIpf, Examples) {
  CliResult seg = run("ipf --input " + data("segment.json") + " --at 1.0");
  EXPECT_EQ(seg.exit_code, 0);
  EXPECT_EQ(seg.out.substr(0, seg.out.find('\n')), "0.25 0.5 0.25");

  CliResult pent = run("ipf --input " + data("pentagon.json") + " --at 11/14,11/14");
  EXPECT_EQ(pent.exit_code, 0);
  std::istringstream in(pent.out);
  const double w[] = {3, 5, 2, 5, 7, 2, 2, 2};
  for (double wa : w) {
    double v;
    in >> v;
    EXPECT_NEAR(v, wa / 28.0, 1e-14);
  }

  EXPECT_EQ(run("ipf --input " + data("segment.json") + " --at 0").exit_code, 3);
  EXPECT_EQ(run("ipf --input " + data("pentagon.json") + " --at 0.3,1.6 --max-iter 1 --tol 1e-14")
                .exit_code,
            4);
}

TEST(CliCheck, Verdicts) {
  auto verdict = [](const std::string& file) {
    CliResult r = run("check --input " + data(file) + " --samples 300");
    EXPECT_EQ(r.exit_code, 0);
    auto pos = r.out.find("\"verdict\":\"");
    return pos == std::string::npos ? std::string() : r.out.substr(pos + 11, r.out.find('"', pos + 11) - pos - 11);
  };
  EXPECT_EQ(verdict("bernstein3.json"), "pass");
  EXPECT_EQ(verdict("pentagon.json"), "fail");
  EXPECT_EQ(verdict("pentagon_tuned.json"), "pass");
  EXPECT_EQ(verdict("hexagon.json"), "pass");
  EXPECT_EQ(run("check --input " + data("pentagon.json") + " --seed 4").out,
            run("check --input " + data("pentagon.json") + " --seed 4").out);
}

TEST(CliLp1d, Examples) {
  EXPECT_EQ(run("lp1d --weights 1,2,1").out, "true 1\n");
  EXPECT_EQ(run("lp1d --weights 1,1,1").out, "false\n");
  EXPECT_EQ(run("lp1d --weights 4,4,1").out, "true 2\n");
  EXPECT_EQ(run("lp1d --input " + data("segment.json")).out, "true 1\n");
  EXPECT_EQ(run("lp1d --input " + data("square.json")).exit_code, 2);
  EXPECT_EQ(run("lp1d").exit_code, 2);
}

TEST(CliUsage, ParseErrors) {
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  EXPECT_EQ(run("eval --input " + data("segment.json")).exit_code, 2);
  EXPECT_EQ(run("--help").exit_code, 0);
}
