#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(FGL_SCHUR_BINARY) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, ComputeExample) {
  const CliRun r = run("compute Q --lambda 1 --n 1 --fgl additive --degree 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2*x1\n");
}

TEST(Cli, ComputeJson) {
  const CliRun r = run("compute Q --lambda 1 --n 1 --fgl additive --degree 3 --out json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["series"].size(), 1u);
  EXPECT_EQ(j["series"][0]["monomial"]["x1"], 1);
  EXPECT_EQ(j["series"][0]["num"], "2");
  EXPECT_EQ(j["series"][0]["den"], "1");
  EXPECT_EQ(j["config"]["degree"], 3);
  EXPECT_EQ(run("compute Q --lambda 1 --n 1 --fgl additive --degree 3 --json").out, r.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("compute Q --lambda 2,2").code, 2);
  EXPECT_EQ(run("compute Q --lambda 1,3").code, 2);
  EXPECT_EQ(run("compute Q --lambda x").code, 2);
  EXPECT_EQ(run("compute Q --lambda 1 --degree 13").code, 2);
  EXPECT_EQ(run("compute Q --lambda 1 --fgl elliptic").code, 2);
  EXPECT_EQ(run("verify no-such-suite").code, 2);
  EXPECT_EQ(run("dual qhat --n 3 --degree 4").code, 2);
  EXPECT_EQ(run("compute phatK --lambda 1 --via word --factorial off --degree 3").code, 2);
}

TEST(Cli, AllowLarge) {
  EXPECT_EQ(run("compute Q --lambda 1 --n 1 --fgl additive --degree 13 --allow-large").out, "2*x1\n");
}

TEST(Cli, VerifyList) {
  const CliRun r = run("verify --list");
  EXPECT_EQ(r.code, 0);
  for (const char* s : {"fgl-axioms", "supersymmetry", "factorization", "vanishing", "cauchy", "duality",
                        "k-recursion", "appendix-vanishing", "hook-sum"})
    EXPECT_NE(r.out.find(s), std::string::npos) << s;
}

TEST(Cli, VerifyPasses) {
  const CliRun r = run("verify hook-sum --json");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "PASS");
  EXPECT_EQ(j["failures"], 0);
  EXPECT_EQ(run("verify fgl-axioms").code, 0);
}

TEST(Cli, PhatKBothRoutes) {
  const CliRun a = run("compute phatK --lambda 2,1 --degree 4 --beta -1");
  const CliRun b = run("compute phatK --lambda 2,1 --degree 4 --beta -1 --via word");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, DualOutput) {
  const CliRun r = run("dual phat --lambda 2 --fgl k-theory --beta -1 --degree 4 --ny 1 --factorial off");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "y1 + y1^2\n");
}

TEST(Cli, ConjectureJson) {
  const CliRun r = run("conjecture gp --max-size 4 --json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  // (), (1), (2), (3), (2,1), (4), (3,1)
  ASSERT_EQ(j["checks"].size(), 7u);
  for (const auto& c : j["checks"]) EXPECT_EQ(c["status"], "PASS") << c["name"];
  EXPECT_EQ(j["checks"][4]["informational"], true);  // (2,1) is conjectural
}

TEST(Cli, Deterministic) {
  const std::string args = "verify vanishing --fgl k-theory --max-size 3 --json --jobs 2";
  const CliRun a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
