#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" OHNO_VERIFY_PATH "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("verify duality --weight 5").code, 0);
  EXPECT_EQ(run("verify duality --weight 5 --tol 1e-60").code, 1);
  EXPECT_EQ(run("verify nosuch").code, 2);
  EXPECT_EQ(run("verify main --word xq").code, 2);
  EXPECT_EQ(run("verify hspecial --word yx").code, 2);
  EXPECT_EQ(run("verify duality --prec 8").code, 2);
  EXPECT_EQ(run("datamine --weight 10").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, ListsSuites) {
  const auto r = run("verify --list");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("reg-theorem\n"), std::string::npos);
  EXPECT_NE(r.out.find("hypergeom\n"), std::string::npos);
}

TEST(Cli, JsonIsDeterministic) {
  const std::string args = "verify ohno --weight 4 --m 2 --format json --omit-duration";
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["check"], "ohno");
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_FALSE(j.contains("duration_ms"));
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  const std::string args = "verify duality ohno taubar --weight 4 --m 1 --t-order 2 --format json --omit-duration";
  const auto one = run(args + " --threads 1"), four = run(args + " --threads 4");
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  EXPECT_TRUE(nlohmann::json::parse(one.out).is_array());
}

TEST(Cli, PrecisionFromEnvironment) {
  const auto env = run("verify duality --weight 4 --format json", "OHNO_PREC=200");
  EXPECT_EQ(nlohmann::json::parse(env.out)["params"]["prec"], "200");
  const auto flag = run("verify duality --weight 4 --format json --prec 96", "OHNO_PREC=200");
  EXPECT_EQ(nlohmann::json::parse(flag.out)["params"]["prec"], "96");
  const auto dflt = run("verify duality --weight 4 --format json");
  EXPECT_EQ(nlohmann::json::parse(dflt.out)["params"]["prec"], "128");
}

TEST(Cli, CsvAndText) {
  const auto csv = run("verify duality --weight 4 --format csv");
  EXPECT_EQ(csv.out.rfind("check,coefficient_key,value,tolerance,pass\n", 0), 0u);
  const auto text = run("verify duality --weight 4");
  EXPECT_EQ(text.out.rfind("PASS duality", 0), 0u);
}

TEST(Cli, Datamine) {
  const auto j = run("datamine --weight 4 --format json");
  EXPECT_EQ(j.code, 0);
  const auto m = nlohmann::json::parse(j.out);
  EXPECT_EQ(m["weight"], 4);
  EXPECT_EQ(m["rank"], 2);
  const auto csv = run("datamine --weight 3 --format csv");
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("source,m,", 0), 0u);
}
