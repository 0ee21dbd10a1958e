// Exit statuses and output of the built horikawa binary.

#include <gtest/gtest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#ifndef HORIKAWA_CLI
#error "HORIKAWA_CLI must name the CLI binary"
#endif

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(HORIKAWA_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Cli, SuccessExitZero) {
  EXPECT_EQ(run("classify --k2 8 --chi 7").status, 0);
  EXPECT_EQ(run("classify --k2 16 --chi 11").status, 0);
  EXPECT_EQ(run("construct stable --chi 3").status, 0);
  EXPECT_EQ(run("construct component-II --k 1").status, 0);
  EXPECT_EQ(run("construct component-I --chi 9").status, 0);
  EXPECT_EQ(run("construct stable --chi 7 --epsilon 2").status, 0);
  EXPECT_EQ(run("enumerate --chi-min 4 --chi-max 10").status, 0);
  EXPECT_EQ(run("enumerate --chi-min 10 --chi-max 4").status, 0);
  EXPECT_EQ(run("verify-paper --chi-max 30 --k-max 6").status, 0);
  EXPECT_EQ(run("verify-paper --chi-max 6 --k-max 2").status, 0);
  EXPECT_EQ(run("verify-paper").status, 0);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, VerificationFailureExitOne) {
  EXPECT_EQ(run("classify --k2 0 --chi 1").status, 1);
  EXPECT_EQ(run("classify --k2 100 --chi 3").status, 1);
  const CliRun r = run("verify-paper --chi-max 10 --k-max 3 --inject-fault component-I:7:D2:0:-1");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("identity violated: I."), std::string::npos);
  EXPECT_EQ(run("construct component-I --chi 7 --non-general").status, 1);
}

TEST(Cli, UsageErrorExitTwo) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("bogus").status, 2);
  EXPECT_EQ(run("classify --k2 8").status, 2);
  EXPECT_EQ(run("classify --k2 eight --chi 7").status, 2);
  EXPECT_EQ(run("construct").status, 2);
  EXPECT_EQ(run("construct component-III --chi 5").status, 2);
  EXPECT_EQ(run("construct stable --chi 2").status, 2);
  EXPECT_EQ(run("construct stable").status, 2);
  EXPECT_EQ(run("construct component-II --k 0").status, 2);
  EXPECT_EQ(run("construct stable --chi 5 --epsilon 9").status, 2);
  EXPECT_EQ(run("construct stable --chi 99999999999999999999").status, 2);
  EXPECT_EQ(run("enumerate").status, 2);
  EXPECT_EQ(run("enumerate --chi-min 0 --chi-max 4").status, 2);
  EXPECT_EQ(run("verify-paper --chi-max 5").status, 2);
  EXPECT_EQ(run("verify-paper --k-max 1").status, 2);
  EXPECT_EQ(run("verify-paper --inject-fault nonsense").status, 2);
  EXPECT_EQ(run("classify --k2 8 --chi 7 --format yaml").status, 2);
  EXPECT_EQ(run("--scenario /nonexistent/file.json").status, 2);
}

TEST(Cli, JsonOutputParses) {
  const CliRun r = run("construct stable --chi 4 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "construct stable");
  EXPECT_EQ(j["exit_code"], 0);
  const CliRun v = run("--format json verify-paper --chi-max 8 --k-max 2");
  ASSERT_EQ(v.status, 0);
  EXPECT_FALSE(nlohmann::json::parse(v.out)["checks"].empty());
}

TEST(Cli, VerifyOutputIsByteIdentical) {
  const CliRun a = run("verify-paper --chi-max 40 --k-max 8 --format json");
  const CliRun b = run("verify-paper --chi-max 40 --k-max 8 --format json");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Scenarios) {
  const auto ok = write_temp("ok.json", R"({"command": "classify", "k2": 8, "chi": 7, "format": "json"})");
  const CliRun r = run("--scenario " + ok);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["command"], "classify");

  const auto bad = write_temp("bad.json", R"({"command": "construct", "variant": "stable", "chi": 1})");
  EXPECT_EQ(run("--scenario " + bad).status, 2);
  const auto broken = write_temp("broken.json", "{ not json");
  EXPECT_EQ(run("--scenario " + broken).status, 2);
  EXPECT_EQ(run("--scenario " + ok + " classify --k2 8 --chi 7").status, 2);
}
