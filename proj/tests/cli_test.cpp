#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct Result {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded and returns stdout and the exit code.
Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + ATRIG_CLI + "' " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, LogOfMinusOne) {
  const auto r = run("--algebra C2 log --z \"-1,0\"");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["log"][0].get<double>(), 0.0);
  EXPECT_NEAR(j["log"][1].get<double>(), 3.141592653589793, 1e-15);
}

TEST(Cli, PolarOfTwiceExpJ) {
  // 2 exp(j) = 2 cosh 1 + 2 sinh 1 j
  const std::string z = std::to_string(2 * std::cosh(1.0)) + "," + std::to_string(2 * std::sinh(1.0));
  const auto r = run("--algebra H2 polar --z " + z);
  ASSERT_EQ(r.exit_code, 0);
  const auto j = parse(r);
  EXPECT_NEAR(j["rho"].get<double>(), 2.0, 1e-5);
  EXPECT_EQ(j["arg"][0].get<double>(), 0.0);
  EXPECT_NEAR(j["arg"][1].get<double>(), 1.0, 1e-5);
}

TEST(Cli, IdentityLatex) {
  const auto r = run("--algebra H3 identity add-angle --format latex");
  ASSERT_EQ(r.exit_code, 0);
  std::ifstream in(std::string(ATRIG_GOLDEN_DIR) + "/h3_add_angle.tex");
  const std::string golden((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(r.out, golden);

  const auto json = run("identity de-moivre --power 2 --algebra Gamma2");
  ASSERT_EQ(json.exit_code, 0);
  EXPECT_EQ(json.out, "{\"s1\":[[1,[\"s1a\",\"s1a\"]]],\"s2\":[[2,[\"s1a\",\"s2a\"]]]}\n");
}

TEST(Cli, OtherCommands) {
  auto r = run("--algebra C2 exp --z 0,3.141592653589793");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NEAR(parse(r)["exp"][0].get<double>(), -1.0, 1e-12);

  r = run("--algebra H2 pyth --z 3,5");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_DOUBLE_EQ(parse(r)["pythagorean"].get<double>(), -16.0);

  r = run("--algebra H2 trig --theta 1 --format csv");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find(','), std::string::npos);

  r = run("--algebra H2 roots");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "{\"real_roots\":[-1.0,1.0],\"complex_roots\":[]}\n");

  r = run("--algebra C2 arg --z 0,2 --branch 1");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NEAR(parse(r)["arg"][1].get<double>(), 2.5 * 3.141592653589793, 1e-12);

  r = run("--algebra=-1,0 log --z 1,0");
  ASSERT_EQ(r.exit_code, 0);
}

TEST(Cli, AlgebraFile) {
  const std::string path = ::testing::TempDir() + "atrig_cli_algebra.json";
  std::ofstream(path) << R"({"label": "split", "coeffs": [-1, 0]})";
  const auto r = run("--algebra-file '" + path + "' pyth --z 3,5");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_DOUBLE_EQ(parse(r)["pythagorean"].get<double>(), -16.0);
  EXPECT_EQ(run("--algebra H2 --algebra-file '" + path + "' pyth --z 3,5").exit_code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("--algebra H2 nosuch").exit_code, 2);
  EXPECT_EQ(run("--algebra Q2 exp --z 1,2").exit_code, 2);
  EXPECT_EQ(run("--algebra H2 exp --z 1,x").exit_code, 2);
  EXPECT_EQ(run("--algebra H2 exp --z 1,2,3").exit_code, 2);
  EXPECT_EQ(run("exp --z 1,2").exit_code, 2);
  EXPECT_EQ(run("--algebra H2 exp --z 1,2 --format latex").exit_code, 2);
  EXPECT_EQ(run("verify --suite nosuch").exit_code, 2);
  EXPECT_EQ(run("verify --suite lemma --samples 1", "ATRIG_SEED=abc").exit_code, 2);

  const auto domain = run("--algebra H2 log --z 0.5,1");
  EXPECT_EQ(domain.exit_code, 3);
  EXPECT_EQ(parse(domain)["error"], "OutsideLogDomain");
  EXPECT_EQ(parse(run("--algebra Gamma2 roots"))["error"], "NonSemisimple");
  EXPECT_EQ(run("--algebra H2 polar --z 1,2").exit_code, 3);
  EXPECT_EQ(run("--algebra 0,1,0 polar --z 1,0,0").exit_code, 3);
  EXPECT_EQ(run("--algebra H2 identity de-moivre --power 0").exit_code, 3);
  EXPECT_EQ(run("--algebra 1.4142135623730951,0 identity add-angle").exit_code, 3);

  EXPECT_EQ(run("--algebra H3 verify --suite only-pure-power --samples 20").exit_code, 0);
  const auto fail = run("--algebra 0,1,0 verify --suite only-pure-power --samples 20");
  EXPECT_EQ(fail.exit_code, 4);
  EXPECT_FALSE(parse(fail)["passed"].get<bool>());
}

TEST(Cli, VerifySuites) {
  for (const char* suite : {"kthagorean", "lemma", "roundtrip", "identities", "only-pure-power"}) {
    const auto r = run(std::string("verify --samples 5 --suite ") + suite);
    EXPECT_EQ(r.exit_code, 0) << suite << "\n" << r.out;
    const auto j = parse(r);
    EXPECT_EQ(j["suite"], suite);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_GT(j["cases"].size(), 1u);
    for (const auto& c : j["cases"]) EXPECT_TRUE(c.contains("worst"));
  }
}

TEST(Cli, Deterministic) {
  const auto a = run("verify --suite lemma --samples 3 --seed 9");
  const auto b = run("verify --suite lemma --samples 3 --seed 9");
  const auto env = run("verify --suite lemma --samples 3", "ATRIG_SEED=9");
  const auto other = run("verify --suite lemma --samples 3 --seed 10");
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, env.out);
  EXPECT_NE(a.out, other.out);
  EXPECT_EQ(run("--algebra H4 exp --z 0.1,0.2,0.3,0.4").out, run("--algebra H4 exp --z 0.1,0.2,0.3,0.4").out);
}

}  // namespace
