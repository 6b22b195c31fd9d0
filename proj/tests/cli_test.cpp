#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "secreg/cli.hpp"

using namespace secreg;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("secreg_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    unsetenv("SECREG_SEED");
  }
  void TearDown() override {
    fs::remove_all(dir_);
    unsetenv("SECREG_SEED");
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string ex73() {
    std::string p = path("ex73.ideal");
    Outcome r = run({"construct", "--type2", "-a", "3", "-b", "5", "--f", "s^4t+s^3t^2+s^2t^3+st^4", "-o", p});
    EXPECT_EQ(r.code, 0) << r.err;
    return p;
  }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ConstructWritesTaggedIdealFile) {
  std::string text = slurp(ex73());
  EXPECT_EQ(text.rfind("ring 32003 x0,x1,x2,x3,x4,x5,x6 grevlex\n", 0), 0u) << text;
  EXPECT_NE(text.find("# surface type2 a=3 b=5 f="), std::string::npos);
}

TEST_F(Cli, BettiTextHasTheTableLayout) {
  Outcome r = run({"betti", ex73(), "--format", "text", "-q"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("beta_i,1 |  6  8  3  0  0"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("beta_i,4 |  1  4  6  4  1"), std::string::npos) << r.out;
  EXPECT_TRUE(r.err.empty());
}

TEST_F(Cli, ProgressGoesToStderrOnly) {
  Outcome r = run({"betti", ex73(), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("[secreg]"), std::string::npos);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["pd"], 5);
}

TEST_F(Cli, CohomologyJson) {
  Outcome r = run({"cohomology", ex73(), "--format", "json", "--lo", "-2", "--hi", "6", "-q"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["window"], nlohmann::json::array({-2, 6}));
  EXPECT_EQ(j["h2"], nlohmann::json::array({6, 6, 6, 3, 1, 0, 0, 0, 0}));
  EXPECT_EQ(j["h3"][0], 7);
  EXPECT_EQ(j["N"], "-inf");
}

TEST_F(Cli, InvariantsUseThePlaneFromTheTag) {
  Outcome r = run({"invariants", ex73(), "--format", "json", "-q"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["tau"], nlohmann::json::array({2, 3}));
  EXPECT_EQ(j["e"], 6);
}

TEST_F(Cli, SecantJsonIsDeterministic) {
  std::string f = ex73();
  Outcome a = run({"secant", f, "--format", "json", "--seed", "7", "-q"});
  Outcome b = run({"secant", f, "--format", "json", "--seed", "7", "-q"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["span_dim"], 2);
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["lengths"].size(), 20u);
}

TEST_F(Cli, SeedFromEnvironment) {
  std::string f = ex73();
  setenv("SECREG_SEED", "123", 1);
  Outcome a = run({"secant", f, "--format", "json", "--lines", "3", "-q"});
  EXPECT_EQ(nlohmann::json::parse(a.out)["seed"], 123);
  Outcome b = run({"secant", f, "--format", "json", "--lines", "3", "--seed", "5", "-q"});
  EXPECT_EQ(nlohmann::json::parse(b.out)["seed"], 5);
  setenv("SECREG_SEED", "abc", 1);
  EXPECT_EQ(run({"secant", f, "-q"}).code, kExitUsage);
}

TEST_F(Cli, OutputExtensionPicksFormat) {
  std::string f = ex73(), o = path("b.json");
  ASSERT_EQ(run({"betti", f, "-o", o, "-q"}).code, 0);
  EXPECT_EQ(nlohmann::json::parse(slurp(o))["depth"], 2);
  std::string c = path("b.csv");
  ASSERT_EQ(run({"betti", f, "-o", c, "-q"}).code, 0);
  EXPECT_EQ(slurp(c).rfind("j,i1,", 0), 0u);
}

TEST_F(Cli, VerifyPassesOnExample) {
  Outcome r = run({"verify", ex73(), "--format", "json", "-q"});
  ASSERT_EQ(r.code, kExitOk) << r.err << r.out;
  auto j = nlohmann::json::parse(r.out);
  for (const auto& c : j) EXPECT_EQ(c["verdict"], "pass") << c.dump();
}

TEST_F(Cli, ConstructOtherKinds) {
  Outcome a = run({"construct", "--type1", "8", "-q"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_NE(a.out.find("# surface type1 d=8"), std::string::npos);
  Outcome b = run({"construct", "--example", "7.4(2)", "-q"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_NE(b.out.find("# surface type2 a=3 b=8"), std::string::npos);
  Outcome c = run({"construct", "--type2", "-a", "3", "-b", "4", "--random-f", "--seed", "9", "-q"});
  Outcome d = run({"construct", "--type2", "-a", "3", "-b", "4", "--random-f", "--seed", "9", "-q"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.out, d.out);
  Outcome s = run({"construct", "--scroll", "1,1,1"});
  ASSERT_EQ(s.code, 0);
  std::string p = path("w.ideal");
  std::ofstream(p) << s.out;
  EXPECT_EQ(run({"secant", p, "-q"}).code, kExitUsage);
  EXPECT_EQ(run({"betti", p, "-q"}).code, kExitOk);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"betti"}).code, kExitUsage);
  EXPECT_EQ(run({"betti", path("missing.ideal")}).code, kExitUsage);
  EXPECT_EQ(run({"betti", ex73(), "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"construct", "--type2", "-a", "3", "-b", "5"}).code, kExitUsage);
  EXPECT_EQ(run({"construct", "--type1", "8", "--scroll", "1,1,1"}).code, kExitUsage);
  EXPECT_EQ(run({"construct", "--type2", "-a", "3", "-b", "5", "--f", "s^5+t^5"}).code, kExitUsage);
  EXPECT_EQ(run({"secant", ex73(), "--lines", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST_F(Cli, BadFiles) {
  std::string bad = path("bad.ideal");
  std::ofstream(bad) << "ring 32003 x,y grevlex\nx*+y\n";
  Outcome r = run({"betti", bad});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;

  // tag that does not describe the ideal
  std::string forged = path("forged.ideal");
  std::string text = slurp(ex73());
  text.replace(text.find("b=5"), 3, "b=5 ");
  text.replace(text.find("f="), 2, "f=s^3*t^2+s*t^4+");
  std::ofstream(forged) << text;
  EXPECT_NE(run({"verify", forged, "-q"}).code, kExitOk);

  EXPECT_EQ(run({"betti", ex73(), "--char", "101"}).code, kExitUsage);
}

TEST_F(Cli, CharacteristicZeroIsAComputationError) {
  Outcome r = run({"construct", "--type1", "8", "--char", "0"});
  EXPECT_EQ(r.code, kExitComputation);
  EXPECT_NE(r.err.find("characteristic 0"), std::string::npos);
  std::string q = path("q.ideal");
  std::ofstream(q) << "ring 0 x,y,z grevlex\nx*y-z^2\n";
  EXPECT_EQ(run({"betti", q}).code, kExitComputation);
}

TEST_F(Cli, OtherPrime) {
  std::string p = path("p.ideal");
  ASSERT_EQ(run({"construct", "--type1", "6", "--char", "101", "-o", p}).code, 0);
  std::string q = path("q.ideal");
  ASSERT_EQ(run({"construct", "--type1", "6", "-o", q}).code, 0);
  EXPECT_EQ(slurp(p).rfind("ring 101 ", 0), 0u);
  Outcome r = run({"betti", p, "--format", "json", "-q"}), s = run({"betti", q, "--format", "json", "-q"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, s.out);
  EXPECT_EQ(nlohmann::json::parse(r.out)["pd"], 5);
}
