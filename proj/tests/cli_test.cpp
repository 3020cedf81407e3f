#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jacarena/cli.hpp"
#include "jacarena/game.hpp"

using namespace jacarena;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "jacarena");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("jacarena_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, PlayExitCodes) {
  auto r = cli({"play", "--ring", "ZZ", "--x", "6", "--budget", "2", "--prover", "euclideanDim1", "--delayer",
                "random:7"});
  EXPECT_EQ(r.code, kExitProverWins) << r.err;
  EXPECT_TRUE(verify_transcript_json(r.out).ok);

  r = cli({"play", "--ring", "QQ[x]", "--x", "0", "--budget", "0"});
  EXPECT_EQ(r.code, kExitProverWins) << r.err;
  EXPECT_TRUE(transcript_from_json(r.out).rounds.empty());

  r = cli({"play", "--ring", "ZZ", "--x", "2", "--budget", "1", "--prover", "euclideanDim1", "--delayer",
           "refuterZ"});
  EXPECT_EQ(r.code, kExitDelayerWins) << r.err;
}

TEST(Cli, ConfigAndEngineErrors) {
  EXPECT_EQ(cli({"play", "--ring", "QQ[", "--x", "1"}).code, kExitConfigError);
  EXPECT_EQ(cli({"play", "--ring", "ZZ", "--x", "y"}).code, kExitConfigError);
  EXPECT_EQ(cli({"play", "--ring", "ZZ", "--x", "2", "--prover", "oracle"}).code, kExitConfigError);
  EXPECT_EQ(cli({"play", "--ring", "ZZ", "--x", "2", "--delayer", "random:x"}).code, kExitConfigError);
  EXPECT_EQ(cli({"play", "--ring", "ZZ"}).code, kExitConfigError);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitConfigError);
  // The refuter refuses to play a two-round game; that happens mid-match.
  const auto r = cli({"play", "--ring", "ZZ", "--x", "2", "--delayer", "refuterZ"});
  EXPECT_EQ(r.code, kExitEngineError);
  EXPECT_NE(r.err.find("WrongBudget"), std::string::npos);
}

TEST(Cli, PlayWritesFile) {
  const auto path = temp_path("play.json");
  const auto r = cli({"play", "--ring", "ZZ[X]", "--x", "X", "--delayer", "random:3:1:3", "--out", path});
  EXPECT_EQ(r.code, kExitProverWins) << r.err;
  const auto t = transcript_from_json(slurp(path));
  EXPECT_EQ(t.budget, 3U);
  EXPECT_EQ(t.prover, "polyLift(euclideanDim1)");
  EXPECT_EQ(t.delayer, "random(seed=3,degLE=1,absLE=3)");
  EXPECT_EQ(cli({"verify", path}).code, 0);
  std::remove(path.c_str());
}

TEST(Cli, PlayProverSpecs) {
  EXPECT_EQ(cli({"play", "--ring", "GF(5)[X]", "--x", "X", "--prover", "polyLift", "--delayer", "random:1:2:4"}).code,
            kExitProverWins);
  EXPECT_EQ(cli({"play", "--ring", "ZZ/(7)", "--x", "3", "--prover", "zeroDim"}).code, kExitProverWins);
  EXPECT_EQ(cli({"play", "--ring", "ZZ", "--x", "6", "--budget", "1", "--prover", "scripted:-1",
                 "--delayer", "refuterZ"}).code,
            kExitDelayerWins);
  EXPECT_EQ(cli({"play", "--ring", "QQ[X]", "--x", "X", "--delayer", "jacWitness:X^2"}).code, kExitProverWins);
  EXPECT_EQ(cli({"play", "--ring", "ZZ[X]", "--x", "X", "--budget", "1", "--prover", "scripted:1,X",
                 "--delayer", "refuterPoly"})
                .code,
            kExitDelayerWins);
}

TEST(Cli, Verify) {
  const auto path = temp_path("verify.json");
  auto r = cli({"play", "--ring", "ZZ", "--x", "6", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(cli({"verify", path}).code, 0);
  std::string text = slurp(path);
  EXPECT_EQ(cli({"verify", "-"}, text).code, 0);
  text.replace(text.find("\"budget\": 2"), 11, "\"budget\": 3");
  r = cli({"verify", "-"}, text);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("invalid"), std::string::npos);
  EXPECT_EQ(cli({"verify", temp_path("missing.json")}).code, kExitConfigError);
  std::remove(path.c_str());
}

TEST(Cli, Alpha) {
  const auto r = cli({"alpha", "ZZ/4", "GF(2)"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "ring,x,xPrime,minimalAlpha\n"
            "ZZ/(4),0,0,0\nZZ/(4),1,1,1\nZZ/(4),2,2,0\nZZ/(4),3,3,1\nZZ/(4),*,*,1\n"
            "GF(2),0,0,0\nGF(2),1,1,1\nGF(2),*,*,1\n");
  EXPECT_EQ(cli({"alpha", "ZZ"}).code, kExitConfigError);
  // Ring names with commas are quoted.
  const auto q = cli({"alpha", "ZZ[X]/(2, X^2)"});
  EXPECT_NE(q.out.find("\"ZZ[X]/(2, X^2)\",*,*,1"), std::string::npos) << q.out;
}

TEST(Cli, Refute) {
  auto r = cli({"refute", "--family", "Z", "--N", "3", "--max-moves", "2", "--max-abs", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("refuted ", 0), 0U);
  r = cli({"refute", "--family", "poly", "--ring", "GF(5)[X]", "--max-moves", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(cli({"refute", "--family", "Q"}).code, kExitConfigError);
}

TEST(Cli, ReplProverWins) {
  const auto path = temp_path("repl.json");
  const auto r = cli({"repl", "--ring", "ZZ", "--x", "6", "--budget", "2", "--out", path}, "1\n5\n");
  EXPECT_EQ(r.code, kExitProverWins) << r.err;
  EXPECT_NE(r.out.find("Prover moves: [-1]"), std::string::npos);
  EXPECT_NE(r.out.find("winner: prover"), std::string::npos);
  EXPECT_NE(r.out.find("certificate:"), std::string::npos);
  EXPECT_EQ(cli({"verify", path}).code, 0);
  std::remove(path.c_str());
}

TEST(Cli, ReplHelpAndBadInput) {
  const auto r = cli({"repl", "--ring", "ZZ", "--x", "6"}, "?\n(1 +\nz\n2\n3\n");
  EXPECT_NE(r.out.find("?  shows this help"), std::string::npos);
  EXPECT_NE(r.out.find("not an element"), std::string::npos);
  EXPECT_EQ(r.code, kExitProverWins);
}

TEST(Cli, ReplDelayerFollowsRefuter) {
  // Prover plays a = 0; the refuter's answer is b = -2, leaving U = {3}.
  const auto r = cli({"repl", "--ring", "ZZ", "--x", "2", "--budget", "1", "--prover", "scripted:0"}, "-2\n");
  EXPECT_EQ(r.code, kExitDelayerWins);
  EXPECT_NE(r.out.find("winner: delayer"), std::string::npos);
}

TEST(Cli, ReplEofResigns) {
  const auto r = cli({"repl", "--ring", "ZZ", "--x", "6"}, "");
  EXPECT_EQ(r.code, kExitProverWins);
  EXPECT_NE(r.out.find("resigned"), std::string::npos);
}
