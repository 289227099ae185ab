// Copyright 2026 The qspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qspace/cli/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "qspace/basis.hpp"

namespace qspace::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, EvalPrintsCanonicalText) {
  auto r = run_cli({"eval", "a+(1) a+(1) |;B>"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "{ |2@1;B>: 1.41421356 }\n");
  r = run_cli({"eval", "<1@1;B|1@1;B>"});
  EXPECT_EQ(r.out, "1+0i\n");
  r = run_cli({"eval", "c+(6)|1@3,1@5,1@7,1@8;F>"});
  EXPECT_EQ(r.out, "{ |1@3,1@5,1@6,1@7,1@8;F>: 1 }\n");
}

TEST(Cli, EvalBatch) {
  const auto r = run_cli({"eval", "a+(1)|;B>", "c+(1)|;F>"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "{ |1@1;B>: 1 }\n{ |1@1;F>: 1 }\n");
}

TEST(Cli, EvalJsonIsOneObject) {
  const auto r = run_cli({"eval", "--json", "a+(1) a+(1) |;B>"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("result"), "state");
  EXPECT_EQ(j.at("state").at("sector"), "Bose");
  EXPECT_NE(r.out.find("1.4142135623730951"), std::string::npos);
}

TEST(Cli, ParseErrorExitsTwoWithNothingOnStdout) {
  const auto r = run_cli({"eval", "a+(1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("offset 4"), std::string::npos);
}

TEST(Cli, SectorMixingExitsTwo) {
  const auto r = run_cli({"eval", "a+(1) c+(2) |;B>"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("SectorMixing"), std::string::npos);
}

TEST(Cli, EvaluationErrorExitsThree) {
  auto r = run_cli({"eval", "psi+(1)|;B>"});
  EXPECT_EQ(r.code, kExitEvaluation);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("NoBasisLoaded"), std::string::npos);
  r = run_cli({"eval", "a(1)"});
  EXPECT_EQ(r.code, kExitEvaluation);
  r = run_cli({"eval", "|;B> + 1"});
  EXPECT_EQ(r.code, kExitEvaluation);
}

TEST(Cli, JsonErrorObject) {
  const auto r = run_cli({"eval", "--json", "a+(1"});
  EXPECT_EQ(r.code, kExitUsage);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("error").at("kind"), "ParseError");
  EXPECT_EQ(j.at("error").at("position"), 4);
}

TEST(Cli, BatchFailsAtomically) {
  const auto r = run_cli({"eval", "a+(1)|;B>", "a+(1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"check-ccr", "--modes", "3"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Cli, EvalWithBasisFile) {
  const std::string path = ::testing::TempDir() + "qspace_basis.json";
  {
    std::ofstream file(path);
    file << basis_to_json(BasisChange::identity(3)).dump();
  }
  auto r = run_cli({"eval", "--basis", path, "psi+(2)|;B>"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "{ |1@2;B>: 1 }\n");
  r = run_cli({"eval", "--basis", path + ".missing", "psi+(2)|;B>"});
  EXPECT_EQ(r.code, kExitEvaluation);
  std::remove(path.c_str());
}

TEST(Cli, CheckSuitesPass) {
  auto r = run_cli({"check-ccr", "--modes", "4", "--max-total", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("[a_i,a+_j]-delta_ij"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  r = run_cli({"check-car", "--modes", "5"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  r = run_cli({"check-car", "--modes", "3", "--json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("max_residual"), 0.0);
  EXPECT_EQ(j.at("states"), 8);
}

TEST(Cli, CheckCcrViolationWithImpossibleTolerance) {
  // no residual is below a negative tolerance
  const auto r = run_cli({"check-ccr", "--modes", "2", "--max-total", "2", "--tol", "-1"});
  EXPECT_EQ(r.code, kExitCheckFailed);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, Amplitude) {
  const auto r = run_cli({"amplitude", "--state", "|1@1,1@2;F>", "--points", "1,3", "--basis", "random:4:7"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("determinant"), std::string::npos);
  const auto j = nlohmann::json::parse(
      run_cli({"amplitude", "--state", "|2@1;B>", "--points", "2,2", "--basis", "fourier:3", "--json"}).out);
  EXPECT_EQ(j.at("method"), "permanent");
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_EQ(run_cli({"amplitude", "--state", "|1@1;B>", "--points", "9", "--basis", "identity:2"}).code,
            kExitEvaluation);
}

TEST(Cli, OracleCompare) {
  const auto r = run_cli({"oracle-compare", "--modes", "3", "--max-total", "3", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& e : j.at("entries")) {
    if (e.at("sector") == "Bose" && e.at("n") == 3) EXPECT_EQ(e.at("ratio_min"), 6.0);
  }
  EXPECT_EQ(run_cli({"oracle-compare", "--modes", "9", "--max-total", "2"}).code, kExitEvaluation);
}

TEST(Cli, QsetDemoIsDeterministic) {
  const auto a = run_cli({"qset-demo", "--seed", "7", "--cases", "200"});
  const auto b = run_cli({"qset-demo", "--seed", "7", "--cases", "200"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run_cli({"qset-demo", "--seed", "8", "--cases", "200"}).out);
}

}  // namespace
}  // namespace qspace::cli
