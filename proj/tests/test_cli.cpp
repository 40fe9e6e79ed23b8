// Copyright 2026 The rcayley Authors
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


#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli_app.hpp"

namespace rcayley::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, SpectrumReflectionClass) {
  const auto r = run({"spectrum", "--group", "d2p:11", "--subset", "normal:X=;Y=y"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["verdict"]["status"], "ramanujan");
  std::map<long, long> mult;
  for (const auto& e : j["eigenvalues"]) {
    mult[std::lround(e["value"].get<double>())] += e["multiplicity"].get<long>();
  }
  EXPECT_EQ(mult, (std::map<long, long>{{-11, 1}, {0, 20}, {11, 1}}));
}

TEST(Cli, SpectrumComplete) {
  const auto r = run({"spectrum", "--group", "d2p:11", "--subset", "complete", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "value,multiplicity");
  long minus_one = 0;
  while (std::getline(in, line)) {
    if (line.rfind("-1,", 0) == 0) minus_one += std::stol(line.substr(3));
  }
  EXPECT_EQ(minus_one, 21);
}

TEST(Cli, SpectrumWithOracle) {
  const auto r = run({"spectrum", "--group", "fpq:7,3", "--subset", "normal:X=1,3;Y=1,2", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LT(parse(r)["oracle"]["max_abs_delta"].get<double>(), 1e-8);
}

TEST(Cli, SpectrumMaskRoundTrip) {
  const auto a = run({"spectrum", "--group", "d2p:13", "--subset", "interval:l1=5,l2=3"});
  ASSERT_EQ(a.code, 0);
  const auto mask = parse(a)["subset"].get<std::string>();
  const auto b = run({"spectrum", "--group", "d2p:13", "--subset", mask});
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(parse(b)["subset"], mask);
  EXPECT_EQ(parse(b)["eigenvalues"], parse(a)["eigenvalues"]);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"spectrum", "--group", "d2p:9", "--subset", "complete"}).code, kParse);
  EXPECT_EQ(run({"spectrum", "--group", "d2p:11"}).code, kParse);
  EXPECT_EQ(run({"nonsense"}).code, kParse);
  EXPECT_EQ(run({"spectrum", "--group", "d2p:1031", "--subset", "complete", "--oracle"}).code,
            kGuard);
  EXPECT_EQ(run({"tilde", "--p", "17"}).code, kGuard);
  EXPECT_EQ(run({"classify", "--p", "23"}).code, kParse);
  EXPECT_EQ(run({"hl", "--r", "1", "--c", "5"}).code, kParse);
  EXPECT_EQ(run({"--help"}).code, kOk);
}

TEST(Cli, Bounds) {
  const auto r = run({"bounds", "--group", "d2p:101"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["l0"], 25);
  EXPECT_EQ(j["l_hat"], 25);
  EXPECT_EQ(j["formula"], 25);
  EXPECT_EQ(j["witness"]["covalency"], 27);
}

TEST(Cli, Classify) {
  const auto j = parse(run({"classify", "--p", "37"}));
  EXPECT_EQ(j["verdict"], "exceptional");
  EXPECT_EQ(j["family"]["r"], 3);
  EXPECT_EQ(j["family"]["c"], 1);
  EXPECT_EQ(j["family"]["k_min"], 3);
}

TEST(Cli, ScanCsvMatchesFamiliesBelow1000) {
  const auto r = run({"scan", "--from", "29", "--to", "1000", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "p,parity,r,k,c,verdict,mu1,rb");
  std::set<long> got;
  while (std::getline(in, line)) got.insert(std::stol(line.substr(0, line.find(','))));
  std::set<long> expect;
  for (const auto& fam : quadratic_families()) {
    for (auto p : family_primes_below(fam, 1000)) expect.insert(p);
  }
  EXPECT_EQ(got, expect);
}

TEST(Cli, ScanIsIndependentOfJobs) {
  const auto a = run({"scan", "--from", "29", "--to", "20000", "--all"});
  const auto b = run({"scan", "--from", "29", "--to", "20000", "--all", "--jobs", "4"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, HlAcceptsScientificCutoff) {
  const auto r = run({"hl", "--r", "1", "--c", "-3", "--cutoff", "1e5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse(r)["cutoff"], 100000);
  EXPECT_EQ(run({"hl", "--r", "1", "--c", "-3", "--cutoff", "1500.5"}).code, kParse);
}

TEST(Cli, FamiliesCsv) {
  const auto r = run({"families", "--kmax", "6", "--csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1,-3,6,93,0\n"), std::string::npos);
  EXPECT_NE(r.out.find("1,-1,3,29,1\n"), std::string::npos);
}

TEST(Cli, Avoid) {
  const auto j = parse(run({"avoid", "--a", "29"}));
  const auto avoided = j["avoided"].get<std::vector<long>>();
  EXPECT_NE(std::find(avoided.begin(), avoided.end(), 4), avoided.end());
}

TEST(Cli, Tilde) {
  const auto j = parse(run({"tilde", "--p", "5"}));
  EXPECT_EQ(j["tilde_l"], 8);
}

TEST(Cli, ExtremalIsReproducibleAndSeedable) {
  const auto a = run({"extremal", "--p", "29", "--samples", "300", "--seed", "5"});
  const auto b = run({"extremal", "--p", "29", "--samples", "300", "--seed", "5"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  ::setenv("RC_SEED", "6", 1);
  const auto c = run({"extremal", "--p", "29", "--samples", "300", "--seed", "5"});
  ::unsetenv("RC_SEED");
  EXPECT_EQ(parse(c)["seed"], 6);
}

}  // namespace
}  // namespace rcayley::cli
