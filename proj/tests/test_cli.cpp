// Copyright 2026 The hecke-topo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct Result {
  int code = -1;
  std::string out;
};

// stderr is folded into out only when asked; JSON checks want stdout alone.
Result run(const std::string& args, bool with_stderr = false) {
  std::string cmd = std::string(HECKE_CLI_PATH) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json run_json(const std::string& args) {
  Result r = run(args);
  EXPECT_EQ(r.code, 0) << args;
  return Json::parse(r.out);
}

bool all_zero(const Json& series) {
  for (const auto& c : series["coeffs"])
    if (c != "0") return false;
  return true;
}

TEST(Cli, EigenformsWeight12) {
  Json j = run_json("eigenforms --weight 12 --primes 2,3,5");
  ASSERT_EQ(j["characters"].size(), 2u);
  bool saw_delta = false;
  for (const auto& c : j["characters"])
    if (c["kind"] == "cuspidal") {
      saw_delta = true;
      EXPECT_EQ(c["eigenvalues"]["2"], "-24");
      EXPECT_EQ(c["eigenvalues"]["3"], "252");
      EXPECT_EQ(c["eigenvalues"]["5"], "4830");
    }
  EXPECT_TRUE(saw_delta);
}

TEST(Cli, TopoClassifySplitCase) {
  // j = 1 > nu_5(1): block diagonal, dim M_16 + dim M_12 = 4 forms
  Json j = run_json("topo-classify --p 5 --n 1 --j 1 --weight 16");
  ASSERT_EQ(j.size(), 4u);
  int bottom_only = 0, top_only = 0;
  for (const auto& f : j) {
    EXPECT_EQ(f["bottom"]["weight"], 16);
    EXPECT_EQ(f["top"]["weight"], 12);
    if (all_zero(f["top"])) ++bottom_only;
    if (all_zero(f["bottom"])) ++top_only;
  }
  EXPECT_EQ(bottom_only, 2);
  EXPECT_EQ(top_only, 2);
}

TEST(Cli, TopoClassifyAttachedCase) {
  Json j = run_json("topo-classify --p 5 --n 1 --j 0 --weight 16 --primes 2,3,7");
  ASSERT_FALSE(j.empty());
  for (const auto& f : j) {
    EXPECT_TRUE(f.contains("support"));
    EXPECT_EQ(f["character"].size(), 3u);
  }
}

TEST(Cli, CobarVerify) {
  Json j = run_json("cobar-verify --p 5 --n 1");
  EXPECT_EQ(j["cocycle"], true);
  EXPECT_EQ(j["ext1Order"], "5");
  EXPECT_EQ(run_json("cobar-verify --p 5 --n 10 --j 2")["ext1Order"], "25");
}

TEST(Cli, KappaOrder) {
  Json j = run_json("kappa-order --p 5 --n 5");
  EXPECT_EQ(j["order"], "25");
  EXPECT_EQ(j["stableUnderExtendedL"], true);
  EXPECT_EQ(run_json("kappa-order --p 7 --n 2")["order"], "7");
}

TEST(Cli, Obstruction) {
  Json o = run_json("obstruction --p 5 --n 1 --j 0 --g delta");
  EXPECT_EQ(o["verdict"], "obstructed");
  EXPECT_EQ(o["order"], "5");
  Json e = run_json("obstruction --p 5 --n 1 --j 1 --g delta");
  EXPECT_EQ(e["verdict"], "extends");
  EXPECT_EQ(e["f0"]["weight"], 16);
}

TEST(Cli, QexpDelta) {
  Json j = run_json("qexp --g delta --prec 6");
  EXPECT_EQ(j["weight"], 12);
  EXPECT_EQ(j["coeffs"], Json({"0", "1", "-24", "252", "-1472", "4830"}));
  Json e = run_json("qexp --g E4 --prec 3");
  EXPECT_EQ(e["coeffs"], Json({"1", "240", "2160"}));
}

TEST(Cli, FlagErrorsExitTwo) {
  for (const char* args : {"kappa-order --p 4 --n 1", "kappa-order --p 3 --n 1", "eigenforms --weight 13",
                           "eigenforms --weight 12 --primes 2,9", "kappa-order --p 5", "no-such-command", "",
                           "qexp --g foo", "obstruction --p 5 --n 1 --g E4*E4*E4", "kappa-order --p 5 --n 0",
                           "topo-classify --p 5 --n 1 --j 0 --weight 16 --primes 2,5"})
    EXPECT_EQ(run(args).code, 2) << args;
}

TEST(Cli, TamperedSelftestNamesTheFailure) {
  Result r = run("selftest --tamper", true);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("assertion failed: criterion 6"), std::string::npos) << r.out;
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  for (const char* args : {"eigenforms --weight 24 --primes 2,3", "topo-classify --p 7 --n 1 --j 0 --weight 20",
                           "cobar-verify --p 7 --n 7 --csv"}) {
    Result a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, CacheNeverChangesOutput) {
  fs::path dir = fs::temp_directory_path() / ("hecke-cli-cache-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  const std::string args = "--cache-dir " + dir.string() + " eigenforms --weight 26 --primes 2,3,5,7";
  Result cold = run(args);
  ASSERT_EQ(cold.code, 0);
  ASSERT_TRUE(fs::exists(dir));
  EXPECT_EQ(run(args).out, cold.out);
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) std::ofstream(e.path(), std::ios::trunc) << "garbage";
  EXPECT_EQ(run(args).out, cold.out);
  fs::remove_all(dir);
  EXPECT_EQ(run(args).out, cold.out);
  fs::remove_all(dir);
}

TEST(Cli, CsvMatchesJson) {
  Json j = run_json("hecke-matrix --weight 24 --n 3");
  Result csv = run("hecke-matrix --weight 24 --n 3 --csv");
  ASSERT_EQ(csv.code, 0);
  std::string expect;
  for (const auto& row : j["entries"]) {
    for (std::size_t i = 0; i < row.size(); ++i) expect += (i ? "," : "") + row[i].get<std::string>();
    expect += "\n";
  }
  EXPECT_EQ(csv.out, expect);
  EXPECT_EQ(run("--csv qexp --g delta --prec 3").out, "n,coeff\n0,0\n1,1\n2,-24\n");
  EXPECT_EQ(run("cobar-verify --p 5 --n 1 --csv").out,
            "path,value\ncocycle,true\next1Order,5\nzeta1,p^j*sigma_n\n");
}

TEST(Cli, ReportEnvelope) {
  Json r = run_json("--report kappa-order --p 5 --n 1");
  std::vector<std::string> keys;
  for (auto it = r.begin(); it != r.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "parameters", "result", "assertions"}));
  EXPECT_EQ(r["command"], "kappa-order");
  EXPECT_EQ(r["parameters"]["p"], 5);
  EXPECT_EQ(r["result"]["order"], "5");
  EXPECT_EQ(r["assertions"]["failed"], 0);
  EXPECT_TRUE(run_json("--report --timing kappa-order --p 5 --n 1").contains("wallTimeMs"));
}

}  // namespace
