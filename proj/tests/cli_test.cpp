/*
 *   Copyright 2026 The fuzzint Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args)
{
  const std::string cmd = std::string(FUZZINT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    return {-1, {}};
  }
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) {
    out.append(buf, n);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content)
{
  const auto path = std::filesystem::temp_directory_path() / ("fuzzint_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const std::string example_capacity = R"({"points": ["a", "b"], "mu": {"a": "1/2", "b": "3/10", "a,b": "1"}})";
const std::string example_functions = R"({"f": {"a": "1", "b": "2/5"}, "g": {"a": "4/5", "b": "3/5"}})";

} // namespace

TEST(Cli, ReproMatchesWorkedExample)
{
  const auto r = run("repro");
  ASSERT_EQ(r.code, 0) << r.out;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_TRUE(j["strict_failure_of_meet"].get<bool>());
  ASSERT_EQ(j["integrals"].size(), 3u);
  EXPECT_EQ(j["integrals"][0]["actual"], "1/2");
  EXPECT_EQ(j["integrals"][1]["actual"], "3/5");
  EXPECT_EQ(j["integrals"][2]["actual"], "2/5");
}

TEST(Cli, ReproIgnoresBetaAndRunsInFloat)
{
  for (int k = 0; k <= 10; ++k) {
    const auto r = run("repro --beta " + std::to_string(k) + "/10");
    EXPECT_EQ(r.code, 0) << "beta " << k << "/10: " << r.out;
  }
  EXPECT_EQ(run("--realization float --tolerance 1e-9 repro").code, 0);
  EXPECT_EQ(run("repro --realization float").code, 0);
  const auto text = run("--format text repro");
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("ok"), std::string::npos);
}

TEST(Cli, EvalPrintsValueAndThreshold)
{
  const auto cap = temp_file("cap.json", example_capacity);
  const auto fn = temp_file("fn.json", example_functions);
  const auto r = run("eval --semicopula prod --capacity " + cap + " --function " + fn);
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(json::parse(r.out), json::parse(R"({"value": "1/2", "argmax_t": "1", "method": "exact-threshold"})"));

  const auto grid = run("eval --semicopula prod --capacity " + cap + " --function " + fn + " --grid-step 1/10");
  ASSERT_EQ(grid.code, 0);
  EXPECT_EQ(json::parse(grid.out)["value"], "1/2");
  EXPECT_EQ(json::parse(grid.out)["method"], "grid-oracle");

  const auto restricted = run("eval --semicopula min --capacity " + cap + " --function " + fn + " --restrict b");
  ASSERT_EQ(restricted.code, 0);
  EXPECT_EQ(json::parse(restricted.out)["value"], "3/10");
}

TEST(Cli, CheckExitCodes)
{
  const auto bad = run("check shift --semicopula drastic --grid-step 1/10");
  ASSERT_EQ(bad.code, 2) << bad.out;
  const json j = json::parse(bad.out);
  EXPECT_EQ(j["verdict"], "fails");
  EXPECT_EQ(j["witness"]["inputs"], json::parse(R"({"a": "1/10", "b": "1/5", "c": "9/10"})"));

  EXPECT_EQ(run("check shift --semicopula prod --grid-step 1/20").code, 0);
  EXPECT_EQ(run("check three --semicopula lukasiewicz --semicopula min --semicopula min --grid-step 1/20").code, 0);
  EXPECT_EQ(run("check luka-dom --semicopula drastic --grid-step 1/10").code, 2);
  EXPECT_EQ(run("check idempotency --semicopula prod --op prod --grid-step 1/2").code, 2);
  EXPECT_EQ(run("check idempotency --semicopula prod --op join --grid-step 1/10").code, 0);
  EXPECT_EQ(run("check maxitivity --semicopula drastic --cases 200 --seed 4").code, 0);
  EXPECT_EQ(run("check commuting --semicopula prod --op meet --cases 200").code, 2);
}

TEST(Cli, CheckSingleInstanceAndReplay)
{
  const auto cap = temp_file("cap2.json", example_capacity);
  const auto fn = temp_file("fn2.json", example_functions);
  const auto r = run("check commuting --semicopula prod --op meet --capacity " + cap + " --function " + fn);
  ASSERT_EQ(r.code, 2) << r.out;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["witness"]["lhs"], "2/5");
  EXPECT_EQ(j["witness"]["rhs"], "1/2");

  const auto found = run("search --law commuting --semicopula prod --op meet --n 2 --denominator 10");
  ASSERT_EQ(found.code, 2) << found.out;
  const auto report = temp_file("report.json", found.out);
  const auto replayed = run("check commuting --semicopula prod --op meet --instance " + report);
  ASSERT_EQ(replayed.code, 2) << replayed.out;
  const json a = json::parse(found.out)["witness"];
  const json b = json::parse(replayed.out)["witness"];
  EXPECT_EQ(a["lhs"], b["lhs"]);
  EXPECT_EQ(a["rhs"], b["rhs"]);

  const auto shift = run("check weak-subadd --semicopula prod --capacity " + cap + " --function " + fn
                         + " --shift 0");
  EXPECT_EQ(shift.code, 0) << shift.out;
}

TEST(Cli, SearchIsDeterministic)
{
  const std::string args = "search --law maxitivity --semicopula prod --n 3 --denominator 8 --budget 2000 --seed 7";
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(json::parse(a.out)["partial"].get<bool>());
  const auto pointwise = run("search --law shift --semicopula prod --denominator 20");
  ASSERT_EQ(pointwise.code, 0);
  EXPECT_EQ(json::parse(pointwise.out)["cases"], 4851);
}

TEST(Cli, AxiomsAudit)
{
  EXPECT_EQ(run("axioms --op prod --grid-step 1/20").code, 0);
  EXPECT_EQ(run("axioms --op co:prod --grid-step 1/20").code, 2);
  EXPECT_EQ(run("--realization float axioms --op lukasiewicz --grid-step 0.05").code, 0);
}

TEST(Cli, InputErrorsExitOne)
{
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("check nonsense").code, 1);
  EXPECT_EQ(run("check shift --semicopula hamacher").code, 1);
  EXPECT_EQ(run("check shift --grid-step 0").code, 1);
  EXPECT_EQ(run("--tolerance -1 repro").code, 1);
  EXPECT_EQ(run("--realization fuzzy repro").code, 1);
  EXPECT_EQ(run("repro --beta 3/2").code, 1);
  EXPECT_EQ(run("search --law commuting --semicopula prod").code, 1);
  EXPECT_EQ(run("search --law maxitivity --n 9").code, 1);
  EXPECT_EQ(run("eval --semicopula prod --capacity /nonexistent.json --function /nonexistent.json").code, 1);

  const auto bad_cap = temp_file("bad_cap.json", R"({"points": ["a", "b"], "mu": {"a": 0.6, "b": 0.2, "a,b": 0.5}})");
  const auto fn = temp_file("fn3.json", example_functions);
  EXPECT_EQ(run("eval --semicopula prod --capacity " + bad_cap + " --function " + fn).code, 1);
  const auto garbage = temp_file("garbage.json", "{not json");
  EXPECT_EQ(run("check commuting --op meet --instance " + garbage).code, 1);
  EXPECT_EQ(run("check weak-subadd --capacity " + bad_cap).code, 1);
}

TEST(Cli, HelpExitsZero)
{
  const auto r = run("--help");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("repro"), std::string::npos);
}
