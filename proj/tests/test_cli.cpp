// Copyright 2026 The steenrod Authors.
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

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "test_support.hpp"

namespace steenrod {
namespace {

using testing::run_cli;

const std::string kFixtures = std::string("--fixtures ") + STEENROD_FIXTURE_DIR + " ";

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("steenrod_cli_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(Cli, HomologyModTwo) {
  const auto r = run_cli(kFixtures + "homology rp2 --ring mod:2");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(contains(r.output, "H^0 = Z/2")) << r.output;
  EXPECT_TRUE(contains(r.output, "H^1 = Z/2")) << r.output;
  EXPECT_TRUE(contains(r.output, "H^2 = Z/2")) << r.output;
}

TEST(Cli, HomologyIntegralTorsion) {
  const auto r = run_cli(kFixtures + "homology rp3 --ring z");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.output, "H^1 = 0")) << r.output;
  EXPECT_TRUE(contains(r.output, "H^2 = Z/2")) << r.output;
  EXPECT_TRUE(contains(r.output, "H^3 = Z")) << r.output;
}

TEST(Cli, HomologyJsonSingleDegree) {
  const auto r = run_cli(kFixtures + "homology lens_4_1 --degree 2 --json");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.output);
  ASSERT_EQ(j["groups"].size(), 1u);
  EXPECT_EQ(j["groups"][0]["degree"], 2);
  EXPECT_EQ(j["groups"][0]["free_rank"], 0);
  EXPECT_EQ(j["groups"][0]["torsion"], nlohmann::json::array({4}));
  EXPECT_EQ(j["summary"]["orientable"], true);
}

TEST(Cli, PathInputWithoutFixtureDirectory) {
  const auto ok = run_cli("homology " + testing::fixture_path("s2"));
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_TRUE(contains(ok.output, "H^2 = Z")) << ok.output;
}

TEST(Cli, GarbageFileIsParseError) {
  const auto path = temp_file("garbage.txt", "0 1 2\nthis is not a complex\n");
  EXPECT_EQ(run_cli("homology " + path).exit_code, 2);
}

TEST(Cli, MissingFileIsParseError) { EXPECT_EQ(run_cli("homology /nonexistent/complex.txt").exit_code, 2); }

TEST(Cli, OpenComplexIsTopologyError) {
  const auto path = temp_file("disk.txt", "0 1 2\n0 1 3\n0 2 3\n");
  EXPECT_EQ(run_cli("verify " + path).exit_code, 3);
  EXPECT_EQ(run_cli("wu " + path).exit_code, 3);
}

TEST(Cli, EvenDimensionalLinkingFormIsRejected) { EXPECT_NE(run_cli(kFixtures + "linkform cp2").exit_code, 0); }

TEST(Cli, ProductOverBoundIsSizeError) {
  EXPECT_EQ(run_cli(kFixtures + "product rp2 rp2 --bound 100").exit_code, 4);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli("").exit_code, 1);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 1);
  EXPECT_EQ(run_cli(kFixtures + "homology rp2 --bogus").exit_code, 1);
  EXPECT_EQ(run_cli(kFixtures + "homology rp2 --ring q").exit_code, 1);
  EXPECT_EQ(run_cli("lens 4 2").exit_code, 1);
}

TEST(Cli, WuClassesOfComplexProjectivePlane) {
  const auto r = run_cli(kFixtures + "wu cp2");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.output, "v = 1 + a2")) << r.output;
  EXPECT_TRUE(contains(r.output, "w = 1 + a2 + a4")) << r.output;
}

TEST(Cli, LinkingFormOfProjectiveThreeSpace) {
  const auto r = run_cli(kFixtures + "linkform rp3");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.output, "gram [[1/2]]")) << r.output;
  const auto j = nlohmann::json::parse(run_cli(kFixtures + "linkform rp3 --json --seed 4").output);
  EXPECT_EQ(j["form"]["gram"][0][0]["num"], 1);
  EXPECT_EQ(j["form"]["gram"][0][0]["den"], 2);
}

TEST(Cli, QuadraticReciprocityScan) {
  const auto r = run_cli("qr --bound 1000");
  const auto expected = reciprocity_scan(1000).violations.size();
  EXPECT_EQ(r.exit_code, expected == 0 ? 0 : 5);
  EXPECT_TRUE(contains(r.output, std::to_string(expected) + " violations among 167 odd primes below 1000")) << r.output;
  const auto j = nlohmann::json::parse(run_cli("qr --bound 100 --json").output);
  EXPECT_EQ(j["primes"], 24);
  EXPECT_EQ(j["violations"].size(), reciprocity_scan(100).violations.size());
}

TEST(Cli, VerifySphere) {
  const auto r = run_cli(kFixtures + "verify s5");
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(contains(r.output, "all applicable checks pass")) << r.output;
}

TEST(Cli, VerifyJsonIsDeterministic) {
  const auto a = run_cli(kFixtures + "verify dold_p12 --json --seed 3");
  const auto b = run_cli(kFixtures + "verify dold_p12 --json --seed 3");
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.output, b.output);
  const auto j = nlohmann::json::parse(a.output);
  EXPECT_EQ(j["verdict"], "non-alternating");
}

TEST(Cli, SteenrodSquares) {
  const auto r = run_cli(kFixtures + "steenrod rp2 --json");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.output);
  EXPECT_TRUE(j["axioms_hold"].get<bool>());
}

TEST(Cli, ProductAndLensEmitParseableComplexes) {
  const auto prod = run_cli(kFixtures + "product s1 s1");
  ASSERT_EQ(prod.exit_code, 0);
  const auto T = parse_complex(prod.output);
  EXPECT_EQ(T.size(2), 18u);
  const auto lens = run_cli("lens 3 1");
  ASSERT_EQ(lens.exit_code, 0);
  const auto L = parse_complex(lens.output);
  EXPECT_EQ(L.size(3), 288u);
  EXPECT_EQ(L.name(), "L(3,1)");
}

}  // namespace
}  // namespace steenrod
