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

// Acceptance driver: prints one PASS / FAIL / SKIPPED line per criterion
// and exits nonzero when any criterion fails.

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "test_support.hpp"

namespace {

using namespace steenrod;
using steenrod::testing::load_space;

const auto Z = CoefficientRing::integers();
const auto Z2 = CoefficientRing::mod(2);

enum class Status { Pass, Fail, Skipped };

struct Outcome {
  Status status = Status::Pass;
  std::string detail;
};

struct Check {
  Outcome out;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      out.status = Status::Fail;
      if (!out.detail.empty()) out.detail += "; ";
      out.detail += what;
    }
  }
};

int failures = 0;

void run(const std::string& id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {Status::Fail, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.status == Status::Pass && limit_seconds > 0 && secs > limit_seconds) {
    out.status = Status::Fail;
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("time limit exceeded");
  }
  const char* label = out.status == Status::Pass ? "PASS" : out.status == Status::Fail ? "FAIL" : "SKIPPED";
  if (out.status == Status::Fail) ++failures;
  std::ostringstream line;
  line << "criterion " << std::setw(4) << std::left << id << " " << std::setw(7) << label << " " << title << "  ["
       << std::fixed << std::setprecision(2) << secs << " s]";
  if (!out.detail.empty()) line << "  " << out.detail;
  std::cout << line.str() << std::endl;
}

std::vector<std::string> fixtures() {
  std::vector<std::string> names(steenrod::testing::all_fixtures().begin(), steenrod::testing::all_fixtures().end());
  if (std::filesystem::exists(steenrod::testing::fixture_path("wu_manifold"))) names.push_back("wu_manifold");
  return names;
}

std::vector<Integer> ones(std::size_t n) { return std::vector<Integer>(n, 1); }

Outcome cup_i_formula() {
  Check c;
  std::size_t checked = 0;
  for (const char* name : {"s3", "rp2", "rp3", "cp2"}) {
    const auto space = load_space(name);
    const int d = space->dim();
    std::mt19937_64 rng(std::hash<std::string>{}(name) ^ 0x5eedULL);
    for (int i = 1; i <= 3; ++i) {
      std::vector<std::pair<int, int>> degrees;
      for (int p = 0; p <= d; ++p)
        for (int q = 0; q <= d; ++q)
          if (p + q - i >= 0 && p + q - i + 1 <= d) degrees.emplace_back(p, q);
      if (degrees.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, degrees.size() - 1);
      for (int trial = 0; trial < 100; ++trial) {
        const auto [p, q] = degrees[pick(rng)];
        const auto u = random_cochain(space->complex_ptr(), p, Z, rng);
        const auto v = random_cochain(space->complex_ptr(), q, Z, rng);
        ++checked;
        c.require(cup_i_relation_holds(u, v, i),
                  std::string(name) + " i=" + std::to_string(i) + " p=" + std::to_string(p) + " q=" + std::to_string(q));
      }
    }
  }
  c.out.detail = std::to_string(checked) + " pairs" + (c.out.detail.empty() ? "" : "; " + c.out.detail);
  return c.out;
}

Outcome steenrod_axioms() {
  Check c;
  std::size_t classes = 0;
  for (const auto& name : fixtures()) {
    const auto space = load_space(name);
    const int d = space->dim();
    for (int r = 0; r <= d; ++r)
      for (std::size_t a = 0; a < space->cohomology(r, Z2).size(); ++a) {
        ++classes;
        const auto x = space->basis_class(r, Z2, a);
        const std::string tag = name + " a" + std::to_string(r) + "_" + std::to_string(a);
        c.require(sq(*space, 0, x) == x, tag + " Sq^0");
        if (2 * r <= d) c.require(sq(*space, r, x).coords == cup(*space, x, x).coords, tag + " Sq^r");
        for (int i = r + 1; r + i <= d; ++i) c.require(sq(*space, i, x).is_zero(), tag + " Sq^i above r");
        if (r + 1 <= d) c.require(sq(*space, 1, x).coords == bockstein(*space, x).coords, tag + " Sq^1");
      }
  }
  if (c.out.status == Status::Pass) c.out.detail = std::to_string(classes) + " classes";
  return c.out;
}

Outcome cartan() {
  Check c;
  const auto K = load_space("rp2");
  const auto rep = cartan_check(*K, *K);
  Space P(product_complex(K->complex(), K->complex()));
  c.require(P.complex().size(4) == 600, "product does not have 600 top simplices");
  c.require(rep.passed, "Cartan formula fails");
  if (c.out.status == Status::Pass) c.out.detail = std::to_string(rep.entries.size()) + " entries";
  return c.out;
}

std::vector<std::shared_ptr<Space>> dimension_five() {
  std::vector<std::shared_ptr<Space>> out;
  for (const auto& name : fixtures()) {
    auto space = load_space(name);
    if (space->dim() % 4 == 1 && space->dim() > 1) out.push_back(std::move(space));
  }
  return out;
}

Outcome skew_symmetry() {
  Check c;
  std::string names;
  for (const auto& space : dimension_five()) {
    names += (names.empty() ? "" : ", ") + space->complex().name();
    for (int n : {1, 2}) c.require(pairing_skew_check(*space, n).passed, space->complex().name() + " n=" + std::to_string(n));
  }
  c.out.detail = names + (c.out.detail.empty() ? "" : "; " + c.out.detail);
  return c.out;
}

Outcome linking_forms() {
  Check c;
  const auto rp3 = load_space("rp3");
  const auto form = linking_form(*rp3, 1);
  c.require(form.size() == 1 && form.gram[0][0] == Fraction(1, 2), "RP3 gram is not [1/2]");
  for (std::uint64_t seed : {11u, 2026u, 987654321u})
    c.require(linking_form(*rp3, 1, seed).gram == form.gram, "RP3 gram changes under seed " + std::to_string(seed));
  for (auto [name, p] : std::vector<std::pair<std::string, int>>{{"lens_3_1", 3}, {"lens_4_1", 4}}) {
    const auto space = load_space(name);
    const auto f = linking_form(*space, 1, 1);
    c.require(f.size() == 1 && f.is_nondegenerate(), name + " form degenerate");
    if (f.size() == 1) c.require(f.gram[0][0].den() == p, name + " diagonal does not have order " + std::to_string(p));
  }
  return c.out;
}

Outcome characteristic_classes() {
  Check c;
  {
    const auto space = load_space("cp2");
    const auto cc = stiefel_whitney(*space);
    c.require(cc.v[2].coords == ones(1), "CP2 v2 != h");
    c.require(cc.w[0].coords == ones(1) && cc.w[2].coords == ones(1) && cc.w[4].coords == ones(1) &&
                  cc.w[1].coords.empty() && cc.w[3].coords.empty(),
              "CP2 w != 1 + h + h^2");
  }
  {
    const auto cc = stiefel_whitney(*load_space("rp2"));
    for (int k = 0; k <= 2; ++k) c.require(cc.w[k].coords == ones(1), "RP2 w_" + std::to_string(k) + " != x^k");
  }
  for (const char* name : {"s1", "s2", "s3", "s5"}) {
    const auto cc = stiefel_whitney(*load_space(name));
    c.require(cc.w[0].coords == ones(1), std::string(name) + " w_0");
    for (std::size_t k = 1; k < cc.w.size(); ++k) c.require(cc.w[k].is_zero(), std::string(name) + " w != 1");
  }
  for (const auto& name : fixtures()) {
    const auto cc = stiefel_whitney(*load_space(name));
    c.require(cc.v1_equals_w1, name + " v1 != w1");
    c.require(cc.v2_equals_w2_plus_w1sq, name + " v2 != w2 + w1^2");
  }
  return c.out;
}

Outcome pushforward() {
  Check c;
  for (const char* name : {"s1", "s2", "rp2"}) c.require(wu_pushforward_check(*load_space(name)).passed, name);
  return c.out;
}

Outcome bock_identity() {
  Check c;
  std::size_t entries = 0;
  for (const auto& space : dimension_five()) {
    const auto rep = verify_bock_identity(*space);
    entries += rep.entries.size();
    c.require(rep.passed, space->complex().name());
  }
  if (c.out.status == Status::Pass) c.out.detail = std::to_string(entries) + " middle classes";
  return c.out;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

// Checks shared by the Wu-manifold fixture and its dimension-5 substitute.
void counterexample_checks(Check& c, const Space& space) {
  const auto rep = alternation_criterion(space, 1);
  c.require(!rep.middle_obstruction.is_zero(), "integral Bockstein of v2 vanishes");
  c.require(rep.form.size() == 1 && rep.form.gram[0][0] == Fraction(1, 2), "gram diagonal is not [1/2]");
  c.require(!rep.alternating_verdict, "verdict is alternating");
  c.require(rep.cross_check, "criterion and direct form disagree");
}

Outcome wu_manifold() {
  const auto path = steenrod::testing::fixture_path("wu_manifold");
  const auto sidecar = path + ".sha256";
  if (!std::filesystem::exists(path)) return {Status::Skipped, "fixture wu_manifold.txt not present"};
  if (!std::filesystem::exists(sidecar)) return {Status::Skipped, "fixture present but checksum sidecar missing"};
  std::istringstream side(steenrod::testing::read_file(sidecar));
  std::string expected;
  side >> expected;
  const auto text = steenrod::testing::read_file(path);
  if (sha256_hex(text) != expected) return {Status::Skipped, "fixture checksum does not match"};
  Check c;
  Space space(parse_complex(text, "wu_manifold"));
  c.require(space.complex().vertex_count() == 15, "fixture does not have 15 vertices");
  c.require(space.dim() == 5, "fixture is not 5-dimensional");
  counterexample_checks(c, space);
  return c.out;
}

Outcome wu_substitute() {
  Check c;
  counterexample_checks(c, *load_space("dold_p12"));
  if (c.out.status == Status::Pass) c.out.detail = "dold_p12 stands in for the absent fixture";
  return c.out;
}

Outcome reciprocity() {
  Check c;
  const auto rep = reciprocity_scan(10000);
  std::size_t both_three = 0;
  for (const auto& [p, q] : rep.violations) both_three += (p % 4 == 3 && q % 4 == 3);
  c.require(rep.violations.empty(), std::to_string(rep.violations.size()) + " violations, " +
                                        std::to_string(both_three) + " of them with p = q = 3 mod 4");
  c.require(rep.oracle_disagreements == 0, std::to_string(rep.oracle_disagreements) + " oracle disagreements");
  if (c.out.status == Status::Pass)
    c.out.detail = std::to_string(rep.primes) + " primes, " + std::to_string(rep.pairs) + " ordered pairs";
  return c.out;
}

Outcome determinism() {
  Check c;
  const std::string base = std::string("--fixtures ") + STEENROD_FIXTURE_DIR + " verify --json --seed 7 ";
  for (const auto& name : fixtures()) {
    const auto a = steenrod::testing::run_cli(base + name);
    const auto b = steenrod::testing::run_cli(base + name);
    c.require(!a.output.empty() && a.output == b.output, name + " reports differ");
    c.require(a.exit_code == 0 && b.exit_code == 0, name + " verify exit code " + std::to_string(a.exit_code));
  }
  return c.out;
}

}  // namespace

int main() {
  run("1", "cup-i homotopy formula on random integral pairs", 30, cup_i_formula);
  run("2", "Steenrod axioms on every fixture basis class", 30, steenrod_axioms);
  run("3", "Cartan formula on RP2 x RP2", 300, cartan);
  run("4", "skew-symmetry of <x,y>_n for n = 1, 2", 60, skew_symmetry);
  run("5", "linking forms of RP3 and the lens fixtures", 60, linking_forms);
  run("6", "Wu and Stiefel-Whitney classes", 120, characteristic_classes);
  run("7", "pushforward of Sq of the diagonal class", 300, pushforward);
  run("8", "u cup beta(u) = Sq^2d beta(u) in dimension 5", 120, bock_identity);
  run("9", "Wu manifold counterexample (conditional)", 600, wu_manifold);
  run("9s", "counterexample checks on the dimension-5 substitute", 600, wu_substitute);
  run("10", "quadratic reciprocity scan below 10^4", 10, reciprocity);
  run("11", "verify --json is byte-identical across runs", 0, determinism);
  std::cout << (failures == 0 ? "all criteria pass or are skipped" : std::to_string(failures) + " criteria FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
