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

// Command line front end. Every subcommand reads complexes in the facet-list
// format, prints a text summary or (with --json) a deterministic JSON report.
//
// Exit codes: 0 success, 1 usage, 2 parse, 3 topology precondition,
// 4 size bound, 5 failed verification or internal error.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "steenrod/report.hpp"
#include "steenrod/steenrod.hpp"

namespace {

using steenrod::report::Json;
namespace fs = std::filesystem;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitTopology = 3;
constexpr int kExitSize = 4;
constexpr int kExitFailed = 5;

struct Config {
  std::vector<std::string> inputs;
  std::string ring = "z";
  std::optional<int> degree;
  std::uint64_t seed = 1;
  bool json = false;
  std::optional<std::int64_t> bound;
  std::string fixtures;
  int p = 0;
  int q = 1;
};

fs::path resolve(const Config& cfg, const std::string& name) {
  if (fs::exists(name)) return name;
  if (!cfg.fixtures.empty()) {
    for (const auto& candidate : {fs::path(cfg.fixtures) / name, fs::path(cfg.fixtures) / (name + ".txt")})
      if (fs::exists(candidate)) return candidate;
  }
  throw steenrod::ParseError("cannot open input '" + name + "'");
}

steenrod::SimplicialComplex load(const Config& cfg, const std::string& name) {
  const auto path = resolve(cfg, name);
  std::ifstream in(path);
  if (!in) throw steenrod::ParseError("cannot open input '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return steenrod::parse_complex(buffer.str(), path.stem().string());
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string group_text(const steenrod::CohomologyBasis& B) {
  std::vector<std::string> parts;
  if (B.free_rank > 0) {
    const std::string base = B.ring.is_integers() ? "Z" : B.ring.name();
    parts.push_back(B.free_rank == 1 ? base : base + "^" + std::to_string(B.free_rank));
  }
  for (const auto& t : B.torsion_invariants) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

// Names basis class i of degree k as a<k> or a<k>_<i> and sums the terms.
std::string class_sum_text(const Json& graded) {
  std::vector<std::string> terms;
  for (const auto& c : graded) {
    const int k = c["degree"];
    const auto& coords = c["coords"];
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i].get<std::int64_t>() == 0) continue;
      if (k == 0) terms.push_back("1");
      else terms.push_back("a" + std::to_string(k) + (coords.size() > 1 ? "_" + std::to_string(i) : ""));
    }
  }
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? " + " : "") + terms[i];
  return out;
}

std::string fraction_text(const Json& f) {
  return std::to_string(f["num"].get<std::int64_t>()) + "/" + std::to_string(f["den"].get<std::int64_t>());
}

std::string gram_text(const Json& gram) {
  std::string out = "[";
  for (std::size_t i = 0; i < gram.size(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < gram[i].size(); ++j) out += (j ? ", " : "") + fraction_text(gram[i][j]);
    out += "]";
  }
  return out + "]";
}

int cmd_homology(const Config& cfg) {
  steenrod::Space space(load(cfg, cfg.inputs.at(0)));
  const auto R = steenrod::CoefficientRing::parse(cfg.ring);
  if (cfg.degree && (*cfg.degree < 0 || *cfg.degree > space.dim()))
    throw steenrod::DomainError("degree out of range");
  if (cfg.json) {
    auto j = steenrod::report::homology(space, R, cfg.degree);
    j["summary"] = steenrod::report::complex_summary(space.complex());
    emit(j);
    return 0;
  }
  std::cout << space.complex().name() << ": dimension " << space.dim() << ", coefficients " << R.name() << '\n';
  for (int k = 0; k <= space.dim(); ++k)
    if (!cfg.degree || *cfg.degree == k)
      std::cout << "  H^" << k << " = " << group_text(space.cohomology(k, R)) << '\n';
  return 0;
}

void require_closed(const steenrod::Space& space) {
  const auto pm = steenrod::closed_pseudomanifold_check(space.complex());
  if (!pm.closed) {
    std::string msg = space.complex().name() + " is not a closed pseudomanifold";
    if (!pm.diagnostics.empty()) msg += ": " + pm.diagnostics.front();
    throw steenrod::TopologyError(msg);
  }
}

int cmd_steenrod(const Config& cfg) {
  steenrod::Space space(load(cfg, cfg.inputs.at(0)));
  const auto j = steenrod::report::steenrod(space, cfg.degree);
  if (cfg.json) {
    emit(j);
    return 0;
  }
  std::cout << space.complex().name() << ": Steenrod squares on the Z/2 basis\n";
  for (const auto& c : j["classes"]) {
    std::cout << "  a" << c["degree"].get<int>() << "_" << c["index"].get<int>() << ":";
    int k = 0;
    for (const auto& s : c["sq"]) std::cout << " Sq^" << k++ << "=" << s.dump();
    std::cout << '\n';
  }
  std::cout << "  axioms " << (j["axioms_hold"].get<bool>() ? "hold" : "FAIL") << '\n';
  return 0;
}

int cmd_wu(const Config& cfg) {
  steenrod::Space space(load(cfg, cfg.inputs.at(0)));
  require_closed(space);
  const auto j = steenrod::report::wu(space);
  if (cfg.json) {
    emit(j);
    return 0;
  }
  std::cout << space.complex().name() << '\n';
  std::cout << "  v = " << class_sum_text(j["v"]) << '\n';
  std::cout << "  w = " << class_sum_text(j["w"]) << '\n';
  if (j.contains("verdict")) std::cout << "  linking form is " << j["verdict"].get<std::string>() << '\n';
  return 0;
}

int cmd_linkform(const Config& cfg) {
  steenrod::Space space(load(cfg, cfg.inputs.at(0)));
  require_closed(space);
  if (space.dim() % 2 == 0) throw steenrod::TopologyError("linking form needs an odd-dimensional complex");
  if (!steenrod::orient(space.complex()).orientable) throw steenrod::TopologyError("linking form needs an orientable complex");
  const auto j = steenrod::report::linkform(space, cfg.seed);
  if (cfg.json) {
    emit(j);
    return 0;
  }
  std::cout << space.complex().name() << ": linking form on torsion of H^" << j["form"]["degree"].get<int>() << "(Z)\n";
  std::cout << "  gram " << gram_text(j["form"]["gram"]) << '\n';
  return 0;
}

int cmd_verify(const Config& cfg) {
  steenrod::Space space(load(cfg, cfg.inputs.at(0)));
  require_closed(space);
  steenrod::report::Verifier verifier(space, cfg.seed);
  const auto j = verifier.run();
  if (cfg.json) {
    emit(j);
  } else {
    std::cout << space.complex().name() << '\n';
    for (const auto& c : j["checks"])
      std::cout << "  " << c["status"].get<std::string>() << "  " << c["name"].get<std::string>() << '\n';
    if (j.contains("verdict")) std::cout << "  verdict: " << j["verdict"].get<std::string>() << '\n';
    std::cout << (verifier.passed() ? "all applicable checks pass" : "some checks FAILED") << '\n';
  }
  return verifier.passed() ? 0 : kExitFailed;
}

int cmd_qr(const Config& cfg) {
  const auto bound = cfg.bound.value_or(10000);
  const auto j = steenrod::report::qr(bound);
  if (cfg.json) emit(j);
  else std::cout << j["violations"].size() << " violations among " << j["primes"].get<int>() << " odd primes below " << bound << '\n';
  return j["violations"].empty() && j["oracle_disagreements"].get<int>() == 0 ? 0 : kExitFailed;
}

int cmd_product(const Config& cfg) {
  if (cfg.inputs.size() != 2) throw steenrod::DomainError("product needs two input complexes");
  const auto K = load(cfg, cfg.inputs[0]);
  const auto L = load(cfg, cfg.inputs[1]);
  const auto P = steenrod::bounded_product(K, L, static_cast<std::size_t>(cfg.bound.value_or(1000000)));
  if (cfg.json) emit(steenrod::report::complex_summary(P));
  else std::cout << steenrod::to_text(P);
  return 0;
}

int cmd_lens(const Config& cfg) {
  const auto L = steenrod::lens_space(cfg.p, cfg.q);
  if (cfg.json) emit(steenrod::report::complex_summary(L));
  else std::cout << steenrod::to_text(L);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cohomology operations on triangulated manifolds"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--fixtures", cfg.fixtures, "Directory searched for input names")->check(CLI::ExistingDirectory);

  auto input = [&](CLI::App* sub, int count) {
    sub->add_option("input", cfg.inputs, count == 1 ? "Complex file or fixture name" : "Two complex files")
        ->required()
        ->expected(count);
  };
  auto json = [&](CLI::App* sub) { sub->add_flag("--json", cfg.json, "Emit a JSON report"); };
  auto degree = [&](CLI::App* sub) { sub->add_option("--degree", cfg.degree, "Restrict to one degree"); };
  auto seed = [&](CLI::App* sub) { sub->add_option("--seed", cfg.seed, "Seed for randomized checks"); };
  auto bound = [&](CLI::App* sub, const char* what) { sub->add_option("--bound", cfg.bound, what); };

  auto* homology = app.add_subcommand("homology", "Cohomology groups of a complex");
  input(homology, 1);
  homology->add_option("--ring", cfg.ring, "Coefficients: z or mod:<m>");
  degree(homology);
  json(homology);

  auto* steenrod_cmd = app.add_subcommand("steenrod", "Steenrod squares and Bocksteins on the mod-2 basis");
  input(steenrod_cmd, 1);
  degree(steenrod_cmd);
  json(steenrod_cmd);

  auto* wu = app.add_subcommand("wu", "Wu and Stiefel-Whitney classes");
  input(wu, 1);
  json(wu);

  auto* linkform = app.add_subcommand("linkform", "Torsion linking form of an odd-dimensional complex");
  input(linkform, 1);
  seed(linkform);
  json(linkform);

  auto* verify = app.add_subcommand("verify", "Run the full invariant suite");
  input(verify, 1);
  seed(verify);
  json(verify);

  auto* qr = app.add_subcommand("qr", "Reciprocity scan of mod-2 prime linking numbers");
  bound(qr, "Scan primes below this bound (default 10000)");
  json(qr);

  auto* product = app.add_subcommand("product", "Staircase product of two complexes");
  input(product, 2);
  bound(product, "Maximum number of simplices (default 1000000)");
  json(product);

  auto* lens = app.add_subcommand("lens", "Generate a lens space L(p,q)");
  lens->add_option("p", cfg.p, "Order of the fundamental group")->required();
  lens->add_option("q", cfg.q, "Twist, coprime to p")->required();
  json(lens);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*homology) return cmd_homology(cfg);
    if (*steenrod_cmd) return cmd_steenrod(cfg);
    if (*wu) return cmd_wu(cfg);
    if (*linkform) return cmd_linkform(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*qr) return cmd_qr(cfg);
    if (*product) return cmd_product(cfg);
    if (*lens) return cmd_lens(cfg);
  } catch (const steenrod::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const steenrod::TopologyError& e) {
    std::cerr << "topology error: " << e.what() << '\n';
    return kExitTopology;
  } catch (const steenrod::SizeBoundError& e) {
    std::cerr << "size bound: " << e.what() << '\n';
    return kExitSize;
  } catch (const steenrod::DomainError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
