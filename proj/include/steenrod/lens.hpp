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

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "steenrod/error.hpp"
#include "steenrod/simplicial_complex.hpp"

namespace steenrod {

/// Triangulation of the lens space L(p, q).
///
/// The join of two 2p-gons is a 3-sphere on which Z/p acts freely: the
/// generator rotates the first polygon by two steps and the second by 2q
/// steps. The action is not free on faces of the join itself, so we pass to
/// the barycentric subdivision, where every orbit of faces becomes one
/// vertex of the quotient. The result has 96 p tetrahedra.
inline SimplicialComplex lens_space(int p, int q) {
  if (p < 2) throw DomainError("lens_space needs p >= 2");
  if (std::gcd(p, q) != 1) throw DomainError("lens_space needs gcd(p, q) = 1");
  const int n = 2 * p;
  q = ((q % p) + p) % p;
  // join vertices: a_i -> i, b_j -> n + j
  auto act = [&](const std::vector<int>& face, int g) {
    std::vector<int> out;
    for (int v : face)
      out.push_back(v < n ? (v + 2 * g) % n : n + ((v - n) + 2 * q * g) % n);
    std::sort(out.begin(), out.end());
    return out;
  };
  auto canon = [&](const std::vector<int>& face) {
    std::vector<int> best = act(face, 0);
    for (int g = 1; g < p; ++g) best = std::min(best, act(face, g));
    return best;
  };
  std::set<std::vector<std::vector<int>>> chains;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> tet{i, (i + 1) % n, n + j, n + (j + 1) % n};
      std::sort(tet.begin(), tet.end());
      std::vector<int> perm = tet;
      do {
        std::vector<std::vector<int>> chain;
        for (int r = 1; r <= 4; ++r) chain.push_back(canon(std::vector<int>(perm.begin(), perm.begin() + r)));
        std::sort(chain.begin(), chain.end());
        chains.insert(chain);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  std::map<std::vector<int>, int> vertex;
  for (const auto& c : chains)
    for (const auto& f : c) vertex.emplace(f, 0);
  int next = 0;
  for (auto& [face, id] : vertex) id = next++;
  std::vector<Simplex> facets;
  for (const auto& c : chains) {
    Simplex s;
    for (const auto& f : c) s.push_back(vertex.at(f));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error("internal: lens construction produced a degenerate simplex");
    facets.push_back(std::move(s));
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return SimplicialComplex("L(" + std::to_string(p) + "," + std::to_string(q) + ")", next, std::move(facets));
}

}  // namespace steenrod
