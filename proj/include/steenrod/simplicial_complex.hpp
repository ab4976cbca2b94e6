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
#include <charconv>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "steenrod/error.hpp"

namespace steenrod {

/// Strictly increasing list of vertex indices.
using Simplex = std::vector<int>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (int v : s) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Finite abstract simplicial complex on vertices 0..vertex_count-1.
///
/// The skeleton is the downward closure of the facets, sorted
/// lexicographically in every dimension. The numeric vertex order is the
/// global order used by every cochain formula. Instances are immutable.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  SimplicialComplex(std::string name, int vertex_count, std::vector<Simplex> facets)
      : name_(std::move(name)), vertex_count_(vertex_count) {
    if (vertex_count < 0) throw DomainError("negative vertex count");
    std::vector<std::unordered_set<Simplex, SimplexHash>> faces;
    for (auto& f : facets) {
      std::sort(f.begin(), f.end());
      if (f.empty()) throw DomainError("empty facet");
      if (std::adjacent_find(f.begin(), f.end()) != f.end())
        throw DomainError("repeated vertex in facet");
      if (f.front() < 0 || f.back() >= vertex_count)
        throw DomainError("vertex index out of range");
      const int k = static_cast<int>(f.size()) - 1;
      if (static_cast<int>(faces.size()) <= k) faces.resize(k + 1);
      const unsigned n = static_cast<unsigned>(f.size());
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Simplex s;
        for (unsigned j = 0; j < n; ++j)
          if (mask & (1u << j)) s.push_back(f[j]);
        faces[s.size() - 1].insert(std::move(s));
      }
    }
    skeleton_.resize(faces.size());
    index_.resize(faces.size());
    for (std::size_t k = 0; k < faces.size(); ++k) {
      skeleton_[k].assign(faces[k].begin(), faces[k].end());
      std::sort(skeleton_[k].begin(), skeleton_[k].end());
      index_[k].reserve(skeleton_[k].size());
      for (std::size_t i = 0; i < skeleton_[k].size(); ++i) index_[k].emplace(skeleton_[k][i], static_cast<int>(i));
    }
    // boundary face tables: entry (i, j) is the index of the face of simplex i
    // with its j-th vertex deleted
    boundary_.resize(skeleton_.size());
    for (std::size_t k = 1; k < skeleton_.size(); ++k) {
      auto& table = boundary_[k];
      table.resize(skeleton_[k].size() * (k + 1));
      Simplex face(k);
      for (std::size_t i = 0; i < skeleton_[k].size(); ++i) {
        const Simplex& s = skeleton_[k][i];
        for (std::size_t j = 0; j <= k; ++j) {
          std::size_t t = 0;
          for (std::size_t q = 0; q <= k; ++q)
            if (q != j) face[t++] = s[q];
          table[i * (k + 1) + j] = index_[k - 1].at(face);
        }
      }
    }
    // a simplex is maximal when it is not a face of any simplex one dimension up
    for (int k = 0; k <= dim(); ++k) {
      std::vector<char> covered(skeleton_[k].size(), 0);
      if (k < dim())
        for (int f : boundary_[k + 1]) covered[f] = 1;
      for (std::size_t i = 0; i < covered.size(); ++i)
        if (!covered[i]) facets_.push_back(skeleton_[k][i]);
    }
    std::sort(facets_.begin(), facets_.end());
  }

  const std::string& name() const { return name_; }
  int vertex_count() const { return vertex_count_; }
  /// Top dimension; -1 for the empty complex.
  int dim() const { return static_cast<int>(skeleton_.size()) - 1; }
  const std::vector<Simplex>& facets() const { return facets_; }

  const std::vector<Simplex>& skeleton(int k) const {
    static const std::vector<Simplex> empty;
    if (k < 0 || k > dim()) return empty;
    return skeleton_[k];
  }
  std::size_t size(int k) const { return skeleton(k).size(); }
  std::size_t total_size() const {
    std::size_t n = 0;
    for (const auto& s : skeleton_) n += s.size();
    return n;
  }
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& s : skeleton_) f.push_back(s.size());
    return f;
  }
  std::int64_t euler_characteristic() const {
    std::int64_t chi = 0;
    for (int k = 0; k <= dim(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(size(k));
    return chi;
  }

  /// Index of a sorted simplex in skeleton(k), or -1.
  int index_of(std::span<const int> simplex) const {
    const int k = static_cast<int>(simplex.size()) - 1;
    if (k < 0 || k > dim()) return -1;
    auto it = index_[k].find(Simplex(simplex.begin(), simplex.end()));
    return it == index_[k].end() ? -1 : it->second;
  }

  /// Index in skeleton(k-1) of simplex i of skeleton(k) with vertex j removed.
  int face(int k, std::size_t i, int j) const { return boundary_[k][i * (k + 1) + j]; }

  bool is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return static_cast<int>(f.size()) == dim() + 1; });
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.skeleton_ == b.skeleton_;
  }

 private:
  std::string name_;
  int vertex_count_ = 0;
  std::vector<Simplex> facets_;
  std::vector<std::vector<Simplex>> skeleton_;
  std::vector<std::unordered_map<Simplex, int, SimplexHash>> index_;
  std::vector<std::vector<int>> boundary_;
};

/// Reads the facet-list format: '#' comments, an optional "name: <label>"
/// line before the first facet, then one facet per line as whitespace
/// separated nonnegative vertex ids. Ids are renumbered 0..n-1 preserving
/// numeric order.
inline SimplicialComplex parse_complex(std::string_view text, std::string default_name = "complex") {
  std::string name = std::move(default_name);
  std::vector<std::vector<long long>> raw;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    line.remove_prefix(first);
    if (line.front() == '#') continue;
    if (line.rfind("name:", 0) == 0) {
      if (!raw.empty()) throw ParseError("line " + std::to_string(line_no) + ": name must precede the facets");
      std::string_view label = line.substr(5);
      const auto b = label.find_first_not_of(" \t");
      const auto e = label.find_last_not_of(" \t");
      name = b == std::string_view::npos ? std::string() : std::string(label.substr(b, e - b + 1));
      continue;
    }
    std::vector<long long> facet;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      std::string_view token = line.substr(i, j - i);
      long long value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
        throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                         std::string(token) + "'");
      facet.push_back(value);
      i = j;
    }
    auto sorted = facet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("line " + std::to_string(line_no) + ": repeated vertex in facet");
    raw.push_back(std::move(sorted));
    if (end == text.size()) break;
  }
  if (raw.empty()) throw ParseError("empty document: no facets");
  std::vector<long long> ids;
  for (const auto& f : raw) ids.insert(ids.end(), f.begin(), f.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Simplex> facets;
  facets.reserve(raw.size());
  for (const auto& f : raw) {
    Simplex s;
    for (long long v : f) s.push_back(static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin()));
    facets.push_back(std::move(s));
  }
  return SimplicialComplex(std::move(name), static_cast<int>(ids.size()), std::move(facets));
}

/// Emits the facet-list format accepted by parse_complex.
inline std::string to_text(const SimplicialComplex& K) {
  std::ostringstream out;
  out << "name: " << K.name() << '\n';
  for (const auto& f : K.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << '\n';
  }
  return out.str();
}

struct PseudomanifoldReport {
  bool closed = false;
  bool pure = false;
  bool connected = false;
  /// Ridges not contained in exactly two facets, with their facet count.
  std::vector<std::pair<Simplex, int>> bad_ridges;
  std::vector<std::string> diagnostics;
};

/// Closed pseudomanifold test: pure, every ridge in exactly two facets,
/// connected facet adjacency. A single point counts as closed.
inline PseudomanifoldReport closed_pseudomanifold_check(const SimplicialComplex& K) {
  PseudomanifoldReport r;
  const int d = K.dim();
  if (d < 0) {
    r.diagnostics.push_back("empty complex");
    return r;
  }
  r.pure = K.is_pure();
  if (!r.pure) r.diagnostics.push_back("facets of different dimensions");
  if (d == 0) {
    r.connected = K.size(0) == 1;
    r.closed = r.pure && r.connected;
    if (!r.connected) r.diagnostics.push_back("disconnected 0-dimensional complex");
    return r;
  }
  const auto n_top = K.size(d);
  std::vector<std::vector<int>> ridge_facets(K.size(d - 1));
  for (std::size_t i = 0; i < n_top; ++i)
    for (int j = 0; j <= d; ++j) ridge_facets[K.face(d, i, j)].push_back(static_cast<int>(i));
  for (std::size_t r_i = 0; r_i < ridge_facets.size(); ++r_i) {
    const int count = static_cast<int>(ridge_facets[r_i].size());
    if (count != 2) {
      r.bad_ridges.emplace_back(K.skeleton(d - 1)[r_i], count);
      std::ostringstream msg;
      msg << "ridge {";
      const auto& s = K.skeleton(d - 1)[r_i];
      for (std::size_t q = 0; q < s.size(); ++q) msg << (q ? " " : "") << s[q];
      msg << "} lies in " << count << " facets";
      r.diagnostics.push_back(msg.str());
    }
  }
  std::vector<char> seen(n_top, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int j = 0; j <= d; ++j)
      for (int g : ridge_facets[K.face(d, f, j)])
        if (!seen[g]) {
          seen[g] = 1;
          ++reached;
          stack.push_back(g);
        }
  }
  r.connected = reached == n_top;
  if (!r.connected) r.diagnostics.push_back("facet adjacency graph is disconnected");
  r.closed = r.pure && r.connected && r.bad_ridges.empty();
  return r;
}

/// Signs on top simplices; when orientable the signed facet sum is a cycle.
struct Orientation {
  bool orientable = false;
  std::vector<int> signs;
};

inline Orientation orient(const SimplicialComplex& K) {
  const auto report = closed_pseudomanifold_check(K);
  if (!report.closed) throw TopologyError("orient: " + K.name() + " is not a closed pseudomanifold");
  const int d = K.dim();
  Orientation o;
  if (d == 0) {
    o.orientable = true;
    o.signs = {1};
    return o;
  }
  const auto n_top = K.size(d);
  std::vector<std::vector<std::pair<int, int>>> ridge_facets(K.size(d - 1));
  for (std::size_t i = 0; i < n_top; ++i)
    for (int j = 0; j <= d; ++j) ridge_facets[K.face(d, i, j)].emplace_back(static_cast<int>(i), j);
  std::vector<int> sign(n_top, 0);
  sign[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int j = 0; j <= d; ++j) {
      for (auto [g, k] : ridge_facets[K.face(d, f, j)]) {
        if (g == f) continue;
        // the shared ridge must cancel in the boundary of the signed sum
        const int want = -sign[f] * (((j + k) % 2 == 0) ? 1 : -1);
        if (sign[g] == 0) {
          sign[g] = want;
          stack.push_back(g);
        } else if (sign[g] != want) {
          return Orientation{};
        }
      }
    }
  }
  o.orientable = true;
  o.signs = std::move(sign);
  return o;
}

/// Staircase triangulation of |K| x |L|. The vertex (a, b) gets index
/// a * |V(L)| + b, so the order is lexicographic with K first.
inline SimplicialComplex product_complex(const SimplicialComplex& K, const SimplicialComplex& L) {
  if (K.dim() < 0 || L.dim() < 0) throw DomainError("product of an empty complex");
  const int nL = L.vertex_count();
  std::vector<Simplex> facets;
  for (const auto& s : K.facets()) {
    for (const auto& t : L.facets()) {
      const int p = static_cast<int>(s.size()) - 1;
      const int q = static_cast<int>(t.size()) - 1;
      // a lattice path is a choice of which of the p+q steps advance in K
      std::vector<char> steps(p + q, 0);
      std::fill(steps.begin(), steps.begin() + p, 1);
      std::sort(steps.begin(), steps.end());
      do {
        Simplex f;
        int a = 0, b = 0;
        f.push_back(s[a] * nL + t[b]);
        for (char step : steps) {
          if (step) ++a;
          else ++b;
          f.push_back(s[a] * nL + t[b]);
        }
        facets.push_back(std::move(f));
      } while (std::next_permutation(steps.begin(), steps.end()));
    }
  }
  return SimplicialComplex(K.name() + "x" + L.name(), K.vertex_count() * nL, std::move(facets));
}

/// Vertex maps of the projections K x L -> K and K x L -> L.
inline std::vector<int> first_projection(const SimplicialComplex& K, const SimplicialComplex& L) {
  std::vector<int> map(static_cast<std::size_t>(K.vertex_count()) * L.vertex_count());
  for (std::size_t v = 0; v < map.size(); ++v) map[v] = static_cast<int>(v / L.vertex_count());
  return map;
}
inline std::vector<int> second_projection(const SimplicialComplex& K, const SimplicialComplex& L) {
  std::vector<int> map(static_cast<std::size_t>(K.vertex_count()) * L.vertex_count());
  for (std::size_t v = 0; v < map.size(); ++v) map[v] = static_cast<int>(v % L.vertex_count());
  return map;
}
/// Vertex map of the diagonal K -> K x K.
inline std::vector<int> diagonal_embedding(const SimplicialComplex& K) {
  std::vector<int> map(K.vertex_count());
  for (int v = 0; v < K.vertex_count(); ++v) map[v] = v * K.vertex_count() + v;
  return map;
}

}  // namespace steenrod
