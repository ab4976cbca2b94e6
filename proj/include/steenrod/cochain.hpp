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
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "steenrod/error.hpp"
#include "steenrod/matrix.hpp"
#include "steenrod/ring.hpp"
#include "steenrod/simplicial_complex.hpp"

namespace steenrod {

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

/// A k-cochain: one coefficient per k-simplex of the complex, in skeleton order.
struct Cochain {
  ComplexPtr complex;
  int degree = 0;
  CoefficientRing ring;
  std::vector<Integer> values;

  static Cochain zero(ComplexPtr K, int k, CoefficientRing R) {
    Cochain c{std::move(K), k, R, {}};
    c.values.assign(c.complex->size(k), Integer(0));
    return c;
  }
  /// The unit class: value 1 on every vertex.
  static Cochain one(ComplexPtr K, CoefficientRing R) {
    Cochain c = zero(std::move(K), 0, R);
    for (auto& v : c.values) v = 1;
    return c;
  }

  bool is_zero() const {
    for (const auto& v : values)
      if (v != 0) return false;
    return true;
  }

  Cochain& operator+=(const Cochain& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    ring.reduce_in_place(values);
    return *this;
  }
  Cochain& operator-=(const Cochain& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
    ring.reduce_in_place(values);
    return *this;
  }
  Cochain& operator*=(const Integer& s) {
    for (auto& v : values) v *= s;
    ring.reduce_in_place(values);
    return *this;
  }
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Integer& s, Cochain a) { return a *= s; }
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.complex == b.complex && a.degree == b.degree && a.ring == b.ring && a.values == b.values;
  }

  void check_compatible(const Cochain& o) const {
    if (complex != o.complex) throw DomainError("cochains live on different complexes");
    if (ring != o.ring) throw DomainError("cochains have different coefficient rings");
    if (degree != o.degree) throw DomainError("cochains have different degrees");
  }
};

/// Same values read in another ring: reduction mod m, or the canonical
/// lift 0..m-1 when the target is Z.
inline Cochain change_ring(const Cochain& c, CoefficientRing target) {
  Cochain out{c.complex, c.degree, target, c.values};
  target.reduce_in_place(out.values);
  return out;
}

/// Sparse matrix stored by rows.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<int, Integer>>> entries;  ///< per row, sorted by column

  IntMatrix to_dense() const {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (const auto& [j, v] : entries[i]) m(i, j) = v;
    return m;
  }
};

namespace detail {
inline SparseMatrix coboundary_sparse(const SimplicialComplex& K, int k, const CoefficientRing& R) {
  SparseMatrix m;
  m.rows = K.size(k + 1);
  m.cols = K.size(k);
  m.entries.resize(m.rows);
  for (std::size_t s = 0; s < m.rows; ++s) {
    std::map<int, Integer> row;
    for (int j = 0; j <= k + 1; ++j) row[K.face(k + 1, s, j)] += (j % 2 == 0) ? 1 : -1;
    for (auto& [c, v] : row) {
      Integer x = R.reduce(v);
      if (x != 0) m.entries[s].emplace_back(c, std::move(x));
    }
  }
  return m;
}
}  // namespace detail

/// Matrix of the coboundary C^k -> C^{k+1}: rows are (k+1)-simplices,
/// columns are k-simplices, entry (s, f) = (-1)^j when f is the j-th face of s.
inline SparseMatrix coboundary_matrix(const SimplicialComplex& K, int k, const CoefficientRing& R) {
  if (k < 0 || k >= K.dim())
    throw DomainError("coboundary degree " + std::to_string(k) + " out of range for a complex of dimension " +
                      std::to_string(K.dim()));
  return detail::coboundary_sparse(K, k, R);
}

inline Cochain coboundary(const Cochain& u) {
  const auto& K = *u.complex;
  const int k = u.degree;
  Cochain out = Cochain::zero(u.complex, k + 1, u.ring);
  for (std::size_t s = 0; s < out.values.size(); ++s) {
    Integer acc = 0;
    for (int j = 0; j <= k + 1; ++j) {
      const auto& x = u.values[K.face(k + 1, s, j)];
      if (j % 2 == 0) acc += x;
      else acc -= x;
    }
    out.values[s] = u.ring.reduce(acc);
  }
  return out;
}

namespace detail {

// One summand of the cup-i formula on an n-simplex: delete the vertex
// positions in `left` for the u factor and `right` for the v factor.
struct CupTerm {
  std::vector<int> left_keep;
  std::vector<int> right_keep;
  int sign;
};

inline std::vector<CupTerm> cup_terms(int p, int q, int i) {
  const int n = p + q - i;
  std::vector<CupTerm> terms;
  const int size = n - i;
  if (n < 0 || size < 0 || size > n + 1) return terms;
  std::vector<int> U(size);
  std::vector<char> choose(n + 1, 0);
  std::fill(choose.begin(), choose.begin() + size, 1);
  // enumerate subsets U of {0..n} with |U| = n - i in lexicographic order
  do {
    int t = 0;
    for (int x = 0; x <= n; ++x)
      if (choose[x]) U[t++] = x;
    std::vector<int> U0, U1;
    for (int pos = 1; pos <= size; ++pos) {
      const int x = U[pos - 1];
      ((pos + x) % 2 == 0 ? U0 : U1).push_back(x);
    }
    if (static_cast<int>(U0.size()) != n - p || static_cast<int>(U1.size()) != n - q) continue;
    int inversions = 0;
    for (int x : U0)
      for (int y : U1)
        if (x < y) ++inversions;
    CupTerm term;
    term.sign = ((inversions + i * p) % 2 == 0) ? 1 : -1;
    for (int x = 0; x <= n; ++x) {
      if (std::find(U0.begin(), U0.end(), x) == U0.end()) term.left_keep.push_back(x);
      if (std::find(U1.begin(), U1.end(), x) == U1.end()) term.right_keep.push_back(x);
    }
    terms.push_back(std::move(term));
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return terms;
}

}  // namespace detail

/// Steenrod's cup-i product. For i = 0 this is the Alexander-Whitney cup
/// product u(front face) * v(back face). Over Z it satisfies
///   d(u cup_i v) - (-1)^i [du cup_i v + (-1)^p u cup_i dv]
///     = (-1)^{i-1} u cup_{i-1} v - (-1)^{pq} v cup_{i-1} u.
inline Cochain cup_i(const Cochain& u, const Cochain& v, int i) {
  if (u.complex != v.complex) throw DomainError("cup product of cochains on different complexes");
  if (u.ring != v.ring) throw DomainError("cup product of cochains over different rings");
  if (i < 0) throw DomainError("cup-i needs i >= 0");
  const int p = u.degree, q = v.degree;
  const int n = p + q - i;
  if (n < 0) throw DomainError("cup-i result degree is negative");
  const auto& K = *u.complex;
  Cochain out = Cochain::zero(u.complex, n, u.ring);
  if (n > K.dim()) return out;
  const auto terms = detail::cup_terms(p, q, i);
  std::vector<int> left, right;
  const auto& simplices = K.skeleton(n);
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    const Simplex& sigma = simplices[s];
    Integer acc = 0;
    for (const auto& t : terms) {
      left.clear();
      for (int x : t.left_keep) left.push_back(sigma[x]);
      const Integer& a = u.values[K.index_of(left)];
      if (a == 0) continue;
      right.clear();
      for (int x : t.right_keep) right.push_back(sigma[x]);
      const Integer& b = v.values[K.index_of(right)];
      if (b == 0) continue;
      if (t.sign > 0) acc += a * b;
      else acc -= a * b;
    }
    out.values[s] = u.ring.reduce(acc);
  }
  return out;
}

inline Cochain cup(const Cochain& u, const Cochain& v) { return cup_i(u, v, 0); }

/// Checks the cup-i coboundary formula for integral cochains u, v:
///   d(u cup_i v) - (-1)^i [du cup_i v + (-1)^p u cup_i dv]
///     = (-1)^{i-1} u cup_{i-1} v - (-1)^{pq} v cup_{i-1} u.
/// Trivially true when the degree p+q-i+1 is out of range.
inline bool cup_i_relation_holds(const Cochain& u, const Cochain& v, int i) {
  const int p = u.degree, q = v.degree;
  const int d = u.complex->dim();
  if (i < 1 || p + q - i < 0 || p + q - i + 1 > d) return true;
  auto sign = [](int e) { return Integer(e % 2 ? -1 : 1); };
  Cochain lhs = coboundary(cup_i(u, v, i));
  Cochain mixed = Cochain::zero(u.complex, p + q - i + 1, u.ring);
  if (p + 1 <= d) mixed += cup_i(coboundary(u), v, i);
  if (q + 1 <= d) mixed += sign(p) * cup_i(u, coboundary(v), i);
  lhs -= sign(i) * mixed;
  Cochain rhs = sign(i - 1) * cup_i(u, v, i - 1);
  rhs -= sign(p * q) * cup_i(v, u, i - 1);
  return lhs == rhs;
}

/// Pullback along a simplicial map given on vertices. The map must be
/// weakly order preserving on every simplex; a simplex whose image is
/// degenerate gets value 0.
inline Cochain pullback(const Cochain& u, ComplexPtr source, const std::vector<int>& vertex_map) {
  const auto& S = *source;
  const auto& T = *u.complex;
  if (static_cast<int>(vertex_map.size()) != S.vertex_count()) throw DomainError("vertex map has the wrong size");
  Cochain out = Cochain::zero(source, u.degree, u.ring);
  const auto& simplices = S.skeleton(u.degree);
  Simplex image;
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    image.clear();
    bool degenerate = false;
    for (int v : simplices[s]) {
      const int w = vertex_map[v];
      if (!image.empty()) {
        if (w == image.back()) {
          degenerate = true;
          break;
        }
        if (w < image.back()) throw DomainError("pullback along a map that does not preserve the vertex order");
      }
      image.push_back(w);
    }
    if (degenerate) continue;
    const int idx = T.index_of(image);
    if (idx < 0) throw DomainError("vertex map is not simplicial");
    out.values[s] = u.values[idx];
  }
  return out;
}

/// Uniform random cochain with entries in [-spread, spread] over Z, or
/// uniform residues over Z/m.
inline Cochain random_cochain(ComplexPtr K, int k, CoefficientRing R, std::mt19937_64& rng, int spread = 3) {
  Cochain c = Cochain::zero(std::move(K), k, R);
  if (R.is_integers()) {
    std::uniform_int_distribution<int> dist(-spread, spread);
    for (auto& v : c.values) v = dist(rng);
  } else {
    std::uniform_int_distribution<std::int64_t> dist(0, R.modulus() - 1);
    for (auto& v : c.values) v = dist(rng);
  }
  return c;
}

}  // namespace steenrod
