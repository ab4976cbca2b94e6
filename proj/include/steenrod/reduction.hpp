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
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "steenrod/cochain.hpp"
#include "steenrod/matrix.hpp"
#include "steenrod/ring.hpp"

namespace steenrod {

/// Chain homotopy equivalence between the simplicial cochain complex and a
/// much smaller complex, built by repeatedly cancelling a k-cell a against a
/// (k+1)-cell b whose coboundary coefficient is a unit.
///
/// With the coboundary written in block form [[e, v], [w, M]] (row b first,
/// column a first), one cancellation replaces M by M - w e^{-1} v. The
/// projection f and inclusion g satisfy f g = id and g f ~ id; both are
/// recorded so cocycles can be moved across and coboundary equations solved.
class CochainReduction {
 public:
  CochainReduction(ComplexPtr K, CoefficientRing R) : complex_(std::move(K)), ring_(R) {
    const auto& Kc = *complex_;
    const int d = Kc.dim();
    alive_.resize(d + 1);
    for (int k = 0; k <= d; ++k) alive_[k].assign(Kc.size(k), 1);
    rows_.resize(std::max(d, 0));
    cols_.resize(std::max(d, 0));
    for (int k = 0; k < d; ++k) {
      const auto m = detail::coboundary_sparse(Kc, k, R);
      rows_[k].resize(m.rows);
      cols_[k].resize(m.cols);
      for (std::size_t s = 0; s < m.rows; ++s)
        for (const auto& [c, v] : m.entries[s]) {
          rows_[k][s].emplace(c, v);
          cols_[k][c].emplace(static_cast<int>(s), v);
        }
    }
    reduce();
    // freeze the small complex
    cells_.resize(d + 1);
    for (int k = 0; k <= d; ++k)
      for (std::size_t i = 0; i < alive_[k].size(); ++i)
        if (alive_[k][i]) cells_[k].push_back(static_cast<int>(i));
    matrices_.resize(d + 1);
    for (int k = 0; k <= d; ++k) {
      const std::size_t nrows = k < d ? cells_[k + 1].size() : 0;
      IntMatrix D(nrows, cells_[k].size());
      if (k < d) {
        std::unordered_map<int, std::size_t> col_pos;
        for (std::size_t j = 0; j < cells_[k].size(); ++j) col_pos[cells_[k][j]] = j;
        for (std::size_t i = 0; i < nrows; ++i)
          for (const auto& [c, v] : rows_[k][cells_[k + 1][i]]) D(i, col_pos.at(c)) = v;
      }
      matrices_[k] = std::move(D);
    }
    rows_.clear();
    cols_.clear();
  }

  const ComplexPtr& complex() const { return complex_; }
  const CoefficientRing& ring() const { return ring_; }
  int dim() const { return complex_->dim(); }

  /// Surviving simplices (indices into the skeleton) in degree k.
  const std::vector<int>& cells(int k) const { return cells_[k]; }
  /// Reduced coboundary from degree k to k+1 over the surviving cells.
  /// Entries are exact over Z and residues over Z/m.
  const IntMatrix& matrix(int k) const { return matrices_[k]; }
  std::size_t steps() const { return steps_.size(); }

  /// Projection f of a k-cochain onto the reduced complex.
  std::vector<Integer> project(int k, std::vector<Integer> x) const {
    for (const auto& st : steps_) apply_project(st, k, x);
    std::vector<Integer> out;
    out.reserve(cells_[k].size());
    for (int c : cells_[k]) out.push_back(std::move(x[c]));
    return out;
  }

  /// Inclusion g of a reduced k-cochain into the full cochain group.
  std::vector<Integer> include(int k, const std::vector<Integer>& y) const {
    std::vector<Integer> x(complex_->size(k));
    for (std::size_t i = 0; i < y.size(); ++i) x[cells_[k][i]] = ring_.reduce(y[i]);
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) apply_include(*it, k, x);
    return x;
  }

  /// Finds c with coboundary(c) = y for a (k+1)-cochain y, if one exists.
  std::optional<std::vector<Integer>> solve(int k, std::vector<Integer> y) const {
    if (k < 0) {
      for (const auto& v : y)
        if (ring_.reduce(v) != 0) return std::nullopt;
      return std::vector<Integer>{};
    }
    std::vector<Integer> t(steps_.size());
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      const auto& st = steps_[i];
      if (st.degree == k) t[i] = ring_.reduce(st.eps_inv * y[st.b]);
      apply_project(st, k + 1, y);
    }
    std::vector<Integer> reduced;
    for (int c : cells_[k + 1]) reduced.push_back(ring_.reduce(y[c]));
    auto small = solve_reduced(k, reduced);
    if (!small) return std::nullopt;
    std::vector<Integer> c(complex_->size(k));
    for (std::size_t i = 0; i < small->size(); ++i) c[cells_[k][i]] = (*small)[i];
    for (std::size_t i = steps_.size(); i-- > 0;) {
      const auto& st = steps_[i];
      apply_include(st, k, c);
      if (st.degree == k) c[st.a] = ring_.reduce(c[st.a] + t[i]);
    }
    return c;
  }

 private:
  struct Step {
    int degree;  // a is a degree-k cell, b a degree-(k+1) cell
    int a;
    int b;
    Integer eps_inv;
    std::vector<std::pair<int, Integer>> v;  // row b without a
    std::vector<std::pair<int, Integer>> w;  // column a without b
  };

  using SparseLine = std::unordered_map<int, Integer>;

  void reduce() {
    const int d = complex_->dim();
    bool changed = true;
    while (changed) {
      changed = false;
      for (int k = 0; k < d; ++k) {
        std::vector<std::pair<std::size_t, int>> order;
        for (std::size_t a = 0; a < alive_[k].size(); ++a)
          if (alive_[k][a]) order.emplace_back(cols_[k][a].size(), static_cast<int>(a));
        std::sort(order.begin(), order.end());
        for (const auto& [size, a] : order) {
          if (!alive_[k][a]) continue;
          int best = -1;
          std::size_t best_size = 0;
          for (const auto& [b, val] : cols_[k][a]) {
            if (!ring_.is_unit(val)) continue;
            const std::size_t s = rows_[k][b].size();
            if (best < 0 || s < best_size || (s == best_size && b < best)) {
              best = b;
              best_size = s;
            }
          }
          if (best < 0) continue;
          eliminate(k, a, best);
          changed = true;
        }
      }
    }
  }

  void eliminate(int k, int a, int b) {
    Step st{k, a, b, ring_.inverse(rows_[k][b].at(a)), {}, {}};
    for (const auto& [c, val] : rows_[k][b])
      if (c != a) st.v.emplace_back(c, val);
    for (const auto& [r, val] : cols_[k][a])
      if (r != b) st.w.emplace_back(r, val);
    std::sort(st.v.begin(), st.v.end());
    std::sort(st.w.begin(), st.w.end());
    for (const auto& [c, val] : rows_[k][b]) cols_[k][c].erase(b);
    for (const auto& [r, val] : cols_[k][a]) rows_[k][r].erase(a);
    rows_[k][b].clear();
    cols_[k][a].clear();
    for (const auto& [r, wr] : st.w) {
      const Integer factor = ring_.reduce(wr * st.eps_inv);
      for (const auto& [c, vc] : st.v) {
        auto& row = rows_[k][r];
        auto it = row.find(c);
        Integer value = ring_.reduce((it == row.end() ? Integer(0) : it->second) - factor * vc);
        if (value == 0) {
          if (it != row.end()) {
            row.erase(it);
            cols_[k][c].erase(r);
          }
        } else {
          cols_[k][c][r] = value;
          if (it == row.end()) row.emplace(c, std::move(value));
          else it->second = std::move(value);
        }
      }
    }
    if (k >= 1) {
      for (const auto& [c, val] : rows_[k - 1][a]) cols_[k - 1][c].erase(a);
      rows_[k - 1][a].clear();
    }
    if (k + 1 < static_cast<int>(rows_.size())) {
      for (const auto& [r, val] : cols_[k + 1][b]) rows_[k + 1][r].erase(b);
      cols_[k + 1][b].clear();
    }
    alive_[k][a] = 0;
    alive_[k + 1][b] = 0;
    steps_.push_back(std::move(st));
  }

  void apply_project(const Step& st, int k, std::vector<Integer>& x) const {
    if (k == st.degree) {
      x[st.a] = 0;
    } else if (k == st.degree + 1) {
      Integer mu = ring_.reduce(x[st.b] * st.eps_inv);
      x[st.b] = 0;
      if (mu == 0) return;
      for (const auto& [r, wr] : st.w) x[r] = ring_.reduce(x[r] - wr * mu);
    }
  }

  void apply_include(const Step& st, int k, std::vector<Integer>& x) const {
    if (k == st.degree) {
      Integer acc = 0;
      for (const auto& [c, vc] : st.v)
        if (x[c] != 0) acc += vc * x[c];
      x[st.a] = ring_.reduce(-st.eps_inv * acc);
    } else if (k == st.degree + 1) {
      x[st.b] = 0;
    }
  }

  // Solves D_k c = y in the reduced complex.
  std::optional<std::vector<Integer>> solve_reduced(int k, const std::vector<Integer>& y) const {
    const IntMatrix& D = matrices_[k];
    const auto f = smith_normal_form(D);
    const auto sy = f.S * y;
    std::vector<Integer> z(D.cols());
    const Integer m = ring_.modulus();
    for (std::size_t j = 0; j < sy.size(); ++j) {
      const Integer target = ring_.reduce(sy[j]);
      if (j >= f.rank()) {
        if (target != 0) return std::nullopt;
        continue;
      }
      const Integer& dj = f.diagonal[j];
      if (ring_.is_integers()) {
        if (target % dj != 0) return std::nullopt;
        z[j] = target / dj;
      } else {
        const Integer g = gcd(dj, m);
        if (target % g != 0) return std::nullopt;
        const Integer mg = m / g;
        z[j] = mg == 1 ? Integer(0) : mod((target / g) * *mod_inverse(dj / g, mg), mg);
      }
    }
    auto c = f.T * z;
    ring_.reduce_in_place(c);
    return c;
  }

  ComplexPtr complex_;
  CoefficientRing ring_;
  std::vector<std::vector<char>> alive_;
  std::vector<std::vector<SparseLine>> rows_, cols_;
  std::vector<Step> steps_;
  std::vector<std::vector<int>> cells_;
  std::vector<IntMatrix> matrices_;
};

}  // namespace steenrod
