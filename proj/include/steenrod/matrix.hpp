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
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "steenrod/error.hpp"
#include "steenrod/ring.hpp"

namespace steenrod {

/// Dense row-major matrix of arbitrary precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DomainError("ragged matrix literal");
      for (long long v : r) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<Integer> column(std::size_t j) const {
    std::vector<Integer> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row a += q * row b
  void add_row(std::size_t a, std::size_t b, const Integer& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(b, j) != 0) (*this)(a, j) += q * (*this)(b, j);
  }
  /// col a += q * col b
  void add_col(std::size_t a, std::size_t b, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows_; ++i)
      if ((*this)(i, b) != 0) (*this)(i, a) += q * (*this)(i, b);
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
  }
  void negate_col(std::size_t a) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch in product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& x) {
    if (a.cols_ != x.size()) throw DomainError("matrix/vector dimension mismatch");
    std::vector<Integer> y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
    return y;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Result of smith_normal_form: S * A * T = D with S, T unimodular and
/// D = diag(d_1, ..., d_r, 0, ...), d_i > 0, d_i | d_{i+1}.
struct SmithForm {
  IntMatrix D, S, T, S_inv, T_inv;
  std::vector<Integer> diagonal;  ///< the nonzero invariants d_1..d_r
  std::size_t rank() const { return diagonal.size(); }
};

namespace detail {

// Row and column operations on A mirrored into the transform matrices.
struct SmithState {
  IntMatrix A, S, T, S_inv, T_inv;

  void swap_rows(std::size_t a, std::size_t b) {
    A.swap_rows(a, b);
    S.swap_rows(a, b);
    S_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    A.swap_cols(a, b);
    T.swap_cols(a, b);
    T_inv.swap_rows(a, b);
  }
  void add_row(std::size_t a, std::size_t b, const Integer& q) {
    A.add_row(a, b, q);
    S.add_row(a, b, q);
    S_inv.add_col(b, a, -q);
  }
  void add_col(std::size_t a, std::size_t b, const Integer& q) {
    A.add_col(a, b, q);
    T.add_col(a, b, q);
    T_inv.add_row(b, a, -q);
  }
  void negate_row(std::size_t a) {
    A.negate_row(a);
    S.negate_row(a);
    S_inv.negate_col(a);
  }
};

}  // namespace detail

namespace detail {
// Quotient rounded to the nearest integer, so |a - q b| <= |b| / 2.
inline Integer nearest_quotient(const Integer& a, const Integer& b) {
  Integer q = a / b;
  const Integer r = a - q * b;
  if (2 * abs(r) > abs(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
  return q;
}
}  // namespace detail

/// Smith normal form with both transforms and their inverses.
inline SmithForm smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  detail::SmithState st{A, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(m),
                        IntMatrix::identity(n)};
  auto& M = st.A;
  std::size_t t = 0;
  while (t < m && t < n) {
    bool found = false;
    for (;;) {
      // pivot: smallest nonzero absolute value in the trailing block,
      // re-chosen every round so that entries stay small
      std::size_t pi = m, pj = n;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (M(i, j) != 0 && (pi == m || abs(M(i, j)) < best)) {
            best = abs(M(i, j));
            pi = i;
            pj = j;
          }
      if (pi == m) break;
      found = true;
      st.swap_rows(t, pi);
      st.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (M(i, t) == 0) continue;
        st.add_row(i, t, -detail::nearest_quotient(M(i, t), M(t, t)));
        clean = clean && M(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (M(t, j) == 0) continue;
        st.add_col(j, t, -detail::nearest_quotient(M(t, j), M(t, t)));
        clean = clean && M(t, j) == 0;
      }
      if (!clean) continue;
      // enforce divisibility of the trailing block by the pivot
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (M(i, j) % M(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      st.add_row(t, bad, 1);
    }
    if (!found) break;
    if (M(t, t) < 0) st.negate_row(t);
    ++t;
  }
  SmithForm out;
  for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(M(i, i));
  out.D = std::move(st.A);
  out.S = std::move(st.S);
  out.T = std::move(st.T);
  out.S_inv = std::move(st.S_inv);
  out.T_inv = std::move(st.T_inv);
  return out;
}

/// Re-checks every postcondition of a Smith form of A by multiplication.
inline bool verify_smith(const IntMatrix& A, const SmithForm& f) {
  if (f.S * A * f.T != f.D) return false;
  if (f.S * f.S_inv != IntMatrix::identity(A.rows())) return false;
  if (f.T * f.T_inv != IntMatrix::identity(A.cols())) return false;
  for (std::size_t i = 0; i < f.D.rows(); ++i)
    for (std::size_t j = 0; j < f.D.cols(); ++j) {
      if (i == j && i < f.diagonal.size()) {
        if (f.D(i, j) != f.diagonal[i] || f.diagonal[i] <= 0) return false;
        if (i + 1 < f.diagonal.size() && f.diagonal[i + 1] % f.diagonal[i] != 0) return false;
      } else if (f.D(i, j) != 0) {
        return false;
      }
    }
  return true;
}

/// Solves A x = b over the field Z/p (p prime). Returns one solution with
/// free variables set to zero, or nothing when the system is inconsistent.
inline std::optional<std::vector<Integer>> solve_mod_prime(const IntMatrix& A, const std::vector<Integer>& b,
                                                           const Integer& p) {
  if (b.size() != A.rows()) throw DomainError("right-hand side has the wrong length");
  const std::size_t m = A.rows(), n = A.cols();
  IntMatrix M(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) M(i, j) = mod(A(i, j), p);
    M(i, n) = mod(b[i], p);
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && M(piv, col) == 0) ++piv;
    if (piv == m) continue;
    M.swap_rows(row, piv);
    const Integer inv = *mod_inverse(M(row, col), p);
    for (std::size_t j = 0; j <= n; ++j) M(row, j) = mod(M(row, j) * inv, p);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || M(i, col) == 0) continue;
      const Integer f = M(i, col);
      for (std::size_t j = 0; j <= n; ++j) M(i, j) = mod(M(i, j) - f * M(row, j), p);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (M(i, n) != 0) return std::nullopt;
  std::vector<Integer> x(n);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = M(i, n);
  return x;
}

/// Rank over Z/p (p prime), read off the Smith invariants.
inline std::size_t rank_mod_prime(const IntMatrix& A, const Integer& p) {
  const auto f = smith_normal_form(A);
  std::size_t r = 0;
  for (const auto& d : f.diagonal)
    if (d % p != 0) ++r;
  return r;
}

}  // namespace steenrod
