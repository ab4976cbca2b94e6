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

#include <string>
#include <utility>
#include <vector>

#include "steenrod/cochain.hpp"
#include "steenrod/cohomology.hpp"
#include "steenrod/duality.hpp"
#include "steenrod/error.hpp"
#include "steenrod/matrix.hpp"
#include "steenrod/operations.hpp"
#include "steenrod/simplicial_complex.hpp"

namespace steenrod {

namespace detail {
// integrate(e_a cup f_b) over Z/2 for the bases in degrees i and d-i.
inline IntMatrix mod2_duality_matrix(const Space& space, const FundamentalData& fd, int i) {
  const auto Z2 = CoefficientRing::mod(2);
  const auto& Bi = space.cohomology(i, Z2);
  const auto& Bj = space.cohomology(space.dim() - i, Z2);
  IntMatrix M(Bi.size(), Bj.size());
  for (std::size_t a = 0; a < Bi.size(); ++a)
    for (std::size_t b = 0; b < Bj.size(); ++b) M(a, b) = fd.integrate(cup(Bi.representatives[a], Bj.representatives[b]));
  return M;
}
inline bool invertible_mod2(const IntMatrix& M) { return M.rows() == M.cols() && rank_mod_prime(M, 2) == M.rows(); }
}  // namespace detail

/// Wu class v_i: the unique class with integrate(Sq^i x) = integrate(v_i cup x)
/// for every x in H^{d-i}(K; Z/2).
inline CohomologyClass wu_class(const Space& space, int i) {
  const auto Z2 = CoefficientRing::mod(2);
  const int d = space.dim();
  if (i < 0) throw DomainError("wu_class needs i >= 0");
  if (i > d) return zero_class_any(space, i, Z2);
  const auto fd = fundamental_data(space, Z2);
  const IntMatrix M = detail::mod2_duality_matrix(space, fd, i);
  if (!detail::invertible_mod2(M)) throw TopologyError("mod-2 Poincare duality fails in degree " + std::to_string(i));
  const auto& Bj = space.cohomology(d - i, Z2);
  std::vector<Integer> rhs(Bj.size());
  for (std::size_t b = 0; b < Bj.size(); ++b) rhs[b] = fd.integrate(sq(space, i, space.basis_class(d - i, Z2, b)));
  // coefficients c with sum_a c_a M(a, b) = rhs_b
  auto c = solve_mod_prime(M.transpose(), rhs, 2);
  if (!c) throw TopologyError("Wu system is inconsistent in degree " + std::to_string(i));
  return space.from_coordinates(i, Z2, *c);
}

/// Wu classes v_0..v_d and the Stiefel-Whitney classes w = Sq(v).
struct CharacteristicClasses {
  std::vector<CohomologyClass> v;
  std::vector<CohomologyClass> w;
  bool v1_equals_w1 = true;          ///< v_1 = w_1
  bool v2_equals_w2_plus_w1sq = true;  ///< v_2 = w_2 + w_1^2
};

inline CharacteristicClasses stiefel_whitney(const Space& space) {
  const auto Z2 = CoefficientRing::mod(2);
  const int d = space.dim();
  CharacteristicClasses out;
  for (int i = 0; i <= d; ++i) out.v.push_back(wu_class(space, i));
  for (int k = 0; k <= d; ++k) {
    Cochain acc = Cochain::zero(space.complex_ptr(), k, Z2);
    for (int i = 0; i <= k; ++i) acc += sq(space, k - i, out.v[i]).cocycle;
    out.w.push_back(space.class_of(acc));
  }
  if (d >= 1) out.v1_equals_w1 = out.v[1].coords == out.w[1].coords;
  if (d >= 2) {
    const auto w1sq = cup(space, out.w[1], out.w[1]);
    std::vector<Integer> rhs(out.w[2].coords.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = mod(out.w[2].coords[i] + w1sq.coords[i], 2);
    out.v2_equals_w2_plus_w1sq = out.v[2].coords == rhs;
  }
  return out;
}

/// Alternation criterion on a closed oriented (4d+1)-dimensional complex:
/// the torsion linking form is alternating iff v_{2d} lifts to an integral
/// class, i.e. iff its integral Bockstein vanishes. The verdict is
/// compared against the diagonal of the directly computed linking form.
struct WuReport {
  CharacteristicClasses classes;
  CohomologyClass middle_wu;
  CohomologyClass middle_obstruction;
  bool alternating_verdict = false;
  TorsionForm form;
  bool form_alternating = false;
  bool cross_check = false;
};

inline WuReport alternation_criterion(const Space& space, std::optional<std::uint64_t> seed = std::nullopt) {
  const int dim = space.dim();
  if (dim % 4 != 1) throw DomainError("alternation_criterion needs dimension 4d+1, got " + std::to_string(dim));
  fundamental_data(space, CoefficientRing::integers());  // throws unless closed and oriented
  const int d2 = (dim - 1) / 2;
  WuReport rep;
  rep.classes = stiefel_whitney(space);
  rep.middle_wu = rep.classes.v[d2];
  rep.middle_obstruction = integral_bockstein(space, rep.middle_wu);
  rep.alternating_verdict = rep.middle_obstruction.is_zero();
  rep.form = linking_form(space, d2, seed);
  rep.form_alternating = rep.form.is_alternating();
  rep.cross_check = rep.form_alternating == rep.alternating_verdict;
  return rep;
}

/// Per-class check of u cup beta(u) = Sq^{2d}(beta(u)) in the top degree of
/// a closed oriented (4d+1)-dimensional complex, over Z/2.
struct BockIdentityEntry {
  std::size_t index;
  Integer lhs;  ///< integrate(u cup beta u)
  Integer rhs;  ///< integrate(Sq^{2d} beta u)
  bool passed;
};

struct BockIdentityReport {
  bool passed = true;
  std::vector<BockIdentityEntry> entries;
};

inline BockIdentityReport verify_bock_identity(const Space& space) {
  const int dim = space.dim();
  if (dim % 4 != 1) throw DomainError("verify_bock_identity needs dimension 4d+1, got " + std::to_string(dim));
  const auto Z2 = CoefficientRing::mod(2);
  const auto fd = fundamental_data(space, Z2);
  const int d2 = (dim - 1) / 2;
  BockIdentityReport rep;
  const auto& B = space.cohomology(d2, Z2);
  for (std::size_t i = 0; i < B.size(); ++i) {
    const auto u = space.basis_class(d2, Z2, i);
    const auto bu = bockstein(space, u);
    const auto lhs = cup(space, u, bu);
    const auto rhs = sq(space, d2, bu);
    BockIdentityEntry e{i, fd.integrate(lhs), fd.integrate(rhs), lhs.coords == rhs.coords};
    rep.passed = rep.passed && e.passed;
    rep.entries.push_back(e);
  }
  return rep;
}

/// Poincare-dual bases: for each degree i a basis e of H^i and classes f in
/// H^{d-i} with integrate(e_a cup f_b) = [a == b], over Z/2.
struct DualBasis {
  std::vector<std::vector<CohomologyClass>> e;  ///< by degree
  std::vector<std::vector<CohomologyClass>> f;  ///< f[i][a] lives in degree d-i
};

inline DualBasis dual_basis(const Space& space) {
  const auto Z2 = CoefficientRing::mod(2);
  const int d = space.dim();
  const auto fd = fundamental_data(space, Z2);
  DualBasis db;
  db.e.resize(d + 1);
  db.f.resize(d + 1);
  for (int i = 0; i <= d; ++i) {
    const IntMatrix M = detail::mod2_duality_matrix(space, fd, i);
    if (!detail::invertible_mod2(M)) throw TopologyError("mod-2 Poincare duality fails in degree " + std::to_string(i));
    const std::size_t n = M.rows();
    for (std::size_t a = 0; a < n; ++a) {
      db.e[i].push_back(space.basis_class(i, Z2, a));
      // f_a = sum_c X(c) g_c with sum_c M(b, c) X(c) = [b == a]
      std::vector<Integer> unit(n);
      unit[a] = 1;
      db.f[i].push_back(space.from_coordinates(d - i, Z2, *solve_mod_prime(M, unit, 2)));
    }
  }
  return db;
}

/// The class of the diagonal in H^d(K x K; Z/2), sum of pr1*(e_a) cup pr2*(f_a).
struct DiagonalClass {
  CohomologyClass delta;
  std::size_t terms = 0;
  Integer diagonal_integral;  ///< integrate over K of the restriction to the diagonal
};

inline DiagonalClass diagonal_class(const Space& K, const Space& KxK, const DualBasis& db) {
  const auto Z2 = CoefficientRing::mod(2);
  const int d = K.dim();
  const auto pr1 = first_projection(K.complex(), K.complex());
  const auto pr2 = second_projection(K.complex(), K.complex());
  DiagonalClass out;
  Cochain acc = Cochain::zero(KxK.complex_ptr(), d, Z2);
  for (int i = 0; i <= d; ++i)
    for (std::size_t a = 0; a < db.e[i].size(); ++a) {
      acc += cup(pullback(db.e[i][a].cocycle, KxK.complex_ptr(), pr1),
                 pullback(db.f[i][a].cocycle, KxK.complex_ptr(), pr2));
      ++out.terms;
    }
  out.delta = KxK.class_of(acc);
  const auto fd = fundamental_data(K, Z2);
  out.diagonal_integral = fd.integrate(pullback(acc, K.complex_ptr(), diagonal_embedding(K.complex())));
  return out;
}

inline DiagonalClass diagonal_class(const Space& K, std::size_t bound = 1000000) {
  Space KxK(bounded_product(K.complex(), K.complex(), bound));
  return diagonal_class(K, KxK, dual_basis(K));
}

/// pr1_*(Sq[Delta]) computed through the Kunneth basis of K x K against
/// Sq(v) computed on K. Both are reported per degree as coordinates.
struct PushforwardReport {
  bool passed = true;
  std::vector<std::vector<Integer>> pushed;  ///< by degree j, coordinates in H^j(K; Z/2)
  std::vector<std::vector<Integer>> sq_v;
  Integer diagonal_integral;
  std::size_t product_simplices = 0;
};

inline PushforwardReport wu_pushforward_check(const Space& K, std::size_t bound = 1000000) {
  const auto Z2 = CoefficientRing::mod(2);
  const int d = K.dim();
  Space P(bounded_product(K.complex(), K.complex(), bound));
  const auto db = dual_basis(K);
  const auto diag = diagonal_class(K, P, db);
  const auto fd = fundamental_data(K, Z2);
  const auto pr1 = first_projection(K.complex(), K.complex());
  const auto pr2 = second_projection(K.complex(), K.complex());
  const auto classes = stiefel_whitney(K);
  PushforwardReport rep;
  rep.diagonal_integral = diag.diagonal_integral;
  rep.product_simplices = P.complex().total_size();
  for (int j = 0; j <= d; ++j) {
    const int t = d + j;
    const auto target = sq(P, j, diag.delta);
    // Kunneth basis of H^t(K x K): pr1*(e) cup pr2*(e') with deg e + deg e' = t
    struct Pair {
      int p;
      std::size_t a;
      std::size_t b;
    };
    std::vector<Pair> pairs;
    std::vector<std::vector<Integer>> columns;
    for (int p = 0; p <= d; ++p) {
      const int q = t - p;
      if (q < 0 || q > d) continue;
      for (std::size_t a = 0; a < db.e[p].size(); ++a)
        for (std::size_t b = 0; b < db.e[q].size(); ++b) {
          const auto x = cup(pullback(db.e[p][a].cocycle, P.complex_ptr(), pr1),
                             pullback(db.e[q][b].cocycle, P.complex_ptr(), pr2));
          columns.push_back(P.class_of(x).coords);
          pairs.push_back({p, a, b});
        }
    }
    IntMatrix A(target.coords.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (std::size_t r = 0; r < columns[c].size(); ++r) A(r, c) = columns[c][r];
    if (A.rows() != A.cols() || rank_mod_prime(A, 2) != A.rows())
      throw TopologyError("Kunneth classes do not form a basis in degree " + std::to_string(t));
    const auto coeff = *solve_mod_prime(A, target.coords, 2);
    // pr1_*(pr1*e cup pr2*e') = e * integrate(e'), nonzero only for deg e' = d
    Cochain pushed = Cochain::zero(K.complex_ptr(), j, Z2);
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      if (coeff[c] == 0 || pairs[c].p != j) continue;
      const Integer w = fd.integrate(db.e[d][pairs[c].b]);
      if (w != 0) pushed += db.e[j][pairs[c].a].cocycle;
    }
    rep.pushed.push_back(K.class_of(pushed).coords);
    rep.sq_v.push_back(classes.w[j].coords);
    rep.passed = rep.passed && rep.pushed.back() == rep.sq_v.back();
  }
  return rep;
}

}  // namespace steenrod
