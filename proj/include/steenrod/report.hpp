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

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "steenrod/arithmetic_linking.hpp"
#include "steenrod/cochain.hpp"
#include "steenrod/cohomology.hpp"
#include "steenrod/duality.hpp"
#include "steenrod/operations.hpp"
#include "steenrod/simplicial_complex.hpp"
#include "steenrod/wu.hpp"

namespace steenrod::report {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline Json integer(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline Json integers(const std::vector<Integer>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(integer(x));
  return a;
}

inline Json fraction(const Fraction& f) { return Json{{"num", integer(f.num())}, {"den", integer(f.den())}}; }

inline Json complex_summary(const SimplicialComplex& K) {
  std::vector<Integer> f;
  for (auto n : K.f_vector()) f.emplace_back(n);
  const auto pm = closed_pseudomanifold_check(K);
  Json j{{"name", K.name()},
         {"vertex_count", K.vertex_count()},
         {"dim", K.dim()},
         {"f_vector", integers(f)},
         {"euler_characteristic", K.euler_characteristic()},
         {"closed_pseudomanifold", pm.closed}};
  if (pm.closed) j["orientable"] = orient(K).orientable;
  if (!pm.diagnostics.empty()) j["diagnostics"] = pm.diagnostics;
  return j;
}

inline Json group(const CohomologyBasis& B) {
  return Json{{"degree", B.degree}, {"free_rank", B.free_rank}, {"torsion", integers(B.torsion_invariants)}};
}

inline Json homology(const Space& space, const CoefficientRing& R, std::optional<int> degree = std::nullopt) {
  Json groups = Json::array();
  for (int k = 0; k <= space.dim(); ++k)
    if (!degree || *degree == k) groups.push_back(group(space.cohomology(k, R)));
  return Json{{"complex", space.complex().name()}, {"ring", R.name()}, {"groups", groups}};
}

/// Classes listed per degree as coordinate vectors in the canonical basis.
inline Json graded(const std::vector<CohomologyClass>& classes) {
  Json a = Json::array();
  for (const auto& c : classes) a.push_back(Json{{"degree", c.degree}, {"coords", integers(c.coords)}});
  return a;
}

inline Json steenrod(const Space& space, std::optional<int> degree = std::nullopt) {
  const auto Z2 = CoefficientRing::mod(2);
  Json classes = Json::array();
  bool axioms = true;
  for (int r = 0; r <= space.dim(); ++r) {
    if (degree && *degree != r) continue;
    const auto& B = space.cohomology(r, Z2);
    for (std::size_t i = 0; i < B.size(); ++i) {
      const auto x = space.basis_class(r, Z2, i);
      Json squares = Json::array();
      for (int k = 0; k <= r && r + k <= space.dim(); ++k) squares.push_back(integers(sq(space, k, x).coords));
      Json entry{{"degree", r}, {"index", i}, {"sq", squares}};
      if (r + 1 <= space.dim()) {
        const auto b = bockstein(space, x);
        const bool same = b.coords == sq(space, 1, x).coords;
        entry["bockstein"] = integers(b.coords);
        entry["sq1_equals_bockstein"] = same;
        axioms = axioms && same;
      }
      if (2 * r <= space.dim()) {
        const bool top = sq(space, r, x).coords == cup(space, x, x).coords;
        entry["sq_top_equals_square"] = top;
        axioms = axioms && top;
      }
      const bool zeroth = sq(space, 0, x).coords == x.coords;
      entry["sq0_identity"] = zeroth;
      axioms = axioms && zeroth;
      classes.push_back(entry);
    }
  }
  return Json{{"complex", space.complex().name()}, {"ring", "Z/2"}, {"classes", classes}, {"axioms_hold", axioms}};
}

inline Json wu(const Space& space) {
  const auto cc = stiefel_whitney(space);
  Json j{{"complex", space.complex().name()},
         {"v", graded(cc.v)},
         {"w", graded(cc.w)},
         {"v1_equals_w1", cc.v1_equals_w1},
         {"v2_equals_w2_plus_w1_squared", cc.v2_equals_w2_plus_w1sq}};
  const int d = space.dim();
  if (d % 4 == 1 && orient(space.complex()).orientable) {
    const auto rep = alternation_criterion(space);
    j["middle_obstruction"] = Json{{"degree", rep.middle_obstruction.degree},
                                   {"coords", integers(rep.middle_obstruction.coords)}};
    j["verdict"] = rep.alternating_verdict ? "alternating" : "non-alternating";
    j["cross_check"] = rep.cross_check;
  }
  return j;
}

inline Json torsion_form(const TorsionForm& form) {
  Json gram = Json::array();
  for (const auto& row : form.gram) {
    Json r = Json::array();
    for (const auto& f : row) r.push_back(fraction(f));
    gram.push_back(r);
  }
  return Json{{"degree", form.degree},
              {"orders", integers(form.orders)},
              {"gram", gram},
              {"alternating", form.is_alternating()},
              {"skew_symmetric", form.is_skew_symmetric()},
              {"symmetric", form.is_symmetric()},
              {"nondegenerate", form.is_nondegenerate()}};
}

inline Json linkform(const Space& space, std::optional<std::uint64_t> seed) {
  const int k = (space.dim() - 1) / 2;
  Json j{{"complex", space.complex().name()}};
  const auto form = linking_form(space, k, seed);
  j["form"] = torsion_form(form);
  return j;
}

inline Json qr(std::int64_t bound) {
  const auto rep = reciprocity_scan(bound);
  Json v = Json::array();
  for (const auto& [p, q] : rep.violations) v.push_back(Json::array({p, q}));
  return Json{{"bound", bound},
              {"primes", rep.primes},
              {"ordered_pairs", rep.pairs},
              {"oracle_disagreements", rep.oracle_disagreements},
              {"violations", v}};
}

/// Full invariant suite for one complex. Every check is reported as
/// "pass", "fail" or "skipped" with a short reason; random inputs are drawn
/// from a generator seeded with `seed`.
class Verifier {
 public:
  Verifier(const Space& space, std::uint64_t seed, int random_pairs = 20)
      : space_(space), seed_(seed), random_pairs_(random_pairs) {}

  Json run() {
    const auto& K = space_.complex();
    Json j{{"complex", complex_summary(K)}, {"seed", seed_}};
    const auto pm = closed_pseudomanifold_check(K);
    if (!pm.closed) {
      std::string msg = K.name() + " is not a closed pseudomanifold";
      if (!pm.diagnostics.empty()) msg += ": " + pm.diagnostics.front();
      throw TopologyError(msg);
    }
    orientable_ = orient(K).orientable;
    Json hom = Json::array();
    for (auto R : {CoefficientRing::integers(), CoefficientRing::mod(2)}) hom.push_back(homology(space_, R));
    j["homology"] = hom;

    check_coboundary();
    check_universal_coefficients();
    check_euler();
    check_cup_relations();
    check_steenrod_axioms();
    check_bockstein();
    check_duality();
    check_wu();
    check_linking(j);
    check_middle_dimension(j);

    j["checks"] = checks_;
    j["passed"] = passed_;
    return j;
  }

  bool passed() const { return passed_; }

 private:
  void record(const std::string& name, bool ok, const std::string& detail = "") {
    Json c{{"name", name}, {"status", ok ? "pass" : "fail"}};
    if (!detail.empty()) c["detail"] = detail;
    checks_.push_back(c);
    passed_ = passed_ && ok;
  }
  void skip(const std::string& name, const std::string& reason) {
    checks_.push_back(Json{{"name", name}, {"status", "skipped"}, {"detail", reason}});
  }

  void check_coboundary() {
    bool ok = true;
    std::mt19937_64 rng(seed_);
    const auto& K = space_.complex();
    for (auto R : {CoefficientRing::integers(), CoefficientRing::mod(2), CoefficientRing::mod(4)})
      for (int k = 0; k + 2 <= K.dim(); ++k) {
        const auto u = random_cochain(space_.complex_ptr(), k, R, rng);
        ok = ok && coboundary(coboundary(u)).is_zero();
      }
    record("coboundary_squares_to_zero", ok);
  }

  void check_universal_coefficients() {
    bool ok = true;
    const auto Z = CoefficientRing::integers();
    for (std::int64_t p : {2, 3}) {
      const auto Fp = CoefficientRing::mod(p);
      for (int k = 0; k <= space_.dim(); ++k) {
        const auto& Hz = space_.cohomology(k, Z);
        std::size_t expected = Hz.free_rank;
        for (const auto& t : Hz.torsion_invariants)
          if (t % p == 0) ++expected;
        if (k + 1 <= space_.dim())
          for (const auto& t : space_.cohomology(k + 1, Z).torsion_invariants)
            if (t % p == 0) ++expected;
        ok = ok && static_cast<std::size_t>(space_.cohomology(k, Fp).free_rank) == expected &&
             space_.cohomology(k, Fp).torsion_invariants.empty();
      }
    }
    record("universal_coefficients", ok);
  }

  void check_euler() {
    std::int64_t chi = 0;
    for (int k = 0; k <= space_.dim(); ++k)
      chi += (k % 2 ? -1 : 1) * space_.cohomology(k, CoefficientRing::integers()).free_rank;
    record("euler_characteristic", chi == space_.complex().euler_characteristic());
  }

  void check_cup_relations() {
    const auto Z = CoefficientRing::integers();
    const auto& K = space_.complex_ptr();
    const int d = space_.dim();
    std::mt19937_64 rng(seed_ + 1);
    bool leibniz = true, homotopy = true;
    for (int t = 0; t < random_pairs_; ++t) {
      for (int p = 0; p <= d; ++p)
        for (int q = 0; p + q <= d; ++q) {
          const auto u = random_cochain(K, p, Z, rng);
          const auto v = random_cochain(K, q, Z, rng);
          if (p + q + 1 <= d) {
            auto lhs = coboundary(cup(u, v));
            auto rhs = cup(coboundary(u), v);
            rhs += (p % 2 ? Integer(-1) : Integer(1)) * cup(u, coboundary(v));
            leibniz = leibniz && lhs == rhs;
          }
          for (int i = 1; i <= 3; ++i) homotopy = homotopy && cup_i_relation_holds(u, v, i);
        }
    }
    record("cup_leibniz", leibniz);
    record("cup_i_homotopy_formula", homotopy, std::to_string(random_pairs_) + " random pairs per degree pair, i = 1, 2, 3");
  }

 private:
  void check_steenrod_axioms() {
    const auto Z2 = CoefficientRing::mod(2);
    const int d = space_.dim();
    bool ok = true;
    std::size_t n = 0;
    for (int r = 0; r <= d; ++r) {
      const auto& B = space_.cohomology(r, Z2);
      for (std::size_t i = 0; i < B.size(); ++i, ++n) {
        const auto x = space_.basis_class(r, Z2, i);
        ok = ok && sq(space_, 0, x).coords == x.coords;
        if (2 * r <= d) ok = ok && sq(space_, r, x).coords == cup(space_, x, x).coords;
        for (int k = r + 1; r + k <= d; ++k) ok = ok && sq(space_, k, x).is_zero();
        if (r + 1 <= d) ok = ok && sq(space_, 1, x).coords == bockstein(space_, x).coords;
      }
    }
    record("steenrod_axioms", ok, std::to_string(n) + " basis classes");
  }

  void check_bockstein() {
    const auto Z2 = CoefficientRing::mod(2);
    const auto Z = CoefficientRing::integers();
    const int d = space_.dim();
    bool squared = true, derivation = true, integral = true;
    for (int r = 0; r + 1 <= d; ++r) {
      const auto& B = space_.cohomology(r, Z2);
      for (std::size_t i = 0; i < B.size(); ++i) {
        const auto x = space_.basis_class(r, Z2, i);
        const auto bx = bockstein(space_, x);
        if (r + 2 <= d) squared = squared && bockstein(space_, bx).is_zero();
        for (int s = 0; r + s + 1 <= d; ++s) {
          const auto& C = space_.cohomology(s, Z2);
          for (std::size_t j = 0; j < C.size(); ++j) {
            const auto y = space_.basis_class(s, Z2, j);
            const auto lhs = bockstein(space_, cup(space_, x, y));
            Cochain rhs = cup(bx.cocycle, y.cocycle);
            if (s + 1 <= d) rhs += cup(x.cocycle, bockstein(space_, y).cocycle);
            derivation = derivation && lhs.coords == space_.class_of(rhs).coords;
          }
        }
      }
      const auto& BZ = space_.cohomology(r, Z);
      for (std::size_t i = 0; i < BZ.size(); ++i)
        integral = integral && integral_bockstein(space_, reduce_class(space_, space_.basis_class(r, Z, i), Z2)).is_zero();
    }
    record("bockstein_squares_to_zero", squared);
    record("bockstein_derivation", derivation);
    record("integral_bockstein_of_reduction", integral);
  }

  void check_duality() {
    const auto r2 = duality_check(space_, CoefficientRing::mod(2));
    record("duality_mod_2", r2.applicable && r2.passed);
    const auto rz = duality_check(space_, CoefficientRing::integers());
    if (!rz.applicable) skip("duality_integral", rz.diagnostic);
    else record("duality_integral", rz.passed);
  }

  void check_wu() {
    const auto cc = stiefel_whitney(space_);
    record("wu_v1_equals_w1", cc.v1_equals_w1);
    record("wu_v2_equals_w2_plus_w1_squared", cc.v2_equals_w2_plus_w1sq);
    const int d = space_.dim();
    bool vanish = true;
    for (int i = d / 2 + 1; i <= d; ++i) vanish = vanish && cc.v[i].is_zero();
    record("wu_classes_vanish_above_half_dimension", vanish);
    if (orientable_ && d >= 1) record("w1_vanishes_when_orientable", cc.w[1].is_zero());
    else skip("w1_vanishes_when_orientable", "non-orientable");
  }

  void check_linking(Json& j) {
    const int d = space_.dim();
    const char* names[] = {"linking_form_seed_invariance", "linking_form_nondegenerate", "linking_form_skew_symmetric",
                           "linking_form_compatibility"};
    if (d % 2 == 0 || !orientable_) {
      for (auto n : names) skip(n, d % 2 == 0 ? "even dimension" : "non-orientable");
      return;
    }
    const int k = (d - 1) / 2;
    const auto base = linking_form(space_, k);
    j["linking_form"] = torsion_form(base);
    bool invariant = true;
    for (std::uint64_t s = 0; s < 3; ++s) invariant = invariant && linking_form(space_, k, seed_ + s).gram == base.gram;
    record(names[0], invariant, "three perturbed recomputations");
    record(names[1], base.is_nondegenerate());
    if (d % 4 == 1) record(names[2], base.is_skew_symmetric());
    else skip(names[2], "dimension is not 4d+1");
    bool compat = true;
    for (int n = 1; n <= 2; ++n) compat = compat && linking_compatibility(space_, base, n).passed;
    record(names[3], compat, "n = 1, 2");
  }

  void check_middle_dimension(Json& j) {
    const int d = space_.dim();
    const char* names[] = {"pairing_skew_symmetry", "bockstein_square_identity", "alternation_cross_check"};
    if (d % 4 != 1 || !orientable_) {
      for (auto n : names) skip(n, d % 4 != 1 ? "dimension is not 4d+1" : "non-orientable");
      return;
    }
    bool skew = true;
    for (int n = 1; n <= 2; ++n) skew = skew && pairing_skew_check(space_, n).passed;
    record(names[0], skew, "n = 1, 2");
    record(names[1], verify_bock_identity(space_).passed);
    const auto w = alternation_criterion(space_);
    record(names[2], w.cross_check);
    j["verdict"] = w.alternating_verdict ? "alternating" : "non-alternating";
    j["middle_obstruction"] = Json{{"degree", w.middle_obstruction.degree}, {"coords", integers(w.middle_obstruction.coords)}};
  }

  const Space& space_;
  std::uint64_t seed_;
  int random_pairs_;
  bool orientable_ = false;
  bool passed_ = true;
  Json checks_ = Json::array();
};

}  // namespace steenrod::report
