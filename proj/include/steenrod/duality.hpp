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

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "steenrod/cochain.hpp"
#include "steenrod/cohomology.hpp"
#include "steenrod/error.hpp"
#include "steenrod/matrix.hpp"
#include "steenrod/operations.hpp"
#include "steenrod/ring.hpp"
#include "steenrod/simplicial_complex.hpp"

namespace steenrod {

/// Element of Q/Z stored as num/den with 0 <= num < den and gcd 1.
class Fraction {
 public:
  Fraction() = default;
  Fraction(Integer num, Integer den) {
    if (den == 0) throw DomainError("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    num = mod(num, den);
    const Integer g = gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }
  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Fraction operator-(const Fraction& a) { return Fraction(-a.num_, a.den_); }
  friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }
  friend Fraction operator*(const Integer& k, const Fraction& a) { return Fraction(k * a.num_, a.den_); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.num_ << '/' << f.den_; }

 private:
  Integer num_ = 0;
  Integer den_ = 1;
};

/// Integration against the (signed) fundamental cycle.
struct FundamentalData {
  ComplexPtr complex;
  CoefficientRing ring;
  std::vector<int> signs;  ///< per top simplex
  CohomologyClass top_generator;

  Integer integrate(const Cochain& top) const {
    if (top.degree != complex->dim()) throw DomainError("integrate needs a top-degree cochain");
    Integer acc = 0;
    for (std::size_t i = 0; i < signs.size(); ++i)
      if (top.values[i] != 0) acc += signs[i] * top.values[i];
    return ring.reduce(acc);
  }
  Integer integrate(const CohomologyClass& x) const { return integrate(x.cocycle); }
};

/// Orientation data and the normalized top class. Z/2 never needs an
/// orientation; every other ring does.
inline FundamentalData fundamental_data(const Space& space, const CoefficientRing& R) {
  const auto& K = space.complex();
  const auto report = closed_pseudomanifold_check(K);
  if (!report.closed) {
    std::string msg = K.name() + " is not a closed connected pseudomanifold";
    if (!report.diagnostics.empty()) msg += ": " + report.diagnostics.front();
    throw TopologyError(msg);
  }
  const int d = K.dim();
  FundamentalData fd{space.complex_ptr(), R, {}, {}};
  if (R == CoefficientRing::mod(2)) {
    fd.signs.assign(K.size(d), 1);
  } else {
    auto o = orient(K);
    if (!o.orientable) throw TopologyError(K.name() + " is non-orientable; integration needs Z/2 coefficients");
    fd.signs = std::move(o.signs);
  }
  const auto& B = space.cohomology(d, R);
  if (B.size() != 1) throw TopologyError("top cohomology of " + K.name() + " is not cyclic");
  auto gen = space.basis_class(d, R, 0);
  const Integer value = fd.integrate(gen);
  if (!R.is_unit(value)) throw TopologyError("top class does not integrate to a unit");
  const Integer inv = R.inverse(value);
  fd.top_generator = space.class_of(inv * gen.cocycle);
  return fd;
}

namespace detail {
// Surjectivity of the map Z^a -> (+)_b Z/h_b given by the rows of N.
inline bool surjects(const IntMatrix& N, const std::vector<Integer>& h) {
  IntMatrix A(h.size(), N.rows() + h.size());
  for (std::size_t b = 0; b < h.size(); ++b) {
    for (std::size_t a = 0; a < N.rows(); ++a) A(b, a) = N(a, b);
    A(b, N.rows() + b) = h[b];
  }
  const auto f = smith_normal_form(A);
  if (f.rank() != h.size()) return false;
  for (const auto& d : f.diagonal)
    if (d != 1) return false;
  return true;
}
inline Integer group_order(const std::vector<Integer>& orders) {
  Integer n = 1;
  for (const auto& o : orders) n *= o;
  return n;
}
}  // namespace detail

struct DegreeDuality {
  int degree = 0;
  std::vector<std::vector<Integer>> matrix;  ///< integrate(e_a cup f_b)
  bool perfect = false;
};

struct DualityReport {
  bool applicable = true;
  bool passed = false;
  std::string diagnostic;
  std::vector<DegreeDuality> degrees;
};

/// Checks that cup product followed by integration is a perfect pairing
/// H^i x H^{d-i} -> R in every degree. Over Z only the free parts are
/// compared. Non-orientable inputs over rings other than Z/2 are reported
/// as not applicable.
inline DualityReport duality_check(const Space& space, const CoefficientRing& R) {
  DualityReport rep;
  FundamentalData fd;
  try {
    fd = fundamental_data(space, R);
  } catch (const TopologyError& e) {
    rep.applicable = false;
    rep.diagnostic = e.what();
    return rep;
  }
  const int d = space.dim();
  rep.passed = true;
  for (int i = 0; i <= d; ++i) {
    const auto& Bi = space.cohomology(i, R);
    const auto& Bj = space.cohomology(d - i, R);
    DegreeDuality dd;
    dd.degree = i;
    dd.matrix.assign(Bi.size(), std::vector<Integer>(Bj.size()));
    for (std::size_t a = 0; a < Bi.size(); ++a)
      for (std::size_t b = 0; b < Bj.size(); ++b)
        dd.matrix[a][b] = fd.integrate(cup(Bi.representatives[a], Bj.representatives[b]));
    if (R.is_integers()) {
      std::vector<std::size_t> fa, fb;
      for (std::size_t a = 0; a < Bi.size(); ++a)
        if (Bi.orders[a] == 0) fa.push_back(a);
      for (std::size_t b = 0; b < Bj.size(); ++b)
        if (Bj.orders[b] == 0) fb.push_back(b);
      if (fa.size() == fb.size()) {
        IntMatrix M(fa.size(), fb.size());
        for (std::size_t a = 0; a < fa.size(); ++a)
          for (std::size_t b = 0; b < fb.size(); ++b) M(a, b) = dd.matrix[fa[a]][fb[b]];
        dd.perfect = detail::surjects(M, std::vector<Integer>(fb.size(), Integer(0)));
      }
    } else {
      const Integer m = R.modulus();
      if (detail::group_order(Bi.orders) == detail::group_order(Bj.orders)) {
        IntMatrix N(Bi.size(), Bj.size());
        bool integral = true;
        for (std::size_t a = 0; a < Bi.size(); ++a)
          for (std::size_t b = 0; b < Bj.size(); ++b) {
            const Integer unit = m / Bj.orders[b];
            if (dd.matrix[a][b] % unit != 0) integral = false;
            N(a, b) = dd.matrix[a][b] / unit;
          }
        dd.perfect = integral && detail::surjects(N, Bj.orders);
      }
    }
    rep.passed = rep.passed && dd.perfect;
    rep.degrees.push_back(std::move(dd));
  }
  return rep;
}

/// <x, y>_n = integrate(x cup beta(y)) for classes in degree 2d of a
/// closed oriented (4d+1)-dimensional complex, over Z/2^n.
inline Integer pairing_n(const Space& space, int n, const CohomologyClass& x, const CohomologyClass& y) {
  if (n < 1 || n > 62) throw DomainError("pairing_n needs 1 <= n <= 62");
  const CoefficientRing R = CoefficientRing::mod(std::int64_t(1) << n);
  const int dim = space.dim();
  if (dim % 4 != 1) throw DomainError("pairing_n needs dimension 4d+1, got " + std::to_string(dim));
  if (x.degree != (dim - 1) / 2 || y.degree != (dim - 1) / 2)
    throw DomainError("pairing_n needs classes in the middle degree " + std::to_string((dim - 1) / 2));
  if (x.ring != R || y.ring != R) throw DomainError("pairing_n classes must have Z/2^n coefficients");
  const auto fd = fundamental_data(space, R);
  return fd.integrate(cup(x.cocycle, bockstein(space, y).cocycle));
}

/// Gram matrix of the Q/Z-valued linking form on the torsion generators
/// of H^{k+1}(K; Z) for a closed oriented (2k+1)-dimensional K.
struct TorsionForm {
  int degree = 0;  ///< degree of the torsion classes, k+1
  std::vector<CohomologyClass> generators;
  std::vector<Integer> orders;
  std::vector<std::vector<Fraction>> gram;

  std::size_t size() const { return orders.size(); }

  bool is_alternating() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (!gram[i][i].is_zero()) return false;
    return true;
  }
  bool is_skew_symmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (!(gram[i][j] + gram[j][i]).is_zero()) return false;
    return true;
  }
  bool is_symmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (gram[i][j] != gram[j][i]) return false;
    return true;
  }
  /// The adjoint map into the Pontrjagin dual is an isomorphism.
  bool is_nondegenerate() const {
    IntMatrix N(size(), size());
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b) N(a, b) = (orders[b] / gram[a][b].den()) * gram[a][b].num();
    return detail::surjects(N, orders);
  }
  /// Value on arbitrary torsion coordinates (length size()).
  Fraction evaluate(const std::vector<Integer>& x, const std::vector<Integer>& y) const {
    Fraction acc;
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b)
        if (x[a] != 0 && y[b] != 0) acc = acc + (x[a] * y[b]) * gram[a][b];
    return acc;
  }
};

/// Linking form on torsion of H^{k+1}(K; Z), dim K = 2k+1. For torsion
/// classes a, b with o_b b = coboundary(c): lk(a, b) = integrate(a cup c) / o_b.
/// A seed perturbs every representative and every solution c by random
/// coboundaries; the result must not depend on it.
inline TorsionForm linking_form(const Space& space, int k, std::optional<std::uint64_t> seed = std::nullopt) {
  const int dim = space.dim();
  if (dim != 2 * k + 1)
    throw DomainError("linking_form in degree " + std::to_string(k) + " needs dimension " + std::to_string(2 * k + 1) +
                      ", got " + std::to_string(dim));
  const auto Z = CoefficientRing::integers();
  const auto fd = fundamental_data(space, Z);
  TorsionForm form;
  form.degree = k + 1;
  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);
  std::vector<Cochain> reps;
  for (auto& [cls, order] : torsion_generators(space, k + 1)) {
    Cochain rep = cls.cocycle;
    if (rng) rep += coboundary(random_cochain(space.complex_ptr(), k, Z, *rng));
    reps.push_back(rep);
    form.generators.push_back(std::move(cls));
    form.orders.push_back(order);
  }
  const std::size_t n = form.orders.size();
  std::vector<Cochain> chains;
  for (std::size_t b = 0; b < n; ++b) {
    auto c = space.solve_coboundary(form.orders[b] * reps[b]);
    if (!c) throw Error("internal: torsion class multiple is not a coboundary");
    if (rng && k > 0) *c += coboundary(random_cochain(space.complex_ptr(), k - 1, Z, *rng));
    chains.push_back(std::move(*c));
  }
  form.gram.assign(n, std::vector<Fraction>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      form.gram[a][b] = Fraction(fd.integrate(cup(reps[a], chains[b])), form.orders[b]);
  return form;
}

/// Per-prime consistency of the linking form with <.,.>_n at the prime 2:
/// for x, x' in H^k(K; Z/2^n), lk(B~x, B~x') = -(-1)^k <x, x'>_n / 2^n,
/// where B~ is the integral Bockstein. Returns the number of pairs checked
/// and whether all agreed.
struct CompatibilityReport {
  std::size_t pairs = 0;
  bool passed = true;
};

inline CompatibilityReport linking_compatibility(const Space& space, const TorsionForm& form, int n) {
  const int dim = space.dim();
  const int k = (dim - 1) / 2;
  if (dim % 2 != 1 || form.degree != k + 1) throw DomainError("linking_compatibility needs an odd-dimensional form");
  const auto R = CoefficientRing::mod(std::int64_t(1) << n);
  const Integer N = R.modulus();
  const auto fd = fundamental_data(space, R);
  const auto& B = space.cohomology(k, R);
  std::vector<CohomologyClass> lifts;
  for (std::size_t i = 0; i < B.size(); ++i) lifts.push_back(integral_bockstein(space, space.basis_class(k, R, i)));
  auto torsion_coords = [&](const CohomologyClass& c) {
    std::vector<Integer> t(form.size());
    for (std::size_t i = 0; i < form.size(); ++i) t[i] = c.coords[i];
    for (std::size_t i = form.size(); i < c.coords.size(); ++i)
      if (c.coords[i] != 0) throw Error("internal: integral Bockstein has a free component");
    return t;
  };
  CompatibilityReport rep;
  for (std::size_t a = 0; a < B.size(); ++a)
    for (std::size_t b = 0; b < B.size(); ++b) {
      const auto x = space.basis_class(k, R, a);
      const auto y = space.basis_class(k, R, b);
      const Integer pair = fd.integrate(cup(x.cocycle, bockstein(space, y).cocycle));
      const Fraction expected = Fraction((k % 2 == 0 ? -1 : 1) * pair, N);
      const Fraction got = form.evaluate(torsion_coords(lifts[a]), torsion_coords(lifts[b]));
      ++rep.pairs;
      rep.passed = rep.passed && (got == expected);
    }
  return rep;
}

/// Skew-symmetry of <.,.>_n over all basis pairs of the middle degree.
struct SkewReport {
  std::size_t pairs = 0;
  bool passed = true;
  std::vector<std::vector<Integer>> matrix;
};

inline SkewReport pairing_skew_check(const Space& space, int n) {
  const int dim = space.dim();
  const auto R = CoefficientRing::mod(std::int64_t(1) << n);
  const int k = (dim - 1) / 2;
  const auto& B = space.cohomology(k, R);
  SkewReport rep;
  rep.matrix.assign(B.size(), std::vector<Integer>(B.size()));
  for (std::size_t a = 0; a < B.size(); ++a)
    for (std::size_t b = 0; b < B.size(); ++b)
      rep.matrix[a][b] = pairing_n(space, n, space.basis_class(k, R, a), space.basis_class(k, R, b));
  for (std::size_t a = 0; a < B.size(); ++a)
    for (std::size_t b = 0; b < B.size(); ++b) {
      ++rep.pairs;
      rep.passed = rep.passed && R.reduce(rep.matrix[a][b] + rep.matrix[b][a]) == 0;
    }
  return rep;
}

}  // namespace steenrod
