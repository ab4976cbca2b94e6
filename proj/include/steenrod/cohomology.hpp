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

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steenrod/cochain.hpp"
#include "steenrod/error.hpp"
#include "steenrod/matrix.hpp"
#include "steenrod/reduction.hpp"
#include "steenrod/ring.hpp"
#include "steenrod/simplicial_complex.hpp"

namespace steenrod {

/// Group structure of H^k(K; R) with representative cocycles and the data
/// needed to read off the class of any cocycle.
///
/// Generators come in Smith order: torsion generators with increasing
/// orders first, then the free generators. Over Z/m a generator of order m
/// counts towards free_rank and smaller orders are torsion invariants.
class CohomologyBasis {
 public:
  ComplexPtr complex;
  int degree = 0;
  CoefficientRing ring;
  int free_rank = 0;
  std::vector<Integer> torsion_invariants;
  /// Order of each generator; 0 stands for infinite order.
  std::vector<Integer> orders;
  std::vector<Cochain> representatives;

  std::size_t size() const { return representatives.size(); }

  /// Coordinates of the class of a cocycle; throws if z is not a cocycle.
  std::vector<Integer> coordinates(const Cochain& z) const {
    if (z.complex != complex || z.degree != degree || z.ring != ring)
      throw DomainError("cochain does not belong to this cohomology group");
    if (degree < complex->dim() && !coboundary(z).is_zero()) throw DomainError("cochain is not a cocycle");
    auto x = reduction_->project(degree, z.values);
    std::vector<Integer> t = Tinv_ * x;
    std::vector<Integer> scaled;
    scaled.reserve(t.size() - start_);
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (j < start_) {
        if (t[j] != 0) throw DomainError("cochain is not a cocycle");
        continue;
      }
      const Integer& e = divisors_[j - start_];
      if (e != 1 && t[j] % e != 0) throw DomainError("cochain is not a cocycle");
      scaled.push_back(e == 1 ? t[j] : t[j] / e);
    }
    std::vector<Integer> y = P_ * scaled;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (orders[i] != 0) y[i] = mod(y[i], orders[i]);
    return y;
  }

  /// Canonical form of a coordinate vector (entries reduced by the orders).
  std::vector<Integer> normalize(std::vector<Integer> c) const {
    for (std::size_t i = 0; i < c.size(); ++i)
      if (orders[i] != 0) c[i] = mod(c[i], orders[i]);
    return c;
  }

  /// Cocycle with the given coordinates.
  Cochain cocycle(const std::vector<Integer>& coords) const {
    if (coords.size() != size()) throw DomainError("coordinate vector has the wrong length");
    Cochain out = Cochain::zero(complex, degree, ring);
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0) out += coords[i] * representatives[i];
    return out;
  }

  /// Builds the basis from a reduction of the cochain complex.
  static CohomologyBasis build(std::shared_ptr<const CochainReduction> red, int k) {
    const auto& K = *red->complex();
    if (k < 0 || k > K.dim())
      throw DomainError("cohomology degree " + std::to_string(k) + " out of range for a complex of dimension " +
                        std::to_string(K.dim()));
    const CoefficientRing R = red->ring();
    const std::size_t n = red->cells(k).size();
    const IntMatrix& Dk = red->matrix(k);
    const IntMatrix Dprev = k > 0 ? red->matrix(k - 1) : IntMatrix(n, 0);

    CohomologyBasis B;
    B.complex = red->complex();
    B.degree = k;
    B.ring = R;
    B.reduction_ = red;
    const auto sk = smith_normal_form(Dk);
    B.Tinv_ = sk.T_inv;
    const std::size_t r = sk.rank();
    IntMatrix basis;  // columns span the cocycle lattice, in reduced coordinates
    IntMatrix G;      // coboundaries plus m Z^n expressed in that basis
    if (R.is_integers()) {
      B.start_ = r;
      B.divisors_.assign(n - r, Integer(1));
      basis = IntMatrix(n, n - r);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = r; j < n; ++j) basis(i, j - r) = sk.T(i, j);
      const IntMatrix full = sk.T_inv * Dprev;
      G = IntMatrix(n - r, Dprev.cols());
      for (std::size_t i = r; i < n; ++i)
        for (std::size_t j = 0; j < Dprev.cols(); ++j) G(i - r, j) = full(i, j);
    } else {
      const Integer m = R.modulus();
      B.start_ = 0;
      B.divisors_.assign(n, Integer(1));
      for (std::size_t j = 0; j < r; ++j) B.divisors_[j] = m / gcd(sk.diagonal[j], m);
      basis = sk.T;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) basis(i, j) *= B.divisors_[j];
      IntMatrix gens(n, Dprev.cols() + n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < Dprev.cols(); ++j) gens(i, j) = Dprev(i, j);
        gens(i, Dprev.cols() + i) = m;
      }
      G = sk.T_inv * gens;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < G.cols(); ++j) {
          if (G(i, j) % B.divisors_[i] != 0) throw Error("internal: coboundary outside the cocycle lattice");
          G(i, j) /= B.divisors_[i];
        }
    }
    const auto sg = smith_normal_form(G);
    const IntMatrix gens = basis * sg.S_inv;
    const std::size_t z = G.rows();
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < z; ++i) {
      const Integer order = i < sg.rank() ? sg.diagonal[i] : Integer(0);
      if (order == 1) continue;
      kept.push_back(i);
      B.orders.push_back(order);
      if (order == 0 || (!R.is_integers() && order == R.modulus())) ++B.free_rank;
      else B.torsion_invariants.push_back(order);
    }
    B.P_ = IntMatrix(kept.size(), z);
    for (std::size_t a = 0; a < kept.size(); ++a)
      for (std::size_t j = 0; j < z; ++j) B.P_(a, j) = sg.S(kept[a], j);
    for (std::size_t i : kept) {
      Cochain c{B.complex, k, R, red->include(k, gens.column(i))};
      B.representatives.push_back(std::move(c));
    }
    return B;
  }

 private:
  std::shared_ptr<const CochainReduction> reduction_;
  IntMatrix Tinv_;
  std::size_t start_ = 0;
  std::vector<Integer> divisors_;
  IntMatrix P_;
};

/// A cohomology class together with a representative cocycle and its
/// coordinates in the canonical basis of its degree.
struct CohomologyClass {
  ComplexPtr complex;
  int degree = 0;
  CoefficientRing ring;
  Cochain cocycle;
  std::vector<Integer> coords;

  bool is_zero() const {
    for (const auto& c : coords)
      if (c != 0) return false;
    return true;
  }
  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
    return a.complex == b.complex && a.degree == b.degree && a.ring == b.ring && a.coords == b.coords;
  }
};

/// A complex together with memoized reductions and cohomology bases.
/// Safe to share between threads; the caches are guarded by a mutex.
class Space {
 public:
  explicit Space(SimplicialComplex K) : complex_(std::make_shared<const SimplicialComplex>(std::move(K))) {}
  explicit Space(ComplexPtr K) : complex_(std::move(K)) {}

  const ComplexPtr& complex_ptr() const { return complex_; }
  const SimplicialComplex& complex() const { return *complex_; }
  int dim() const { return complex_->dim(); }

  std::shared_ptr<const CochainReduction> reduction(const CoefficientRing& R) const {
    std::lock_guard lock(mutex_);
    return reduction_locked(R);
  }

  const CohomologyBasis& cohomology(int k, const CoefficientRing& R) const {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(R, k);
    auto it = bases_.find(key);
    if (it != bases_.end()) return *it->second;
    auto basis = std::make_unique<CohomologyBasis>(CohomologyBasis::build(reduction_locked(R), k));
    return *bases_.emplace(key, std::move(basis)).first->second;
  }

  CohomologyClass class_of(const Cochain& z) const {
    const auto& B = cohomology(z.degree, z.ring);
    return CohomologyClass{complex_, z.degree, z.ring, z, B.coordinates(z)};
  }

  CohomologyClass from_coordinates(int k, const CoefficientRing& R, std::vector<Integer> coords) const {
    const auto& B = cohomology(k, R);
    coords = B.normalize(std::move(coords));
    return CohomologyClass{complex_, k, R, B.cocycle(coords), std::move(coords)};
  }

  CohomologyClass basis_class(int k, const CoefficientRing& R, std::size_t i) const {
    const auto& B = cohomology(k, R);
    std::vector<Integer> coords(B.size());
    coords.at(i) = 1;
    return CohomologyClass{complex_, k, R, B.representatives[i], std::move(coords)};
  }

  CohomologyClass zero_class(int k, const CoefficientRing& R) const {
    const auto& B = cohomology(k, R);
    return CohomologyClass{complex_, k, R, Cochain::zero(complex_, k, R), std::vector<Integer>(B.size())};
  }

  /// A cochain c with coboundary(c) = y, if y is a coboundary.
  std::optional<Cochain> solve_coboundary(const Cochain& y) const {
    if (y.complex != complex_) throw DomainError("cochain lives on a different complex");
    if (y.degree < 1) throw DomainError("solve_coboundary needs a cochain of positive degree");
    if (y.degree > dim()) return Cochain::zero(complex_, y.degree - 1, y.ring);
    auto red = reduction(y.ring);
    auto c = red->solve(y.degree - 1, y.values);
    if (!c) return std::nullopt;
    return Cochain{complex_, y.degree - 1, y.ring, std::move(*c)};
  }

 private:
  std::shared_ptr<const CochainReduction> reduction_locked(const CoefficientRing& R) const {
    auto it = reductions_.find(R);
    if (it != reductions_.end()) return it->second;
    auto red = std::make_shared<const CochainReduction>(complex_, R);
    reductions_.emplace(R, red);
    return red;
  }

  ComplexPtr complex_;
  mutable std::mutex mutex_;
  mutable std::map<CoefficientRing, std::shared_ptr<const CochainReduction>> reductions_;
  mutable std::map<std::pair<CoefficientRing, int>, std::unique_ptr<CohomologyBasis>> bases_;
};

/// One-shot cohomology computation.
inline CohomologyBasis cohomology(const SimplicialComplex& K, int k, const CoefficientRing& R) {
  Space space(K);
  return space.cohomology(k, R);
}

/// Generators of the torsion subgroup of H^k(K; Z) with their orders.
inline std::vector<std::pair<CohomologyClass, Integer>> torsion_generators(const Space& space, int k) {
  const auto R = CoefficientRing::integers();
  const auto& B = space.cohomology(k, R);
  std::vector<std::pair<CohomologyClass, Integer>> out;
  for (std::size_t i = 0; i < B.size(); ++i)
    if (B.orders[i] != 0) out.emplace_back(space.basis_class(k, R, i), B.orders[i]);
  return out;
}

}  // namespace steenrod
