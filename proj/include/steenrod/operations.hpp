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
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "steenrod/cochain.hpp"
#include "steenrod/cohomology.hpp"
#include "steenrod/error.hpp"
#include "steenrod/matrix.hpp"
#include "steenrod/ring.hpp"
#include "steenrod/simplicial_complex.hpp"

namespace steenrod {

/// The class of a cocycle, or the zero class when the degree exceeds the
/// dimension of the complex.
inline CohomologyClass class_or_zero(const Space& space, const Cochain& z) {
  if (z.degree > space.dim()) return CohomologyClass{space.complex_ptr(), z.degree, z.ring, z, {}};
  return space.class_of(z);
}

inline CohomologyClass zero_class_any(const Space& space, int k, const CoefficientRing& R) {
  return class_or_zero(space, Cochain::zero(space.complex_ptr(), k, R));
}

/// Cup product of classes.
inline CohomologyClass cup(const Space& space, const CohomologyClass& x, const CohomologyClass& y) {
  return class_or_zero(space, cup(x.cocycle, y.cocycle));
}

namespace detail {
inline void require_mod2(const CohomologyClass& x, const char* op) {
  if (x.ring != CoefficientRing::mod(2)) throw DomainError(std::string(op) + " needs Z/2 coefficients");
}
inline void require_same_space(const Space& space, const CohomologyClass& x) {
  if (x.complex != space.complex_ptr()) throw DomainError("class lives on a different complex");
}
}  // namespace detail

/// Steenrod square Sq^i on H^r(-; Z/2): the class of z cup_{r-i} z.
inline CohomologyClass sq(const Space& space, int i, const CohomologyClass& x) {
  detail::require_mod2(x, "sq");
  detail::require_same_space(space, x);
  if (i < 0) throw DomainError("sq needs i >= 0");
  const int r = x.degree;
  if (i > r) return zero_class_any(space, r + i, x.ring);
  return class_or_zero(space, cup_i(x.cocycle, x.cocycle, r - i));
}

/// Total square of a class as a list indexed by degree of the result.
inline std::vector<CohomologyClass> total_sq(const Space& space, const CohomologyClass& x) {
  std::vector<CohomologyClass> out;
  for (int i = 0; i <= x.degree; ++i) out.push_back(sq(space, i, x));
  return out;
}

/// Integer lift of a Z/m cochain with entries in 0..m-1.
inline Cochain integral_lift(const Cochain& c) { return change_ring(c, CoefficientRing::integers()); }

namespace detail {
// (1/m) * coboundary of an integral lift; exact because the input is a
// cocycle mod m.
inline Cochain divided_coboundary(const Cochain& lift, const Integer& m) {
  Cochain d = coboundary(lift);
  for (auto& v : d.values) {
    if (v % m != 0) throw DomainError("cochain is not a cocycle modulo " + m.str());
    v /= m;
  }
  return d;
}
}  // namespace detail

/// Bockstein of 0 -> Z/m -> Z/m^2 -> Z/m -> 0 for m a prime power.
inline CohomologyClass bockstein(const Space& space, const CohomologyClass& x) {
  detail::require_same_space(space, x);
  if (x.ring.is_integers() || !prime_power_base(x.ring.modulus()))
    throw DomainError("bockstein needs a prime power modulus, got " + x.ring.name());
  const Integer m = x.ring.modulus();
  Cochain d = detail::divided_coboundary(integral_lift(x.cocycle), m);
  return class_or_zero(space, change_ring(d, x.ring));
}

/// Connecting map of 0 -> Z -> Z -> Z/m -> 0 into integral cohomology.
inline CohomologyClass integral_bockstein(const Space& space, const CohomologyClass& x) {
  detail::require_same_space(space, x);
  if (x.ring.is_integers()) throw DomainError("integral_bockstein needs Z/m coefficients");
  const Integer m = x.ring.modulus();
  return class_or_zero(space, detail::divided_coboundary(integral_lift(x.cocycle), m));
}

/// Reduction of a class to another coefficient ring.
inline CohomologyClass reduce_class(const Space& space, const CohomologyClass& x, const CoefficientRing& R) {
  return class_or_zero(space, change_ring(x.cocycle, R));
}

/// True when target lies in the Z/p span of the given coordinate vectors.
inline bool in_span_mod_prime(const std::vector<std::vector<Integer>>& spanning, const std::vector<Integer>& target,
                              const Integer& p) {
  IntMatrix A(target.size(), spanning.size());
  for (std::size_t j = 0; j < spanning.size(); ++j)
    for (std::size_t i = 0; i < target.size(); ++i) A(i, j) = spanning[j][i];
  return solve_mod_prime(A, target, p).has_value();
}

/// Value of the secondary Bockstein together with its indeterminacy, the
/// image of the primary Bockstein in the same degree.
struct SecondaryClass {
  CohomologyClass value;
  std::vector<CohomologyClass> indeterminacy;

  bool contains(const CohomologyClass& candidate) const {
    if (candidate.degree != value.degree || candidate.ring != value.ring)
      throw DomainError("candidate has the wrong degree or ring");
    std::vector<Integer> diff(value.coords.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = candidate.coords[i] - value.coords[i];
    std::vector<std::vector<Integer>> span;
    for (const auto& c : indeterminacy) span.push_back(c.coords);
    return in_span_mod_prime(span, diff, 2);
  }
  bool is_zero_mod_indeterminacy() const {
    auto zero = value;
    for (auto& c : zero.coords) c = 0;
    return contains(zero);
  }
};

/// Image of the primary Bockstein H^{k}(Z/2) -> H^{k+1}(Z/2).
inline std::vector<CohomologyClass> bockstein_image(const Space& space, int k) {
  const auto Z2 = CoefficientRing::mod(2);
  std::vector<CohomologyClass> out;
  if (k < 0 || k > space.dim()) return out;
  const auto& B = space.cohomology(k, Z2);
  for (std::size_t i = 0; i < B.size(); ++i) out.push_back(bockstein(space, space.basis_class(k, Z2, i)));
  return out;
}

/// Secondary Bockstein of a mod-2 class whose primary Bockstein vanishes.
///
/// Lift x to an integral cochain x~ with coboundary 2y~, find z with
/// coboundary(z) = y~ mod 2 and replace x~ by x~ - 2z, whose coboundary is
/// divisible by 4. The value is the class of that quotient mod 2. When an
/// rng is given the initial lift is perturbed by random integral terms that
/// do not change the class of x.
inline SecondaryClass secondary_bockstein(const Space& space, const CohomologyClass& x,
                                          std::mt19937_64* rng = nullptr) {
  detail::require_mod2(x, "secondary_bockstein");
  detail::require_same_space(space, x);
  const auto Z = CoefficientRing::integers();
  const auto Z2 = CoefficientRing::mod(2);
  const int k = x.degree;
  if (k >= space.dim()) return SecondaryClass{zero_class_any(space, k + 1, Z2), {}};
  Cochain lift = integral_lift(x.cocycle);
  if (rng) {
    lift += Integer(2) * random_cochain(space.complex_ptr(), k, Z, *rng);
    if (k > 0) lift += coboundary(random_cochain(space.complex_ptr(), k - 1, Z, *rng));
  }
  Cochain y = detail::divided_coboundary(lift, 2);
  auto z = space.solve_coboundary(change_ring(y, Z2));
  if (!z) throw TopologyError("secondary_bockstein: the primary Bockstein of the input does not vanish");
  Cochain corrected = lift - Integer(2) * integral_lift(*z);
  Cochain t = detail::divided_coboundary(corrected, 4);
  SecondaryClass out{class_or_zero(space, change_ring(t, Z2)), bockstein_image(space, k)};
  return out;
}

/// Result of comparing the secondary Bockstein of u^2 with the closed form
/// u cup beta(u) + Sq^{deg u}(beta(u)).
struct SquareLiftReport {
  bool chain_identity = false;  ///< coboundary(u~^2 + 2 u~ cup_1 v~) = 4(u~ cup v~ - v~ cup_1 v~)
  bool class_identity = false;  ///< the closed form lies in the secondary Bockstein of u^2
};

/// Checks the explicit lift behind the secondary Bockstein of a square.
/// Needs u of even degree over Z/2 with u^2 in range.
inline SquareLiftReport square_lift_check(const Space& space, const CohomologyClass& u) {
  detail::require_mod2(u, "square_lift_check");
  if (u.degree % 2 != 0) throw DomainError("square_lift_check needs a class of even degree");
  const int r = u.degree;
  if (2 * r + 1 > space.dim()) throw DomainError("square_lift_check: degree 2r+1 exceeds the dimension");
  SquareLiftReport rep;
  const Cochain ut = integral_lift(u.cocycle);
  const Cochain vt = detail::divided_coboundary(ut, 2);
  const Cochain lifted = cup(ut, ut) + Integer(2) * cup_i(ut, vt, 1);
  const Cochain expected = Integer(4) * (cup(ut, vt) - cup_i(vt, vt, 1));
  rep.chain_identity = coboundary(lifted) == expected;
  const auto usq = cup(space, u, u);
  const auto bu = bockstein(space, u);
  auto candidate = cup(space, u, bu);
  const auto s = sq(space, r, bu);
  for (std::size_t i = 0; i < candidate.coords.size(); ++i) candidate.coords[i] = mod(candidate.coords[i] + s.coords[i], 2);
  rep.class_identity = secondary_bockstein(space, usq).contains(candidate);
  return rep;
}

/// One Cartan comparison: Sq^k(pr1*e cup pr2*f) against
/// sum_{i+j=k} pr1*Sq^i e cup pr2*Sq^j f.
struct CartanEntry {
  int e_degree;
  std::size_t e_index;
  int f_degree;
  std::size_t f_index;
  int k;
  bool passed;
};

struct CartanReport {
  bool passed = true;
  std::size_t product_simplices = 0;
  std::vector<CartanEntry> entries;
};

/// Product complex with a bound on its total number of simplices.
inline SimplicialComplex bounded_product(const SimplicialComplex& K, const SimplicialComplex& L,
                                         std::size_t bound) {
  // a cheap lower bound first: the number of top simplices
  std::size_t top = 0;
  for (const auto& s : K.facets())
    for (const auto& t : L.facets()) {
      const std::size_t p = s.size() - 1, q = t.size() - 1;
      std::size_t c = 1;
      for (std::size_t i = 1; i <= q; ++i) c = c * (p + i) / i;
      top += c;
      if (top > bound) throw SizeBoundError("product exceeds the size bound of " + std::to_string(bound) + " simplices");
    }
  auto P = product_complex(K, L);
  if (P.total_size() > bound)
    throw SizeBoundError("product has " + std::to_string(P.total_size()) + " simplices, above the bound of " +
                         std::to_string(bound));
  return P;
}

inline CartanReport cartan_check(const Space& K, const Space& L, std::size_t bound = 1000000) {
  const auto Z2 = CoefficientRing::mod(2);
  Space P(bounded_product(K.complex(), L.complex(), bound));
  CartanReport rep;
  rep.product_simplices = P.complex().total_size();
  const auto pr1 = first_projection(K.complex(), L.complex());
  const auto pr2 = second_projection(K.complex(), L.complex());
  auto pull1 = [&](const CohomologyClass& c) { return pullback(c.cocycle, P.complex_ptr(), pr1); };
  auto pull2 = [&](const CohomologyClass& c) { return pullback(c.cocycle, P.complex_ptr(), pr2); };
  for (int p = 0; p <= K.dim(); ++p) {
    for (std::size_t a = 0; a < K.cohomology(p, Z2).size(); ++a) {
      const auto e = K.basis_class(p, Z2, a);
      const auto sq_e = total_sq(K, e);
      for (int q = 0; q <= L.dim(); ++q) {
        for (std::size_t b = 0; b < L.cohomology(q, Z2).size(); ++b) {
          const auto f = L.basis_class(q, Z2, b);
          const auto sq_f = total_sq(L, f);
          const auto x = P.class_of(cup(pull1(e), pull2(f)));
          for (int k = 0; k <= p + q && p + q + k <= P.dim(); ++k) {
            const auto lhs = sq(P, k, x);
            Cochain rhs = Cochain::zero(P.complex_ptr(), p + q + k, Z2);
            for (int i = 0; i <= k; ++i) {
              const int j = k - i;
              if (i > p || j > q) continue;
              if (p + i > K.dim() || q + j > L.dim()) continue;
              rhs += cup(pull1(sq_e[i]), pull2(sq_f[j]));
            }
            const bool ok = P.class_of(rhs).coords == lhs.coords;
            rep.entries.push_back({p, a, q, b, k, ok});
            rep.passed = rep.passed && ok;
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace steenrod
