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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steenrod/error.hpp"

namespace steenrod {

/// Arbitrary precision integer used for every exact computation.
using Integer = boost::multiprecision::cpp_int;

/// Nonnegative residue of a modulo m (m > 0).
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

/// Inverse of a modulo m, if gcd(a, m) = 1.
inline std::optional<Integer> mod_inverse(const Integer& a, const Integer& m) {
  Integer r0 = m, r1 = mod(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    Integer s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0 != 1) return std::nullopt;
  return mod(s0, m);
}

inline std::string to_string(const Integer& a) { return a.str(); }

/// Trial-division primality test.
inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// If n = p^k for a prime p and k >= 1, returns p.
inline std::optional<std::int64_t> prime_power_base(std::int64_t n) {
  if (n < 2) return std::nullopt;
  std::int64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

/// Coefficients Z (modulus 0) or Z/m with m >= 2. Elements of Z/m are
/// always stored as representatives 0..m-1.
class CoefficientRing {
 public:
  constexpr CoefficientRing() = default;

  static constexpr CoefficientRing integers() { return CoefficientRing(); }
  static CoefficientRing mod(std::int64_t m) {
    if (m < 2) throw DomainError("modulus must be at least 2, got " + std::to_string(m));
    CoefficientRing r;
    r.modulus_ = m;
    return r;
  }

  /// Accepts "z", "Z", "mod:<m>" and "Z/<m>".
  static CoefficientRing parse(std::string_view text) {
    if (text == "z" || text == "Z") return integers();
    std::string_view digits;
    if (text.rfind("mod:", 0) == 0)
      digits = text.substr(4);
    else if (text.rfind("Z/", 0) == 0)
      digits = text.substr(2);
    else
      throw DomainError("unknown ring '" + std::string(text) + "', expected z or mod:<m>");
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
      throw DomainError("bad modulus in ring '" + std::string(text) + "'");
    return mod(std::stoll(std::string(digits)));
  }

  bool is_integers() const { return modulus_ == 0; }
  std::int64_t modulus() const { return modulus_; }

  Integer reduce(const Integer& a) const {
    if (modulus_ == 0) return a;
    return steenrod::mod(a, Integer(modulus_));
  }
  void reduce_in_place(std::vector<Integer>& values) const {
    if (modulus_ == 0) return;
    for (auto& v : values) v = steenrod::mod(v, Integer(modulus_));
  }

  /// True when a is invertible in the ring.
  bool is_unit(const Integer& a) const {
    if (modulus_ == 0) return a == 1 || a == -1;
    return gcd(a, Integer(modulus_)) == 1;
  }
  /// Inverse of a unit.
  Integer inverse(const Integer& a) const {
    if (modulus_ == 0) {
      if (a == 1 || a == -1) return a;
      throw DomainError("not a unit in Z: " + a.str());
    }
    auto inv = mod_inverse(a, Integer(modulus_));
    if (!inv) throw DomainError("not a unit in " + name() + ": " + a.str());
    return *inv;
  }

  std::string name() const { return modulus_ == 0 ? "Z" : "Z/" + std::to_string(modulus_); }

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;
  friend auto operator<=>(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  std::int64_t modulus_ = 0;
};

}  // namespace steenrod
