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
#include <string>
#include <utility>
#include <vector>

#include "steenrod/error.hpp"
#include "steenrod/ring.hpp"

namespace steenrod {

/// A pair of distinct odd primes.
struct PrimePair {
  std::int64_t p;
  std::int64_t q;

  PrimePair(std::int64_t p_, std::int64_t q_) : p(p_), q(q_) {
    if (p == 2 || q == 2 || !is_prime(p) || !is_prime(q))
      throw DomainError("prime pair needs odd primes, got (" + std::to_string(p) + ", " + std::to_string(q) + ")");
    if (p == q) throw DomainError("prime pair needs distinct primes");
  }
};

/// 0 for p = 1 mod 4 and 1 for p = 3 mod 4.
inline int epsilon(std::int64_t p) {
  if (p == 2 || !is_prime(p)) throw DomainError("epsilon needs an odd prime, got " + std::to_string(p));
  return p % 4 == 1 ? 0 : 1;
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  unsigned __int128 result = 1 % m, b = static_cast<unsigned __int128>(((base % m) + m) % m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

/// Quadratic residue test by listing every square modulo q.
inline bool is_square_by_enumeration(std::int64_t a, std::int64_t q) {
  a = ((a % q) + q) % q;
  for (std::int64_t x = 0; x < q; ++x)
    if (x * x % q == a) return true;
  return false;
}

/// Quadratic residue test by Euler's criterion (q an odd prime).
inline bool is_square_by_euler(std::int64_t a, std::int64_t q) {
  a = ((a % q) + q) % q;
  if (a == 0) return true;
  return pow_mod(a, (q - 1) / 2, q) == 1;
}

namespace detail {
inline std::int64_t signed_prime(const PrimePair& pq) { return epsilon(pq.p) ? -pq.p : pq.p; }
}  // namespace detail

/// Mod-2 linking number: 0 iff (-1)^eps(p) p is a square mod q. Computed
/// with the enumeration oracle; throws if Euler's criterion disagrees.
inline int lk_mod2(const PrimePair& pq) {
  const std::int64_t a = detail::signed_prime(pq);
  const bool by_enum = is_square_by_enumeration(a, pq.q);
  if (by_enum != is_square_by_euler(a, pq.q))
    throw Error("residue oracles disagree for (" + std::to_string(pq.p) + ", " + std::to_string(pq.q) + ")");
  return by_enum ? 0 : 1;
}

struct ReciprocityReport {
  std::int64_t bound = 0;
  std::size_t primes = 0;
  std::size_t pairs = 0;             ///< ordered pairs compared
  std::size_t oracle_disagreements = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> violations;
};

/// Compares lk(p, q) and lk(q, p) for all distinct odd primes below bound.
/// Each residue test is run with both oracles; a table of squares per q
/// keeps the enumeration oracle linear in q.
inline ReciprocityReport reciprocity_scan(std::int64_t bound) {
  ReciprocityReport rep;
  rep.bound = bound;
  std::vector<std::int64_t> primes;
  for (std::int64_t n = 3; n < bound; n += 2)
    if (is_prime(n)) primes.push_back(n);
  rep.primes = primes.size();
  // lk[i][j] for p = primes[i], q = primes[j]
  std::vector<std::vector<signed char>> lk(primes.size(), std::vector<signed char>(primes.size(), 0));
  std::vector<char> squares;
  for (std::size_t j = 0; j < primes.size(); ++j) {
    const std::int64_t q = primes[j];
    squares.assign(q, 0);
    for (std::int64_t x = 0; x < q; ++x) squares[x * x % q] = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (i == j) continue;
      const std::int64_t p = primes[i];
      const std::int64_t a = (((p % 4 == 1 ? p : -p) % q) + q) % q;
      const bool by_enum = squares[a];
      if (by_enum != is_square_by_euler(a, q)) ++rep.oracle_disagreements;
      lk[i][j] = by_enum ? 0 : 1;
    }
  }
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      rep.pairs += 2;
      if (lk[i][j] != lk[j][i]) rep.violations.emplace_back(primes[i], primes[j]);
    }
  return rep;
}

}  // namespace steenrod
