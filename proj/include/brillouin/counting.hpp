#pragma once

#include <cstdint>
#include <vector>

#include "brillouin/geometry.hpp"

namespace brillouin {

// ---------------------------------------------------------------------------
// Sums of two squares
// ---------------------------------------------------------------------------

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;
};

struct Factorization {
  int two_exponent = 0;
  std::vector<PrimePower> one_mod4;    // primes = 1 (mod 4)
  std::vector<PrimePower> three_mod4;  // primes = 3 (mod 4)
};

Factorization factorize(std::int64_t n);

// Number of representations n = p^2 + q^2 over signed integer pairs (p, q),
// via the classical product formula: 0 when some prime = 3 (mod 4) divides n
// to an odd power, else 4 * prod (1 + beta) over primes = 1 (mod 4).
// Convention: r2(0) = 1 (the zero pair only).
std::int64_t r2_formula(std::int64_t n);

// Same count by direct enumeration of p in [-isqrt(n), isqrt(n)].
std::int64_t r2_bruteforce(std::int64_t n);

// ---------------------------------------------------------------------------
// Focusing counts
// ---------------------------------------------------------------------------

// Number of flat-torus geodesics of squared length t_sq refocusing at their
// start: r2(t_sq) when t_sq is a non-negative integer, 0 for any other
// rational. The input is exact so integrality is decided exactly.
std::int64_t torus_focusing(Rational t_sq);

// Closed-form count of level-k orbit points at level n (circle of hyperbolic
// radius arctanh(sqrt(n/(n+1)))), for k in {2, 3, 5}:
//   k=2: r2(n) * r2(n+1) / 4
//   k=3: r2(n/9) * r2(n+1) / 4   (0 unless 9 | n)
//   k=5: r2(n/25) * r2(n+1) / 4  (0 unless 25 | n)
// n = 0 returns 0 (the identity is not counted). Throws for other k.
std::int64_t gamma_focusing_formula(std::int64_t k, std::int64_t n);

// Same count by enumeration: distinct rotation-orbit canonical forms of the
// level-k quadruples at level n. Works for any k >= 2; n = 0 returns 0.
std::int64_t gamma_focusing_bruteforce(std::int64_t k, std::int64_t n);

// Upper bound r2(n/k^2) * r2(n+1) / 4 valid for odd prime k (attained for
// k in {3, 5}).
std::int64_t gamma_focusing_bound(std::int64_t k, std::int64_t n);

// ---------------------------------------------------------------------------
// Fourth-power circle coincidences
// ---------------------------------------------------------------------------

struct PowerPair {
  std::int64_t a = 0, b = 0;  // 0 <= a <= b
};

struct Coincidence {
  std::int64_t value = 0;               // a^k + b^k
  std::vector<PowerPair> representations;  // >= 2, sorted by a
};

// Values a^k_exp + b^k_exp (0 <= a <= b <= bound) with at least two distinct
// representations, ascending by value. Overflow-checked.
std::vector<Coincidence> lk_circle_coincidences(int k_exp, std::int64_t bound);

}  // namespace brillouin
