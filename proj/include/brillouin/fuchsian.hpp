#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "brillouin/geometry.hpp"

namespace brillouin {

// Integer quadruple (p, q, r, s) with p^2 + q^2 + 1 = r^2 + s^2, encoding the
// disk-model matrix
//     [ r - i s   p + i q ]
//     [ p - i q   r + i s ]
// of determinant 1. A quadruple and its negation describe the same isometry;
// enumeration collapses such pairs keeping the lexicographically smaller one.
struct Quadruple {
  std::int64_t p = 0, q = 0, r = 1, s = 0;
};

inline bool operator==(const Quadruple& a, const Quadruple& b) {
  return a.p == b.p && a.q == b.q && a.r == b.r && a.s == b.s;
}
inline bool operator<(const Quadruple& a, const Quadruple& b) {
  if (a.p != b.p) return a.p < b.p;
  if (a.q != b.q) return a.q < b.q;
  if (a.r != b.r) return a.r < b.r;
  return a.s < b.s;
}

// Integer matrix [[a, b], [c, d]], det 1, taken modulo sign. normalized() makes
// the first nonzero entry of (a, b, c, d) positive.
struct PslMatrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;
  PslMatrix normalized() const;
};

inline bool operator==(const PslMatrix& m, const PslMatrix& n) {
  return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
}

// All quadruples with p^2 + q^2 = n, r^2 + s^2 = n + 1 satisfying the level-k
// congruences (r+p, r-p odd-style conditions: r+p = r-p = 1 and s+q = s-q = 0,
// all modulo k), modulo overall sign, sorted lexicographically.
std::vector<Quadruple> solve_quadruples(std::int64_t n, std::int64_t k);

// Same enumeration with the congruences (and the sign collapse) dropped:
// every literal integer solution of p^2+q^2 = n, r^2+s^2 = n+1.
std::vector<Quadruple> solve_quadruples_unconstrained(std::int64_t n);

// The four simultaneous rotations of a quadruple. All four represent the same
// orbit point; index 0 is the input itself.
std::array<Quadruple, 4> rotation_orbit(const Quadruple& g);

// Lexicographic minimum of the rotation orbit. Idempotent.
Quadruple canonicalize(const Quadruple& g);

// Image of the origin: (p + i q) / (r + i s).
Point2 orbit_point(const Quadruple& g);

// Squared Euclidean norm of orbit_point, exactly n / (n + 1) with n = p^2+q^2.
double orbit_point_norm_sq(const Quadruple& g);

// Moebius action of the quadruple's matrix on a point of the open unit disk.
Point2 mobius_apply(const Quadruple& g, Point2 z);

// Group inverse (also a quadruple).
Quadruple inverse(const Quadruple& g);

// Matrix product of two quadruples' matrices, reduced back to quadruple form.
Quadruple compose(const Quadruple& g, const Quadruple& h);

// Conjugation bridge from an upper-half-plane matrix to a quadruple:
// p = (a-d)/2, q = -(b+c)/2, r = (a+d)/2, s = -(b-c)/2. Returns nullopt when
// a+d or b+c is odd (the image is not integral).
std::optional<Quadruple> psl_to_quadruple(const PslMatrix& m);

}  // namespace brillouin
