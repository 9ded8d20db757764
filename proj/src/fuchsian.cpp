#include "brillouin/fuchsian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace brillouin {

namespace {

constexpr std::int64_t kLevelLimit = 4000000000ll;  // keeps squares in int64

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline std::int64_t mod_floor(std::int64_t v, std::int64_t k) {
  std::int64_t m = v % k;
  return m < 0 ? m + k : m;
}

// All signed integer pairs (u, v) with u^2 + v^2 = n, lexicographic order.
std::vector<std::pair<std::int64_t, std::int64_t>> two_square_pairs(std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  std::int64_t top = isqrt64(n);
  for (std::int64_t u = -top; u <= top; ++u) {
    std::int64_t rem = n - u * u;
    std::int64_t v = isqrt64(rem);
    if (v * v != rem) continue;
    if (v == 0) {
      out.push_back({u, 0});
    } else {
      out.push_back({u, -v});
      out.push_back({u, v});
    }
  }
  return out;
}

inline bool congruent(const Quadruple& g, std::int64_t k) {
  return mod_floor(g.r + g.p, k) == 1 && mod_floor(g.r - g.p, k) == 1 &&
         mod_floor(g.s + g.q, k) == 0 && mod_floor(g.s - g.q, k) == 0;
}

void check_level(std::int64_t n) {
  if (n < 0 || n > kLevelLimit)
    throw std::invalid_argument("quadruple level out of supported range");
}

}  // namespace

std::vector<Quadruple> solve_quadruples(std::int64_t n, std::int64_t k) {
  check_level(n);
  if (k < 2) throw std::invalid_argument("congruence level k must be >= 2");
  auto pq = two_square_pairs(n);
  auto rs = two_square_pairs(n + 1);
  std::vector<Quadruple> out;
  for (auto [p, q] : pq) {
    for (auto [r, s] : rs) {
      Quadruple g{p, q, r, s};
      if (!congruent(g, k)) continue;
      // The negation is the same group element; keep the lex-smaller
      // representative when both satisfy the congruences.
      Quadruple neg{-p, -q, -r, -s};
      if (congruent(neg, k) && neg < g) continue;
      out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Quadruple> solve_quadruples_unconstrained(std::int64_t n) {
  check_level(n);
  auto pq = two_square_pairs(n);
  auto rs = two_square_pairs(n + 1);
  std::vector<Quadruple> out;
  out.reserve(pq.size() * rs.size());
  for (auto [p, q] : pq)
    for (auto [r, s] : rs) out.push_back({p, q, r, s});
  std::sort(out.begin(), out.end());
  return out;
}

std::array<Quadruple, 4> rotation_orbit(const Quadruple& g) {
  // Simultaneous quarter-turn (p,q) -> (-q,p), (r,s) -> (-s,r): the four
  // representations of one orbit point.
  Quadruple r1{-g.q, g.p, -g.s, g.r};
  Quadruple r2{-g.p, -g.q, -g.r, -g.s};
  Quadruple r3{g.q, -g.p, g.s, -g.r};
  return {g, r1, r2, r3};
}

Quadruple canonicalize(const Quadruple& g) {
  auto orbit = rotation_orbit(g);
  return *std::min_element(orbit.begin(), orbit.end());
}

Point2 orbit_point(const Quadruple& g) {
  // (p + i q) / (r + i s), rationalized.
  std::int64_t den = g.r * g.r + g.s * g.s;
  if (den == 0) throw std::invalid_argument("orbit_point: zero denominator");
  double re = static_cast<double>(g.p * g.r + g.q * g.s);
  double im = static_cast<double>(g.q * g.r - g.p * g.s);
  return {re / static_cast<double>(den), im / static_cast<double>(den)};
}

double orbit_point_norm_sq(const Quadruple& g) {
  double n = static_cast<double>(g.p * g.p + g.q * g.q);
  return n / (n + 1.0);
}

Point2 mobius_apply(const Quadruple& g, Point2 z) {
  std::complex<double> zc = to_complex(z);
  std::complex<double> top(static_cast<double>(g.r), -static_cast<double>(g.s));
  std::complex<double> mid(static_cast<double>(g.p), static_cast<double>(g.q));
  std::complex<double> w = (top * zc + mid) / (std::conj(mid) * zc + std::conj(top));
  return from_complex(w);
}

Quadruple inverse(const Quadruple& g) { return {-g.p, -g.q, g.r, -g.s}; }

Quadruple compose(const Quadruple& g, const Quadruple& h) {
  // Multiply the two matrices over the Gaussian integers; the product keeps
  // the conjugate-symmetric shape, so read the new quadruple off the second
  // column.
  auto re12 = g.r * h.p + g.s * h.q + g.p * h.r - g.q * h.s;
  auto im12 = g.r * h.q - g.s * h.p + g.q * h.r + g.p * h.s;
  auto re22 = g.p * h.p + g.q * h.q + g.r * h.r - g.s * h.s;
  auto im22 = g.p * h.q - g.q * h.p + g.r * h.s + g.s * h.r;
  Quadruple out{re12, im12, re22, im22};
  if (out.p * out.p + out.q * out.q + 1 != out.r * out.r + out.s * out.s)
    throw std::logic_error("compose: product left the quadruple variety");
  return out;
}

std::optional<Quadruple> psl_to_quadruple(const PslMatrix& m) {
  if (m.a * m.d - m.b * m.c != 1)
    throw std::invalid_argument("psl_to_quadruple: determinant must be 1");
  if (mod_floor(m.a + m.d, 2) != 0 || mod_floor(m.b + m.c, 2) != 0)
    return std::nullopt;  // conjugated image is not integral
  return Quadruple{(m.a - m.d) / 2, -(m.b + m.c) / 2, (m.a + m.d) / 2,
                   -(m.b - m.c) / 2};
}

PslMatrix PslMatrix::normalized() const {
  const std::int64_t v[4] = {a, b, c, d};
  for (std::int64_t e : v) {
    if (e > 0) return *this;
    if (e < 0) return {-a, -b, -c, -d};
  }
  return *this;
}

}  // namespace brillouin
