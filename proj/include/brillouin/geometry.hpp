#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace brillouin {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(Point2 a, Point2 b) { return !(a == b); }

// Lexicographic order (x first, then y). Used everywhere a deterministic
// ordering of points is required.
inline bool lex_less(Point2 a, Point2 b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double t, Point2 p) { return {t * p.x, t * p.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double euclid_norm(Point2 p) { return std::sqrt(p.x * p.x + p.y * p.y); }
inline double euclid_norm_sq(Point2 p) { return p.x * p.x + p.y * p.y; }

inline std::complex<double> to_complex(Point2 p) { return {p.x, p.y}; }
inline Point2 from_complex(std::complex<double> z) { return {z.real(), z.imag()}; }

// Axis-aligned rectangle, closed.
struct Window {
  double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double diagonal() const { return std::sqrt(width() * width() + height() * height()); }
  bool contains(Point2 p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }
  double area() const { return width() * height(); }
};

inline Window square_window(double halfwidth) {
  return {-halfwidth, halfwidth, -halfwidth, halfwidth};
}

// Exact rational, used where integrality of an input must be decided exactly.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

}  // namespace brillouin
