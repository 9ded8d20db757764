#pragma once

#include <cstdint>
#include <vector>

#include "brillouin/geometry.hpp"
#include "brillouin/metric.hpp"
#include "brillouin/pointset.hpp"

namespace brillouin {

// Classification of a point x relative to a basepoint x0 of the set S:
// with r = d(x, x0),
//   m   = #(S strictly inside the open ball of radius r around x)
//   ell = #(S on the circle of radius r around x, within tolerance)
// x belongs to the closed zone B_n iff m + 1 <= n <= m + ell, and to the open
// zone b_n iff (m, ell) == (n - 1, 1).
struct ZoneClassification {
  std::size_t m = 0;
  std::size_t ell = 0;
  bool basepoint_on_circle = true;

  bool in_closed_zone(std::size_t n) const { return m + 1 <= n && n <= m + ell; }
  bool in_open_zone(std::size_t n) const { return ell == 1 && m + 1 == n; }
  std::size_t zone_index() const { return m + 1; }  // smallest containing zone
  bool on_boundary() const { return ell >= 2; }
};

ZoneClassification classify(const Metric& metric, const PointSet& set,
                            Point2 basepoint, Point2 x, double tol = kDefaultTol);

// Pixel-grid classification over a window. zone_index 0 is a sentinel for
// cells outside the metric's domain (hyperbolic cells outside the unit disk,
// or beyond the completeness horizon when clipping was requested).
struct ZoneRaster {
  Window window;
  std::size_t width = 0, height = 0;
  std::vector<std::uint32_t> zone_index;  // row-major, row 0 at y_min
  std::vector<std::uint8_t> boundary;     // ell >= 2

  std::size_t at(std::size_t i, std::size_t j) const { return zone_index[j * width + i]; }
  bool boundary_at(std::size_t i, std::size_t j) const { return boundary[j * width + i] != 0; }
  Point2 cell_center(std::size_t i, std::size_t j) const {
    return {window.x_min + (double(i) + 0.5) * window.width() / double(width),
            window.y_min + (double(j) + 0.5) * window.height() / double(height)};
  }
};

// Classifies every cell center. For the hyperbolic metric, allow_horizon_clip
// turns beyond-horizon cells into sentinel cells instead of throwing
// horizon_error.
ZoneRaster raster(const Metric& metric, const PointSet& set, Point2 basepoint,
                  Window window, std::size_t width, std::size_t height,
                  double tol = kDefaultTol, bool allow_horizon_clip = false);

struct RaySample {
  double t = 0.0;
  std::uint32_t zone_index = 0;
  bool boundary = false;
};

// Classification sampled along basepoint + t * direction, t in [0, t_max],
// at `steps` evenly spaced parameters (t = 0 included).
std::vector<RaySample> ray_profile(const Metric& metric, const PointSet& set,
                                   Point2 basepoint, Point2 direction,
                                   double t_max, std::size_t steps,
                                   double tol = kDefaultTol);

struct AreaEstimate {
  double area = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

// Monte Carlo area of the closed zone B_n in the metric's area element
// (Lebesgue for Lk; (1-|z|^2)^-2 for the hyperbolic disk). Samples are drawn
// uniformly in that measure, so stderr is binomial: region_area *
// sqrt(p(1-p)/N). For Lk metrics the sampling region is the window, which is
// probed along its boundary ring first; window_too_small_error is thrown if
// B_n leaks through it. For the hyperbolic metric the sampling region is the
// geodesic ball around the basepoint cut off at the classification horizon
// (same ball for every n, window ignored): orbit zones have thin unbounded
// tails, so a small truncation bias shared across zone indices is accepted.
AreaEstimate area_estimate(const Metric& metric, const PointSet& set,
                           Point2 basepoint, std::size_t n, Window window,
                           std::size_t samples, std::uint64_t seed,
                           double tol = kDefaultTol);

}  // namespace brillouin
