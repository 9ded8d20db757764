#pragma once

#include <cstdint>
#include <span>

#include "brillouin/geometry.hpp"

namespace brillouin {

enum class MetricKind {
  lk_norm,         // (|dx|^k + |dy|^k)^(1/k), real k >= 1
  hyperbolic_disk  // open unit disk, d(0,z) = arctanh|z|
};

// Value type describing a metric on the plane (or on the open unit disk).
class Metric {
 public:
  static Metric lk(double exponent);
  static Metric manhattan() { return lk(1.0); }
  static Metric euclidean() { return lk(2.0); }
  static Metric hyperbolic();

  MetricKind kind() const { return kind_; }

  // Only meaningful for lk_norm.
  double exponent() const { return exponent_; }

  bool operator==(const Metric& o) const {
    return kind_ == o.kind_ && exponent_ == o.exponent_;
  }

 private:
  Metric(MetricKind kind, double exponent) : kind_(kind), exponent_(exponent) {}
  MetricKind kind_;
  double exponent_;
};

// Distance between two points. Throws std::domain_error for hyperbolic inputs
// outside the open unit disk.
double distance(const Metric& metric, Point2 a, Point2 b);

struct BallCounts {
  std::size_t inside = 0;     // d < r - tol*(1+r)
  std::size_t on_circle = 0;  // |d - r| <= tol*(1+r)
};

inline constexpr double kDefaultTol = 1e-9;

// Counts points strictly inside the open ball of the given radius around
// center, and points on the bounding circle within the relative tolerance
// band tol*(1+radius). The two counts are disjoint.
BallCounts ball_counts(const Metric& metric, Point2 center, double radius,
                       std::span<const Point2> points, double tol = kDefaultTol);

// Point z on the metric segment from x towards a with d(x, z) = r.
// Requires 0 <= r <= d(x, a).
Point2 segment_point(const Metric& metric, Point2 x, Point2 a, double r);

// Point at metric distance r from x in direction theta (angle of the initial
// Euclidean direction).
Point2 point_at_distance(const Metric& metric, Point2 x, double theta, double r);

// Probes the nested-circles property required of a proper metric around x:
// given a on the circle of radius big_r around x, place z on the segment from
// x to a at distance small_r, and check on random probe points w that
// d(z, w) < d(z, a) implies d(x, w) < big_r. Returns true iff no
// counterexample was found. Requires 0 < small_r < big_r and d(x,a) = big_r
// within a relative 1e-9.
bool check_metric_consistency(const Metric& metric, Point2 x, double big_r,
                              double small_r, Point2 a, std::size_t n_samples,
                              std::uint64_t seed = 0);

}  // namespace brillouin
