#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "brillouin/fuchsian.hpp"
#include "brillouin/geometry.hpp"
#include "brillouin/metric.hpp"

namespace brillouin {

enum class PointSetKind {
  square_lattice,      // Z^2
  irrational_lattice,  // {(m, n*alpha)}, alpha irrational
  cross_set,           // {(m, 0)} union {(0, n)}
  gamma_orbit          // orbit of 0 under the level-k quadruple group
};

// Discrete point set descriptor. Immutable; cheap to copy (orbit tables are
// shared).
class PointSet {
 public:
  static PointSet square_lattice();
  static PointSet irrational_lattice(double alpha);  // default sqrt(2) via helper
  static PointSet irrational_lattice();
  static PointSet cross_set();
  // Orbit of the origin under the level-k group, complete through level n_max.
  static PointSet gamma_orbit(std::int64_t k, std::int64_t n_max);

  PointSetKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  std::int64_t gamma_k() const { return gamma_k_; }
  std::int64_t gamma_n_max() const { return gamma_n_max_; }

  // Radius (hyperbolic distance from the origin) through which the stored
  // orbit is complete. Only meaningful for gamma_orbit.
  double orbit_horizon() const;

  // Orbit points sorted by (norm, lex), with their quadruples. gamma_orbit only.
  struct OrbitEntry {
    Point2 pos;
    double euclid_norm = 0.0;
    Quadruple quad;      // group element g with g(0) == pos
    std::int64_t level = 0;
  };
  const std::vector<OrbitEntry>& orbit_entries() const;

 private:
  PointSet(PointSetKind kind, double alpha, std::int64_t k, std::int64_t n_max);
  PointSetKind kind_;
  double alpha_ = 0.0;
  std::int64_t gamma_k_ = 0;
  std::int64_t gamma_n_max_ = 0;
  std::shared_ptr<const std::vector<OrbitEntry>> orbit_;
};

// Exactly the members at metric distance <= radius from center, sorted
// lexicographically. For gamma_orbit the query must stay within the
// completeness horizon: d(0, center) + radius <= orbit_horizon(), else
// horizon_error is thrown.
std::vector<Point2> enumerate_in_ball(const PointSet& set, const Metric& metric,
                                      Point2 center, double radius);

struct Neighbor {
  Point2 point;
  double dist = 0.0;
};

// The count nearest members, sorted by distance with lexicographic
// tie-breaking. Same horizon rule as enumerate_in_ball.
std::vector<Neighbor> nearest_sorted(const PointSet& set, const Metric& metric,
                                     Point2 query, std::size_t count);

}  // namespace brillouin
