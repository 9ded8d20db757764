#pragma once

#include <cstdint>
#include <vector>

#include "brillouin/geometry.hpp"
#include "brillouin/metric.hpp"

namespace brillouin {

enum class Side {
  closer_first,   // d(x, a) < d(x, b) outside the tolerance band
  equidistant,    // |d(x, a) - d(x, b)| within the band
  closer_second
};

Side side_of(const Metric& metric, Point2 a, Point2 b, Point2 x,
             double tol = kDefaultTol);

// Euclidean perpendicular bisector of a and b: point on the line plus unit
// normal (pointing from a towards b).
struct BisectorLine {
  Point2 point;
  Point2 normal;
};
BisectorLine euclidean_bisector(Point2 a, Point2 b);

// Hyperbolic mediatrix of the origin and w: a geodesic, i.e. a circular arc
// orthogonal to the unit circle (the diameter case cannot occur here since
// the origin is never equidistant from itself and w != 0).
struct HyperbolicArc {
  Point2 center;   // Euclidean center, |center| > 1
  double radius;   // Euclidean radius, |center|^2 = 1 + radius^2
};
HyperbolicArc hyperbolic_mediatrix(Point2 w);

// count points on the arc strictly inside the unit disk, endpoint-shaved,
// ordered along the arc.
std::vector<Point2> arc_points(const HyperbolicArc& arc, std::size_t count);

// Level-set tracing of H_a(x) = |x - a|_k - |x|_k (the signed mediatrix
// residual) for Lk metrics with even integer exponent >= 2.
struct Polyline {
  std::vector<Point2> points;
  std::vector<double> residuals;  // |H_a| at each vertex
};

struct TraceOptions {
  double step_size = 0.0;   // 0: 1e-3 of the window diagonal
  double tol = 1e-9;        // corrector target for |H_a|
  std::size_t max_steps = 200000;
};

// Traces the connected branch of {H_a = 0} through a seed found by sign-change
// bisection on the window-spanning line through 0 and a. Continuation runs in
// both directions until window exit or closure. Refuses to step within 1e-6 of
// either norm center. Throws seed_not_found_error / step_failure_error.
Polyline trace_level_set(const Metric& metric, Point2 a, Window window,
                         TraceOptions options = {});

struct AxisCrossing {
  int axis = 0;            // 0: crossing of the x-axis, 1: of the y-axis
  double coordinate = 0.0; // the nonzero coordinate at the crossing
  double half_integer_distance = 0.0;  // distance to the nearest multiple of 1/2
};

// Scans consecutive polyline vertices for coordinate-axis crossings
// (sign changes, linearly interpolated).
std::vector<AxisCrossing> axis_intersections(const Polyline& poly);

// Manhattan mediatrix of 0 and a, built piecewise analytically. When
// |a.x| == |a.y| the equidistant set has positive area: two quarter-planes
// glued to a diagonal segment. Otherwise it is a 3-piece polyline (two
// axis-parallel rays joined by a diagonal segment), clipped to the window.
struct ManhattanMediatrix {
  std::vector<Point2> polyline;       // vertices, clipped to the window
  bool has_quarter_planes = false;
  // Present when has_quarter_planes: the two apexes; each quarter-plane is
  // {x <= apex.x and y*sgn >= ...} described by the apex and axis directions.
  std::vector<Point2> quarter_plane_apexes;
};
ManhattanMediatrix manhattan_mediatrix(Point2 a, Window window);

}  // namespace brillouin
