#include "brillouin/mediatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "brillouin/errors.hpp"

namespace brillouin {

namespace {

constexpr double kCenterGuard = 1e-6;  // refuse to trace this close to a norm center

double lk_norm(double exponent, Point2 v) {
  double ax = std::abs(v.x), ay = std::abs(v.y);
  if (exponent == 1.0) return ax + ay;
  if (exponent == 2.0) return std::hypot(ax, ay);
  double m = std::max(ax, ay);
  if (m == 0.0) return 0.0;
  return m * std::pow(std::pow(ax / m, exponent) + std::pow(ay / m, exponent),
                      1.0 / exponent);
}

// Gradient of the Lk norm away from the origin.
Point2 lk_grad(double exponent, Point2 v) {
  if (exponent == 2.0) {
    double n = std::hypot(v.x, v.y);
    return {v.x / n, v.y / n};
  }
  double n = lk_norm(exponent, v);
  double gx = std::copysign(std::pow(std::abs(v.x) / n, exponent - 1.0), v.x);
  double gy = std::copysign(std::pow(std::abs(v.y) / n, exponent - 1.0), v.y);
  return {gx, gy};
}

}  // namespace

Side side_of(const Metric& metric, Point2 a, Point2 b, Point2 x, double tol) {
  double da = distance(metric, x, a);
  double db = distance(metric, x, b);
  double band = tol * (1.0 + std::max(da, db));
  if (std::abs(da - db) <= band) return Side::equidistant;
  return da < db ? Side::closer_first : Side::closer_second;
}

BisectorLine euclidean_bisector(Point2 a, Point2 b) {
  Point2 d = b - a;
  double n = euclid_norm(d);
  if (n == 0.0) throw std::invalid_argument("euclidean_bisector: coincident points");
  return {{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}, {d.x / n, d.y / n}};
}

HyperbolicArc hyperbolic_mediatrix(Point2 w) {
  double s = euclid_norm(w);
  if (s == 0.0) throw std::invalid_argument("hyperbolic_mediatrix: w is the origin");
  if (s >= 1.0) throw std::domain_error("hyperbolic_mediatrix: w outside the disk");
  // Hyperbolic midpoint of 0 and w sits at Euclidean distance t along the ray;
  // the mediatrix is the geodesic through it orthogonal to that diameter.
  double t = s / (1.0 + std::sqrt(1.0 - s * s));  // tanh(arctanh(s)/2)
  double radius = (1.0 - t * t) / (2.0 * t);
  double center = (1.0 + t * t) / (2.0 * t);
  Point2 u{w.x / s, w.y / s};
  return {{center * u.x, center * u.y}, radius};
}

std::vector<Point2> arc_points(const HyperbolicArc& arc, std::size_t count) {
  double c = euclid_norm(arc.center);
  if (!(c > 1.0) || !(arc.radius > 0.0))
    throw std::invalid_argument("arc_points: not a geodesic arc");
  double phi = std::atan2(arc.center.y, arc.center.x);
  // Unit-circle crossings at angle offset +-delta around the inward direction.
  double delta = std::acos(std::clamp(-arc.radius / c, -1.0, 1.0));
  double span = 2.0 * (M_PI - delta);
  std::vector<Point2> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double theta = phi + delta +
                   span * (static_cast<double>(i) + 0.5) / static_cast<double>(count);
    out.push_back({arc.center.x + arc.radius * std::cos(theta),
                   arc.center.y + arc.radius * std::sin(theta)});
  }
  return out;
}

namespace {

struct LevelSet {
  double exponent;
  Point2 a;

  double value(Point2 x) const {
    return lk_norm(exponent, x - a) - lk_norm(exponent, x);
  }
  Point2 grad(Point2 x) const {
    Point2 g = lk_grad(exponent, x - a);
    Point2 h = lk_grad(exponent, x);
    return {g.x - h.x, g.y - h.y};
  }
  bool too_close_to_center(Point2 x) const {
    return euclid_norm(x) < kCenterGuard || euclid_norm(x - a) < kCenterGuard;
  }
};

// Newton correction towards H = 0 along the gradient. Returns false if it
// fails to reach the tolerance.
bool correct(const LevelSet& ls, Point2& x, double tol, double max_move) {
  for (int it = 0; it < 20; ++it) {
    double h = ls.value(x);
    if (std::abs(h) <= tol) return true;
    Point2 g = ls.grad(x);
    double gsq = dot(g, g);
    if (gsq < 1e-24) return false;
    double scale = -h / gsq;
    Point2 move{scale * g.x, scale * g.y};
    double mn = euclid_norm(move);
    if (mn > max_move) {
      move = {move.x * max_move / mn, move.y * max_move / mn};
    }
    x = x + move;
    if (ls.too_close_to_center(x)) return false;
  }
  return std::abs(ls.value(x)) <= tol;
}

Point2 clip_to_window(Point2 inside, Point2 outside, Window w) {
  double t = 1.0;
  Point2 d = outside - inside;
  auto slab = [&](double p, double dp, double lo, double hi) {
    if (dp > 0.0) t = std::min(t, (hi - p) / dp);
    else if (dp < 0.0) t = std::min(t, (lo - p) / dp);
  };
  slab(inside.x, d.x, w.x_min, w.x_max);
  slab(inside.y, d.y, w.y_min, w.y_max);
  t = std::max(0.0, t);
  return inside + t * d;
}

// The clip lands on a window edge between two on-curve points, so it is off
// the curve by O(step^2); slide it along that edge back onto the level set to
// keep the endpoints as tight as the interior vertices.
Point2 refine_exit(const LevelSet& ls, Point2 p, Window w, double span,
                   double tol) {
  double h0 = ls.value(p);
  if (std::abs(h0) <= tol) return p;
  double ex = std::min(std::abs(p.x - w.x_min), std::abs(p.x - w.x_max));
  double ey = std::min(std::abs(p.y - w.y_min), std::abs(p.y - w.y_max));
  bool vary_y = ex <= ey;  // pinned to a vertical edge: the free axis is y
  auto at = [&](double s) { return vary_y ? Point2{p.x, s} : Point2{s, p.y}; };
  double lim_lo = vary_y ? w.y_min : w.x_min;
  double lim_hi = vary_y ? w.y_max : w.x_max;
  double c = vary_y ? p.y : p.x;

  double u = c, v = c, hu = h0, hv = h0;
  bool bracketed = false;
  for (double d = span / 16.0; d <= span && !bracketed; d *= 2.0) {
    u = std::max(lim_lo, c - d);
    v = std::min(lim_hi, c + d);
    hu = ls.value(at(u));
    hv = ls.value(at(v));
    bracketed = (hu < 0.0) != (h0 < 0.0) || (hv < 0.0) != (h0 < 0.0);
  }
  if (!bracketed) return p;  // tangential exit, keep the clip
  double s0, s1, hs0;
  if ((hu < 0.0) != (h0 < 0.0)) {
    s0 = u, s1 = c, hs0 = hu;
  } else {
    s0 = c, s1 = v, hs0 = h0;
  }
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (s0 + s1);
    double hm = ls.value(at(mid));
    if (hm == 0.0) {
      s0 = s1 = mid;
      break;
    }
    if ((hm < 0.0) == (hs0 < 0.0)) s0 = mid, hs0 = hm;
    else s1 = mid;
  }
  Point2 refined = at(0.5 * (s0 + s1));
  if (ls.too_close_to_center(refined)) return p;
  return std::abs(ls.value(refined)) < std::abs(h0) ? refined : p;
}

}  // namespace

Polyline trace_level_set(const Metric& metric, Point2 a, Window window,
                         TraceOptions options) {
  if (metric.kind() != MetricKind::lk_norm || metric.exponent() <= 1.0)
    throw std::invalid_argument("trace_level_set: needs a smooth norm (k > 1)");
  if (euclid_norm(a) == 0.0)
    throw std::invalid_argument("trace_level_set: coincident centers");
  LevelSet ls{metric.exponent(), a};

  double step = options.step_size > 0.0 ? options.step_size
                                        : 1e-3 * window.diagonal();

  // Seed on the line through the two centers, clipped to the window.
  double s_lo = -1e300, s_hi = 1e300;
  auto clip_axis = [&](double av, double lo, double hi) {
    if (av == 0.0) {
      if (lo > 0.0 || hi < 0.0) s_hi = s_lo - 1.0;
      return;
    }
    double u = lo / av, v = hi / av;
    if (u > v) std::swap(u, v);
    s_lo = std::max(s_lo, u);
    s_hi = std::min(s_hi, v);
  };
  clip_axis(a.x, window.x_min, window.x_max);
  clip_axis(a.y, window.y_min, window.y_max);
  if (s_lo > s_hi) throw seed_not_found_error("trace_level_set: line misses window");

  const int scan = 1024;
  Point2 seed;
  bool found = false;
  double prev_s = s_lo, prev_h = ls.value({s_lo * a.x, s_lo * a.y});
  for (int i = 1; i <= scan && !found; ++i) {
    double s = s_lo + (s_hi - s_lo) * static_cast<double>(i) / scan;
    double h = ls.value({s * a.x, s * a.y});
    if (h == 0.0 || (h < 0.0) != (prev_h < 0.0)) {
      double u = prev_s, v = s;
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (u + v);
        double hm = ls.value({mid * a.x, mid * a.y});
        if (hm == 0.0 || (hm < 0.0) == (prev_h < 0.0)) u = mid;
        else v = mid;
      }
      seed = {0.5 * (u + v) * a.x, 0.5 * (u + v) * a.y};
      if (!ls.too_close_to_center(seed) && std::abs(ls.value(seed)) <= options.tol)
        found = true;
    }
    prev_s = s;
    prev_h = h;
  }
  if (!found) throw seed_not_found_error("trace_level_set: no sign change on seed line");

  // Continuation in both directions from the seed.
  auto tangent_at = [&](Point2 x) {
    Point2 g = ls.grad(x);
    double n = euclid_norm(g);
    return Point2{-g.y / n, g.x / n};
  };

  std::vector<Point2> forward, backward;
  bool closed = false;
  for (int dir = 0; dir < 2 && !closed; ++dir) {
    std::vector<Point2>& side = dir == 0 ? forward : backward;
    Point2 x = seed;
    Point2 t0 = tangent_at(seed);
    Point2 prev_t = dir == 0 ? t0 : Point2{-t0.x, -t0.y};
    for (std::size_t step_idx = 0;; ++step_idx) {
      if (step_idx >= options.max_steps)
        throw step_failure_error("trace_level_set: step budget exhausted", x.x, x.y);
      Point2 t = tangent_at(x);
      if (dot(t, prev_t) < 0.0) t = {-t.x, -t.y};
      double h = step;
      Point2 next;
      bool ok = false;
      while (h > step / 1024.0) {
        next = x + h * t;
        if (!ls.too_close_to_center(next) &&
            correct(ls, next, options.tol, 2.0 * h)) {
          ok = true;
          break;
        }
        h *= 0.5;
      }
      if (!ok)
        throw step_failure_error("trace_level_set: corrector failed", x.x, x.y);
      if (!window.contains(next)) {
        Point2 exit = clip_to_window(x, next, window);
        side.push_back(refine_exit(ls, exit, window, 2.0 * step, options.tol));
        break;
      }
      side.push_back(next);
      prev_t = t;
      x = next;
      if (dir == 0 && step_idx > 10 && euclid_norm(next - seed) < step) {
        side.push_back(seed);
        closed = true;
        break;
      }
    }
  }

  Polyline poly;
  poly.points.reserve(backward.size() + 1 + forward.size());
  for (auto it = backward.rbegin(); it != backward.rend(); ++it)
    poly.points.push_back(*it);
  poly.points.push_back(seed);
  for (const Point2& p : forward) poly.points.push_back(p);
  poly.residuals.reserve(poly.points.size());
  for (const Point2& p : poly.points)
    poly.residuals.push_back(std::abs(ls.value(p)));
  return poly;
}

std::vector<AxisCrossing> axis_intersections(const Polyline& poly) {
  std::vector<AxisCrossing> out;
  auto push = [&](int axis, double coord) {
    double nearest = std::round(2.0 * coord) / 2.0;
    if (!out.empty() && out.back().axis == axis &&
        std::abs(out.back().coordinate - coord) < 1e-12)
      return;
    out.push_back({axis, coord, std::abs(coord - nearest)});
  };
  for (std::size_t i = 0; i + 1 < poly.points.size(); ++i) {
    Point2 p = poly.points[i], q = poly.points[i + 1];
    if (p.y == 0.0) push(0, p.x);
    else if ((p.y < 0.0) != (q.y < 0.0)) {
      double t = p.y / (p.y - q.y);
      push(0, p.x + t * (q.x - p.x));
    }
    if (p.x == 0.0) push(1, p.y);
    else if ((p.x < 0.0) != (q.x < 0.0)) {
      double t = p.x / (p.x - q.x);
      push(1, p.y + t * (q.y - p.y));
    }
  }
  if (!poly.points.empty()) {
    Point2 last = poly.points.back();
    if (last.y == 0.0) push(0, last.x);
    if (last.x == 0.0) push(1, last.y);
  }
  return out;
}

namespace {

// Orientation-reducing transform: sign flips then an optional swap, taking a
// into the octant ax >= ay >= 0. The Manhattan norm is invariant under both.
struct OctantMap {
  double sx = 1.0, sy = 1.0;
  bool swapped = false;

  Point2 apply(Point2 p) const {
    Point2 q{sx * p.x, sy * p.y};
    if (swapped) std::swap(q.x, q.y);
    return q;
  }
  Point2 unapply(Point2 p) const {
    Point2 q = p;
    if (swapped) std::swap(q.x, q.y);
    return {sx * q.x, sy * q.y};
  }
};

void append_clipped(std::vector<Point2>& out, Point2 p, Point2 q, Window w) {
  // Liang-Barsky clip of segment pq.
  double t0 = 0.0, t1 = 1.0;
  Point2 d = q - p;
  auto clip = [&](double num, double den) {
    // inside condition along this edge is t * den >= num
    if (den == 0.0) return num <= 0.0;
    double t = num / den;
    if (den > 0.0) {
      if (t > t1) return false;
      t0 = std::max(t0, t);
    } else {
      if (t < t0) return false;
      t1 = std::min(t1, t);
    }
    return true;
  };
  if (!clip(w.x_min - p.x, d.x)) return;
  if (!clip(p.x - w.x_max, -d.x)) return;
  if (!clip(w.y_min - p.y, d.y)) return;
  if (!clip(p.y - w.y_max, -d.y)) return;
  if (t0 > t1) return;
  Point2 u = p + t0 * d, v = p + t1 * d;
  if (out.empty() || euclid_norm(out.back() - u) > 1e-12) out.push_back(u);
  if (euclid_norm(out.back() - v) > 1e-12) out.push_back(v);
}

}  // namespace

ManhattanMediatrix manhattan_mediatrix(Point2 a, Window window) {
  if (a.x == 0.0 && a.y == 0.0)
    throw std::invalid_argument("manhattan_mediatrix: coincident points");

  OctantMap map;
  if (a.x < 0.0) map.sx = -1.0;
  if (a.y < 0.0) map.sy = -1.0;
  Point2 c{std::abs(a.x), std::abs(a.y)};
  if (c.x < c.y) {
    map.swapped = true;
    std::swap(c.x, c.y);
  }
  // Canonical form: c.x >= c.y >= 0, c != 0.

  ManhattanMediatrix out;
  double reach = window.diagonal() + std::abs(c.x) + std::abs(c.y) +
                 std::max({std::abs(window.x_min), std::abs(window.x_max),
                           std::abs(window.y_min), std::abs(window.y_max)}) + 1.0;

  if (c.x == c.y) {
    // Equal coordinates: the equidistant set is the closed diagonal segment
    // plus two quarter-planes hanging off its endpoints.
    out.has_quarter_planes = true;
    Point2 top{0.0, c.y}, bot{c.x, 0.0};
    out.quarter_plane_apexes = {map.unapply(top), map.unapply(bot)};
    std::vector<Point2> pts;
    append_clipped(pts, map.unapply(top), map.unapply(bot), window);
    out.polyline = std::move(pts);
    return out;
  }

  // Generic: vertical ray down from ((cx+cy)/2, 0), diagonal up to
  // ((cx-cy)/2, cy), vertical ray up from there. Degenerates to a straight
  // line when cy == 0.
  Point2 v0{0.5 * (c.x + c.y), -reach};
  Point2 v1{0.5 * (c.x + c.y), 0.0};
  Point2 v2{0.5 * (c.x - c.y), c.y};
  Point2 v3{0.5 * (c.x - c.y), reach};
  std::vector<Point2> canon{v0, v1, v2, v3};
  std::vector<Point2> pts;
  for (std::size_t i = 0; i + 1 < canon.size(); ++i) {
    Point2 p = map.unapply(canon[i]);
    Point2 q = map.unapply(canon[i + 1]);
    if (euclid_norm(q - p) < 1e-15) continue;
    append_clipped(pts, p, q, window);
  }
  out.polyline = std::move(pts);
  return out;
}

}  // namespace brillouin
