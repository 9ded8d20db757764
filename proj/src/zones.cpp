#include "brillouin/zones.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "brillouin/errors.hpp"
#include "brillouin/rng.hpp"

namespace brillouin {

namespace {

constexpr double kEnumerateSlack = 1e-6;  // widening of the 2r enumeration radius
constexpr double kHorizonSlack = 1e-12;

ZoneClassification from_counts(const BallCounts& c) {
  if (c.on_circle == 0)
    throw std::invalid_argument("classify: basepoint is not a member of the set");
  return {c.inside, c.on_circle, true};
}

// Reusable classifier: one enumeration, many queries. For hyperbolic orbits
// the stored orbit is indexed by angular sector (each sector sorted by norm),
// so a query only touches points that can fall inside its circle; completeness
// is checked per query against the horizon.
struct CachedClassifier {
  const Metric& metric;
  Point2 basepoint;
  double tol;
  std::vector<Point2> pts;  // lattice/cross/Lk-orbit cache
  // Hyperbolic orbit index.
  bool hyperbolic_orbit = false;
  double basepoint_dist = 0.0;  // d(0, basepoint)
  double horizon = 0.0;
  static constexpr std::size_t kSectors = 512;
  std::vector<std::vector<std::pair<double, Point2>>> sectors;  // (norm, point)
  std::vector<double> edge_cos, edge_sin;  // unit vectors of sector edges

  void build_sectors(const std::vector<PointSet::OrbitEntry>& entries) {
    sectors.assign(kSectors, {});
    for (const PointSet::OrbitEntry& e : entries) {
      double theta = std::atan2(e.pos.y, e.pos.x);
      double f = theta / (2.0 * M_PI) + 0.5;
      auto s = std::min(kSectors - 1,
                        static_cast<std::size_t>(f * static_cast<double>(kSectors)));
      sectors[s].push_back({e.euclid_norm, e.pos});
    }
    for (auto& sec : sectors)
      std::sort(sec.begin(), sec.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    edge_cos.resize(kSectors + 1);
    edge_sin.resize(kSectors + 1);
    const double w = 2.0 * M_PI / static_cast<double>(kSectors);
    for (std::size_t s = 0; s <= kSectors; ++s) {
      double a = -M_PI + static_cast<double>(s) * w;
      edge_cos[s] = std::cos(a);
      edge_sin[s] = std::sin(a);
    }
  }

  ZoneClassification run(Point2 x, bool* beyond_horizon = nullptr) const {
    double r = distance(metric, basepoint, x);
    if (!hyperbolic_orbit)
      return from_counts(ball_counts(metric, x, r, pts, tol));

    double d0x = distance(metric, {0.0, 0.0}, x);
    double limit = r + 2.0 * tol * (1.0 + r) + 1e-12;  // candidate cutoff
    if (d0x + limit > horizon * (1.0 + kHorizonSlack) + kHorizonSlack) {
      if (beyond_horizon) {
        *beyond_horizon = true;
        return {};
      }
      throw horizon_error("classification exceeds the orbit completeness horizon");
    }

    // A candidate p at euclidean norm t and origin angle beta away from x has
    // d(x,p) <= limit exactly when (A+C)t^2 - 2B cos(beta) t + (A-C) <= 0:
    // the law of cosines at doubled distances (this metric halves the
    // standard Poincare one) with cosh 2rho = (1+t^2)/(1-t^2) substituted.
    // Feasible t-intervals shrink as beta grows, so evaluating the quadratic
    // at each sector's largest cos(beta) yields a sound per-sector slice.
    double t0sq = euclid_norm_sq(x);
    double inv = 1.0 - t0sq;
    double A = (1.0 + t0sq) / inv;
    double B = 2.0 * std::sqrt(t0sq) / inv;
    double C = std::cosh(2.0 * limit);
    double K = A * A - C * C;
    double cx = 1.0, sx = 0.0;
    if (t0sq > 0.0) {
      double n = std::sqrt(t0sq);
      cx = x.x / n;
      sx = x.y / n;
    }
    thread_local std::vector<double> ecos, esin;  // edges rotated to x's frame
    ecos.resize(kSectors + 1);
    esin.resize(kSectors + 1);
    for (std::size_t s = 0; s <= kSectors; ++s) {
      ecos[s] = cx * edge_cos[s] + sx * edge_sin[s];
      esin[s] = sx * edge_cos[s] - cx * edge_sin[s];
    }

    thread_local std::vector<Point2> scratch;
    scratch.clear();
    for (std::size_t s = 0; s < kSectors; ++s) {
      const auto& sec = sectors[s];
      if (sec.empty()) continue;
      double cmax = std::max(ecos[s], ecos[s + 1]);
      if (esin[s] * esin[s + 1] <= 0.0 && cmax > 0.0) cmax = 1.0;  // spans x
      double disc = B * B * cmax * cmax - K;
      if (disc < 0.0) continue;
      double sq = std::sqrt(disc);
      double hi = (B * cmax + sq) / (A + C) + 1e-12;
      if (hi <= 0.0) continue;
      double lo = (B * cmax - sq) / (A + C) - 1e-12;
      if (lo < 0.0) lo = 0.0;
      auto first = std::lower_bound(
          sec.begin(), sec.end(), lo,
          [](const std::pair<double, Point2>& e, double v) { return e.first < v; });
      for (auto it = first; it != sec.end() && it->first <= hi; ++it)
        scratch.push_back(it->second);
    }
    return from_counts(ball_counts(metric, x, r, scratch, tol));
  }
};

CachedClassifier make_classifier(const Metric& metric, const PointSet& set,
                                 Point2 basepoint, double max_query_radius,
                                 double tol) {
  CachedClassifier c{metric, basepoint, tol};
  if (set.kind() == PointSetKind::gamma_orbit &&
      metric.kind() == MetricKind::hyperbolic_disk) {
    c.hyperbolic_orbit = true;
    c.basepoint_dist = distance(metric, {0.0, 0.0}, basepoint);
    c.horizon = set.orbit_horizon();
    c.build_sectors(set.orbit_entries());
  } else {
    c.pts = enumerate_in_ball(set, metric, basepoint,
                              2.0 * max_query_radius * (1.0 + kEnumerateSlack));
  }
  return c;
}

// Largest distance from the basepoint to any point of the window (Lk metrics:
// attained at a corner by convexity).
double max_corner_distance(const Metric& metric, Point2 basepoint, Window w) {
  Point2 corners[4] = {{w.x_min, w.y_min}, {w.x_min, w.y_max},
                       {w.x_max, w.y_min}, {w.x_max, w.y_max}};
  double m = 0.0;
  for (Point2 c : corners) m = std::max(m, distance(metric, basepoint, c));
  return m;
}

}  // namespace

ZoneClassification classify(const Metric& metric, const PointSet& set,
                            Point2 basepoint, Point2 x, double tol) {
  double r = distance(metric, basepoint, x);
  auto pts = enumerate_in_ball(set, metric, basepoint,
                               2.0 * r * (1.0 + kEnumerateSlack));
  return from_counts(ball_counts(metric, x, r, pts, tol));
}

ZoneRaster raster(const Metric& metric, const PointSet& set, Point2 basepoint,
                  Window window, std::size_t width, std::size_t height,
                  double tol, bool allow_horizon_clip) {
  if (width == 0 || height == 0)
    throw std::invalid_argument("raster: zero-sized grid");
  ZoneRaster out;
  out.window = window;
  out.width = width;
  out.height = height;
  out.zone_index.assign(width * height, 0);
  out.boundary.assign(width * height, 0);

  bool hyperbolic = metric.kind() == MetricKind::hyperbolic_disk;
  double max_r = hyperbolic ? 0.0 : max_corner_distance(metric, basepoint, window);
  CachedClassifier cls = make_classifier(metric, set, basepoint, max_r, tol);

  for (std::size_t j = 0; j < height; ++j) {
    for (std::size_t i = 0; i < width; ++i) {
      Point2 c = out.cell_center(i, j);
      if (hyperbolic && euclid_norm_sq(c) >= 1.0) continue;  // outside the domain
      bool beyond = false;
      ZoneClassification z = cls.run(c, allow_horizon_clip ? &beyond : nullptr);
      if (beyond) continue;  // sentinel cell
      out.zone_index[j * width + i] = static_cast<std::uint32_t>(z.zone_index());
      out.boundary[j * width + i] = z.on_boundary() ? 1 : 0;
    }
  }
  return out;
}

std::vector<RaySample> ray_profile(const Metric& metric, const PointSet& set,
                                   Point2 basepoint, Point2 direction,
                                   double t_max, std::size_t steps, double tol) {
  if (steps < 2) throw std::invalid_argument("ray_profile: need at least 2 steps");
  if (euclid_norm_sq(direction) == 0.0)
    throw std::invalid_argument("ray_profile: zero direction");

  std::vector<double> params(steps);
  double max_r = 0.0;
  std::vector<Point2> samples(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    double t = t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
    params[i] = t;
    samples[i] = basepoint + t * direction;
    max_r = std::max(max_r, distance(metric, basepoint, samples[i]));
  }

  CachedClassifier cls = make_classifier(metric, set, basepoint, max_r, tol);
  std::vector<RaySample> out(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    ZoneClassification z = cls.run(samples[i]);
    out[i] = {params[i], static_cast<std::uint32_t>(z.zone_index()), z.on_boundary()};
  }
  return out;
}

AreaEstimate area_estimate(const Metric& metric, const PointSet& set,
                           Point2 basepoint, std::size_t n, Window window,
                           std::size_t samples, std::uint64_t seed, double tol) {
  if (n == 0) throw std::invalid_argument("area_estimate: zone index starts at 1");
  if (samples == 0) throw std::invalid_argument("area_estimate: no samples");

  bool hyperbolic = metric.kind() == MetricKind::hyperbolic_disk;
  double truncation_radius = 0.0;
  CachedClassifier cls = [&] {
    if (hyperbolic) {
      auto c = make_classifier(metric, set, basepoint, 0.0, tol);
      // Zones of the orbit have unbounded thin tails, so the estimate is
      // truncated at the classification horizon: the same geodesic ball
      // around the basepoint for every zone index.
      truncation_radius =
          (c.horizon - c.basepoint_dist) / (2.0 * (1.0 + kEnumerateSlack)) *
          (1.0 - 1e-9);
      if (truncation_radius <= 0.0)
        throw horizon_error("area_estimate: basepoint too close to the horizon");
      return c;
    }
    return make_classifier(metric, set, basepoint,
                           max_corner_distance(metric, basepoint, window), tol);
  }();

  if (!hyperbolic) {
    // Probe the window boundary ring: the zone must not leak through it.
    const std::size_t ring = 4096;
    for (std::size_t i = 0; i < ring; ++i) {
      double f = static_cast<double>(i) / static_cast<double>(ring);
      double peri = f * 2.0 * (window.width() + window.height());
      Point2 p;
      if (peri < window.width())
        p = {window.x_min + peri, window.y_min};
      else if ((peri -= window.width()) < window.height())
        p = {window.x_max, window.y_min + peri};
      else if ((peri -= window.height()) < window.width())
        p = {window.x_max - peri, window.y_max};
      else
        p = {window.x_min, window.y_max - (peri - window.width())};
      if (cls.run(p).in_closed_zone(n))
        throw window_too_small_error("area_estimate: zone reaches the window boundary");
    }
  }

  // Samples are drawn uniformly with respect to the intrinsic area measure of
  // the sampling region, so every sample carries the same weight and the
  // estimate is a plain hit fraction with a binomial standard error. For the
  // disk metric the region is the truncation ball itself: geodesic polar
  // coordinates around the basepoint give sinh(rho) = sinh(T) sqrt(u), and a
  // disk isometry moves the origin-centred draw to the basepoint.
  double region_area;
  double sinh_trunc = 0.0;
  std::complex<double> center{basepoint.x, basepoint.y};
  if (hyperbolic) {
    sinh_trunc = std::sinh(truncation_radius);
    region_area = M_PI * sinh_trunc * sinh_trunc;
  } else {
    region_area = window.area();
  }

  // Block-structured accumulation with per-block substreams: the merged sums
  // do not depend on how blocks would be scheduled across workers.
  const std::size_t block_size = 65536;
  std::size_t hits = 0, done = 0, block = 0;
  while (done < samples) {
    std::size_t count = std::min(block_size, samples - done);
    SplitMix64 rng = substream(seed, block);
    std::size_t block_hits = 0;
    for (std::size_t i = 0; i < count; ++i) {
      Point2 x;
      if (hyperbolic) {
        double rho = std::asinh(sinh_trunc * std::sqrt(rng.next_double()));
        double theta = rng.uniform(0.0, 2.0 * M_PI);
        std::complex<double> z0 = std::tanh(rho) *
            std::complex<double>(std::cos(theta), std::sin(theta));
        std::complex<double> z = (z0 + center) / (1.0 + std::conj(center) * z0);
        x = {z.real(), z.imag()};
      } else {
        x = {rng.uniform(window.x_min, window.x_max),
             rng.uniform(window.y_min, window.y_max)};
      }
      if (cls.run(x).in_closed_zone(n)) ++block_hits;
    }
    hits += block_hits;
    done += count;
    ++block;
  }

  double N = static_cast<double>(samples);
  double p = static_cast<double>(hits) / N;
  AreaEstimate est;
  est.area = region_area * p;
  est.std_error = region_area * std::sqrt(p * (1.0 - p) / N);
  est.samples = samples;
  return est;
}

}  // namespace brillouin
