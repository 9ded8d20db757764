#include "brillouin/metric.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "brillouin/rng.hpp"

namespace brillouin {

Metric Metric::lk(double exponent) {
  if (!(exponent >= 1.0) || !std::isfinite(exponent))
    throw std::invalid_argument("lk metric needs a finite exponent >= 1");
  return Metric(MetricKind::lk_norm, exponent);
}

Metric Metric::hyperbolic() { return Metric(MetricKind::hyperbolic_disk, 0.0); }

namespace {

// |v|^k with the common exponents special-cased; k is a double but integer
// values get exact repeated multiplication.
inline double pow_abs(double v, double k) {
  double a = std::fabs(v);
  if (k == 1.0) return a;
  if (k == 2.0) return a * a;
  if (k == 4.0) {
    double s = a * a;
    return s * s;
  }
  double ki;
  if (std::modf(k, &ki) == 0.0 && k <= 64.0) {
    double r = 1.0;
    for (int i = 0; i < int(ki); ++i) r *= a;
    return r;
  }
  return std::pow(a, k);
}

inline double lk_power_sum(double k, double dx, double dy) {
  return pow_abs(dx, k) + pow_abs(dy, k);
}

inline double lk_root(double k, double s) {
  if (k == 1.0) return s;
  if (k == 2.0) return std::sqrt(s);
  if (k == 4.0) return std::sqrt(std::sqrt(s));
  return std::pow(s, 1.0 / k);
}

inline void require_in_disk(Point2 p) {
  if (euclid_norm_sq(p) >= 1.0)
    throw std::domain_error("hyperbolic point outside the open unit disk");
}

// Squared modulus of the Moebius quotient (a - b) / (1 - conj(b) a).
// d(a, b) = arctanh(sqrt(of this)).
inline double mobius_quotient_sq(Point2 a, Point2 b) {
  double dx = a.x - b.x, dy = a.y - b.y;
  double num = dx * dx + dy * dy;
  // conj(b) * a = (b.x*a.x + b.y*a.y) + i (b.x*a.y - b.y*a.x)
  double re = 1.0 - (b.x * a.x + b.y * a.y);
  double im = -(b.x * a.y - b.y * a.x);
  double den = re * re + im * im;
  return num / den;
}

}  // namespace

double distance(const Metric& metric, Point2 a, Point2 b) {
  if (metric.kind() == MetricKind::lk_norm) {
    double k = metric.exponent();
    return lk_root(k, lk_power_sum(k, a.x - b.x, a.y - b.y));
  }
  require_in_disk(a);
  require_in_disk(b);
  return std::atanh(std::sqrt(mobius_quotient_sq(a, b)));
}

BallCounts ball_counts(const Metric& metric, Point2 center, double radius,
                       std::span<const Point2> points, double tol) {
  if (!(radius >= 0.0)) throw std::invalid_argument("ball_counts: negative radius");
  if (!(tol >= 0.0)) throw std::invalid_argument("ball_counts: negative tolerance");
  double band = tol * (1.0 + radius);
  double lo = radius - band;  // inside means d < lo; on means lo <= d <= hi
  double hi = radius + band;

  BallCounts out;
  if (metric.kind() == MetricKind::lk_norm) {
    // Compare k-th power sums against transformed thresholds; x -> x^k is
    // strictly monotone so the classification is the same as on distances.
    double k = metric.exponent();
    double lo_p = lo > 0.0 ? pow_abs(lo, k) : 0.0;
    double hi_p = pow_abs(hi, k);
    bool lo_positive = lo > 0.0;
    for (const Point2& p : points) {
      double s = lk_power_sum(k, p.x - center.x, p.y - center.y);
      if (lo_positive && s < lo_p)
        ++out.inside;
      else if (s <= hi_p)
        ++out.on_circle;
    }
  } else {
    require_in_disk(center);
    double lo_t = 0.0;
    bool lo_positive = lo > 0.0;
    if (lo_positive) {
      double t = std::tanh(lo);
      lo_t = t * t;
    }
    double th = std::tanh(hi);
    double hi_t = th * th;
    for (const Point2& p : points) {
      double u = mobius_quotient_sq(p, center);
      if (lo_positive && u < lo_t)
        ++out.inside;
      else if (u <= hi_t)
        ++out.on_circle;
    }
  }
  return out;
}

namespace {

// Moebius transport sending x to the origin and back.
inline std::complex<double> to_origin(std::complex<double> x, std::complex<double> z) {
  return (z - x) / (1.0 - std::conj(x) * z);
}
inline std::complex<double> from_origin(std::complex<double> x, std::complex<double> w) {
  return (w + x) / (1.0 + std::conj(x) * w);
}

}  // namespace

Point2 segment_point(const Metric& metric, Point2 x, Point2 a, double r) {
  double d = distance(metric, x, a);
  if (!(r >= 0.0) || r > d * (1.0 + 1e-12) + 1e-15)
    throw std::invalid_argument("segment_point: r outside [0, d(x,a)]");
  if (r == 0.0) return x;

  if (metric.kind() == MetricKind::hyperbolic_disk) {
    // Transport x to the origin; the geodesic becomes a straight ray and the
    // point at distance r sits at tanh(r) along it.
    std::complex<double> xc = to_complex(x);
    std::complex<double> ap = to_origin(xc, to_complex(a));
    double na = std::abs(ap);
    std::complex<double> w = (std::tanh(r) / na) * ap;
    return from_complex(from_origin(xc, w));
  }

  // Lk: d(x, x + t(a-x)) is strictly increasing in t; solve by bisection.
  Point2 dir = a - x;
  double t_lo = 0.0, t_hi = 1.0;
  for (int i = 0; i < 80; ++i) {
    double t = 0.5 * (t_lo + t_hi);
    double dt = distance(metric, x, x + t * dir);
    if (dt < r)
      t_lo = t;
    else
      t_hi = t;
  }
  return x + 0.5 * (t_lo + t_hi) * dir;
}

Point2 point_at_distance(const Metric& metric, Point2 x, double theta, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("point_at_distance: negative r");
  double cx = std::cos(theta), sy = std::sin(theta);
  if (metric.kind() == MetricKind::lk_norm) {
    // Scale the Euclidean direction so its Lk norm is exactly r.
    double k = metric.exponent();
    double unit = lk_root(k, lk_power_sum(k, cx, sy));
    return {x.x + r * cx / unit, x.y + r * sy / unit};
  }
  require_in_disk(x);
  std::complex<double> w = std::tanh(r) * std::complex<double>(cx, sy);
  return from_complex(from_origin(to_complex(x), w));
}

bool check_metric_consistency(const Metric& metric, Point2 x, double big_r,
                              double small_r, Point2 a, std::size_t n_samples,
                              std::uint64_t seed) {
  if (!(small_r > 0.0) || !(small_r < big_r))
    throw std::invalid_argument("check_metric_consistency: need 0 < r < R");
  double da = distance(metric, x, a);
  if (std::fabs(da - big_r) > 1e-9 * (1.0 + big_r))
    throw std::invalid_argument("check_metric_consistency: d(x,a) != R");

  Point2 z = segment_point(metric, x, a, small_r);
  double rz = distance(metric, z, a);

  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < n_samples; ++i) {
    Point2 w;
    if (metric.kind() == MetricKind::lk_norm) {
      w = {rng.uniform(x.x - big_r, x.x + big_r), rng.uniform(x.y - big_r, x.y + big_r)};
    } else {
      // Probe inside the disk near x; the Euclidean radius of the hyperbolic
      // ball around x is below tanh(big_r) after transport, so a rejection
      // window of that size suffices.
      double span = std::tanh(big_r);
      do {
        w = {rng.uniform(x.x - span, x.x + span), rng.uniform(x.y - span, x.y + span)};
      } while (euclid_norm_sq(w) >= 1.0);
    }
    if (distance(metric, z, w) < rz && !(distance(metric, x, w) < big_r)) return false;
  }
  return true;
}

}  // namespace brillouin
