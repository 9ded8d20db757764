#include "brillouin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

#include "brillouin/errors.hpp"
#include "brillouin/rng.hpp"
#include "brillouin/zones.hpp"

namespace brillouin {

namespace {

std::string format_point(Point2 p) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "(%.12g, %.12g)", p.x, p.y);
  return buf;
}

// Per-sample zone membership over every candidate basepoint. The members that
// can own the sample at index n all sit within the n-th neighbor distance, so
// one sorted neighbor list answers the membership test for all of them.
struct SampleAnalysis {
  std::size_t closed = 0;        // basepoints with x in the closed zone
  std::size_t open = 0;          // basepoints with x in the open zone
  bool near_boundary = false;    // within wide_band of some circle tie
};

SampleAnalysis analyze_sample(const Metric& metric, const PointSet& set,
                              Point2 x, std::size_t n, double tol,
                              double wide_band) {
  std::size_t want = n + 16;
  std::vector<Neighbor> nns;
  for (;;) {
    nns = nearest_sorted(set, metric, x, want);
    if (nns.size() < n)
      throw std::invalid_argument("analyze_sample: set smaller than zone index");
    double d_n = nns[n - 1].dist;
    double margin = 2.0 * (tol * (1.0 + d_n) + wide_band) + 1e-12;
    if (nns.size() == want && nns.back().dist <= d_n + margin) {
      if (want > 4096)
        throw std::runtime_error("analyze_sample: unresolvable tie cluster");
      want *= 2;
      continue;
    }
    break;
  }

  SampleAnalysis out;
  double d_n = nns[n - 1].dist;
  double cand_limit = d_n + tol * (1.0 + d_n) + wide_band;
  for (const Neighbor& cand : nns) {
    if (cand.dist > cand_limit) break;
    double r = cand.dist;
    double band = tol * (1.0 + r);
    std::size_t m = 0, ell = 0, ell_wide = 0;
    for (const Neighbor& other : nns) {
      double d = other.dist;
      if (d < r - band) ++m;
      else if (d <= r + band) ++ell;
      if (wide_band > 0.0 && std::abs(d - r) <= wide_band) ++ell_wide;
      if (d > r + band && d > r + wide_band) break;
    }
    if (ell_wide >= 2) out.near_boundary = true;
    if (m + 1 <= n && n <= m + ell) ++out.closed;
    if (ell == 1 && m + 1 == n) ++out.open;
  }
  return out;
}

Point2 draw_sample(SplitMix64& rng, Window region, bool hyperbolic) {
  for (;;) {
    Point2 x{rng.uniform(region.x_min, region.x_max),
             rng.uniform(region.y_min, region.y_max)};
    if (!hyperbolic || euclid_norm_sq(x) < 1.0) return x;
  }
}

}  // namespace

std::string VerificationReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["check_name"] = check_name;
  j["passed"] = passed;
  j["statistic"] = statistic;
  j["threshold"] = threshold;
  j["samples"] = samples;
  j["seed"] = seed;
  j["details"] = details;
  return indent > 0 ? j.dump(indent) : j.dump();
}

VerificationReport check_tiling(const Metric& metric, const PointSet& set,
                                std::size_t n, Window region,
                                std::size_t samples, std::uint64_t seed,
                                double tol) {
  if (n == 0) throw std::invalid_argument("check_tiling: zone index starts at 1");
  bool hyperbolic = metric.kind() == MetricKind::hyperbolic_disk;
  SplitMix64 rng = substream(seed, 0);
  VerificationReport report;
  report.check_name = "tiling";
  report.threshold = 0.0;
  report.samples = samples;
  report.seed = seed;

  std::size_t violations = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    Point2 x = draw_sample(rng, region, hyperbolic);
    SampleAnalysis a = analyze_sample(metric, set, x, n, tol, 0.0);
    if (a.closed < 1 || a.open > 1) {
      ++violations;
      if (report.details.size() < 10) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "x=%s closed=%zu open=%zu",
                      format_point(x).c_str(), a.closed, a.open);
        report.details.push_back(buf);
      }
    }
  }
  report.statistic = static_cast<double>(violations);
  report.passed = violations == 0;
  return report;
}

VerificationReport check_equal_area(const Metric& metric, const PointSet& set,
                                    Point2 basepoint,
                                    const std::vector<std::size_t>& n_list,
                                    std::size_t samples, std::uint64_t seed,
                                    double tol) {
  if (n_list.empty())
    throw std::invalid_argument("check_equal_area: empty index list");
  bool hyperbolic = metric.kind() == MetricKind::hyperbolic_disk;

  VerificationReport report;
  report.check_name = "equal_area";
  report.threshold = 3.0;
  report.samples = samples;
  report.seed = seed;

  std::vector<AreaEstimate> est(n_list.size());
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    std::uint64_t sub = substream(seed, 1 + i).next();
    if (hyperbolic) {
      double d0 = distance(metric, {0.0, 0.0}, basepoint);
      double trunc = (set.orbit_horizon() - d0) / 2.0;
      if (trunc <= 0.0)
        throw horizon_error("check_equal_area: basepoint too close to the horizon");
      double half = std::min(1.0, std::tanh(trunc) + 1e-3);
      est[i] = area_estimate(metric, set, basepoint, n_list[i],
                             square_window(half), samples, sub, tol);
    } else {
      double half = 2.0;
      for (int attempt = 0;; ++attempt) {
        try {
          est[i] = area_estimate(metric, set, basepoint, n_list[i],
                                 square_window(half), samples, sub, tol);
          break;
        } catch (const window_too_small_error&) {
          if (attempt >= 24) throw;
          half *= 1.3;
        }
      }
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "n=%zu area=%.6f se=%.6f", n_list[i],
                  est[i].area, est[i].std_error);
    if (report.details.size() < 10) report.details.push_back(buf);
  }

  double max_z = 0.0;
  for (std::size_t i = 0; i < est.size(); ++i) {
    for (std::size_t j = i + 1; j < est.size(); ++j) {
      double se = std::sqrt(est[i].std_error * est[i].std_error +
                            est[j].std_error * est[j].std_error);
      double z = se > 0.0 ? std::abs(est[i].area - est[j].area) / se
                          : (est[i].area == est[j].area ? 0.0 : 1e9);
      max_z = std::max(max_z, z);
    }
  }
  report.statistic = max_z;
  report.passed = max_z < report.threshold;
  return report;
}

VerificationReport check_fundamental_domain(const Metric& metric,
                                            const PointSet& set,
                                            Point2 basepoint, std::size_t n,
                                            Window region, std::size_t samples,
                                            std::uint64_t seed, double tol) {
  if (n == 0)
    throw std::invalid_argument("check_fundamental_domain: zone index starts at 1");
  if (basepoint.x != 0.0 || basepoint.y != 0.0)
    throw std::invalid_argument(
        "check_fundamental_domain: isometries are enumerated around the origin");
  if (set.kind() == PointSetKind::cross_set)
    throw std::invalid_argument(
        "check_fundamental_domain: the cross set has no transitive isometries");
  // Every isometry carrying the set to itself and relevant near the sample
  // corresponds to one member v (g^-1(0) = v), so g(x) in b_n(0) iff
  // x in b_n(v). The count of owning members is the count of isometries.
  bool hyperbolic = metric.kind() == MetricKind::hyperbolic_disk;
  double wide = 1e-6 * region.diagonal();

  SplitMix64 rng = substream(seed, 0);
  VerificationReport report;
  report.check_name = "fundamental_domain";
  report.threshold = 0.995;
  report.samples = samples;
  report.seed = seed;

  std::size_t kept = 0, exactly_one = 0, discarded = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    Point2 x = draw_sample(rng, region, hyperbolic);
    SampleAnalysis a = analyze_sample(metric, set, x, n, tol, wide);
    if (a.near_boundary) {
      ++discarded;
      continue;
    }
    ++kept;
    if (a.open == 1) ++exactly_one;
    else if (report.details.size() < 10) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "x=%s open_count=%zu",
                    format_point(x).c_str(), a.open);
      report.details.push_back(buf);
    }
  }
  if (discarded * 5 > samples)
    throw inconclusive_error(
        "check_fundamental_domain: too many samples near zone boundaries");
  report.statistic =
      kept > 0 ? static_cast<double>(exactly_one) / static_cast<double>(kept) : 0.0;
  report.passed = kept > 0 && report.statistic >= report.threshold;
  return report;
}

VerificationReport check_boundary_measure(const Metric& metric,
                                          const PointSet& set, Point2 basepoint,
                                          const std::vector<std::size_t>& resolutions,
                                          Window window, double tol) {
  if (resolutions.size() < 2)
    throw std::invalid_argument("check_boundary_measure: need at least 2 resolutions");

  VerificationReport report;
  report.check_name = "boundary_measure";
  report.threshold = 0.8;
  report.seed = 0;

  std::vector<double> log_res, log_frac;
  for (std::size_t res : resolutions) {
    ZoneRaster zr = raster(metric, set, basepoint, window, res, res, tol);
    std::size_t boundary = 0, valid = 0;
    for (std::size_t idx = 0; idx < zr.boundary.size(); ++idx) {
      bool sentinel = zr.zone_index[idx] == 0 && zr.boundary[idx] == 0;
      if (metric.kind() == MetricKind::hyperbolic_disk && sentinel) continue;
      ++valid;
      if (zr.boundary[idx]) ++boundary;
    }
    report.samples += valid;
    double frac = valid > 0 ? static_cast<double>(boundary) / valid : 0.0;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "resolution=%zu boundary_fraction=%.3e",
                  res, frac);
    if (report.details.size() < 10) report.details.push_back(buf);
    if (frac > 0.0) {
      log_res.push_back(std::log(static_cast<double>(res)));
      log_frac.push_back(std::log(frac));
    }
  }

  if (log_res.size() < 2) {
    // Nothing on, or almost nothing on, the boundary at any scale: decays
    // faster than any power.
    report.statistic = 99.0;
    report.passed = true;
    return report;
  }

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < log_res.size(); ++i) {
    mx += log_res[i];
    my += log_frac[i];
  }
  mx /= log_res.size();
  my /= log_res.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < log_res.size(); ++i) {
    sxy += (log_res[i] - mx) * (log_frac[i] - my);
    sxx += (log_res[i] - mx) * (log_res[i] - mx);
  }
  double alpha = sxx > 0.0 ? -sxy / sxx : 0.0;
  report.statistic = alpha;
  report.passed = alpha >= report.threshold;
  return report;
}

VerificationReport check_consistency_sweep(const Metric& metric, Window region,
                                           std::size_t configs,
                                           std::size_t probes_per_config,
                                           std::uint64_t seed) {
  bool hyperbolic = metric.kind() == MetricKind::hyperbolic_disk;
  SplitMix64 rng = substream(seed, 0);
  VerificationReport report;
  report.check_name = "consistency";
  report.threshold = 0.0;
  report.samples = configs * probes_per_config;
  report.seed = seed;

  double scale = 0.25 * std::min(region.width(), region.height());
  std::size_t violations = 0;
  for (std::size_t i = 0; i < configs; ++i) {
    Point2 x = draw_sample(rng, region, hyperbolic);
    double big_r = scale * (0.2 + 0.8 * rng.next_double());
    double small_r = big_r * (0.05 + 0.9 * rng.next_double());
    double theta = rng.uniform(0.0, 2.0 * M_PI);
    Point2 a = point_at_distance(metric, x, theta, big_r);
    std::uint64_t sub = substream(seed, 1 + i).next();
    if (!check_metric_consistency(metric, x, big_r, small_r, a,
                                  probes_per_config, sub)) {
      ++violations;
      if (report.details.size() < 10) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "x=%s R=%.6g r=%.6g theta=%.6g",
                      format_point(x).c_str(), big_r, small_r, theta);
        report.details.push_back(buf);
      }
    }
  }
  report.statistic = static_cast<double>(violations);
  report.passed = violations == 0;
  return report;
}

}  // namespace brillouin
