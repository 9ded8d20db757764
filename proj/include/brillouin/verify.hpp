#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brillouin/geometry.hpp"
#include "brillouin/metric.hpp"
#include "brillouin/pointset.hpp"

namespace brillouin {

struct VerificationReport {
  std::string check_name;
  bool passed = false;
  double statistic = 0.0;  // the quantity compared against threshold
  double threshold = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> details;  // counterexamples / notes, at most 10

  // JSON object with lower_snake_case keys, stable across runs.
  std::string to_json(int indent = 2) const;
};

// Randomized tiling check for zone index n over a sampling region:
// every sample lies in at least one closed zone B_n(s) and in at most one
// open zone b_n(s), over basepoints s in the set. statistic = violation count,
// threshold = 0. For the hyperbolic metric, samples outside the unit disk are
// rejected and resampled.
VerificationReport check_tiling(const Metric& metric, const PointSet& set,
                                std::size_t n, Window region,
                                std::size_t samples, std::uint64_t seed,
                                double tol = kDefaultTol);

// Monte Carlo equal-area check across zone indices n_list at a common
// basepoint. Each index gets an independent area_estimate; statistic is the
// maximum pairwise z-score, threshold 3.
VerificationReport check_equal_area(const Metric& metric, const PointSet& set,
                                    Point2 basepoint,
                                    const std::vector<std::size_t>& n_list,
                                    std::size_t samples, std::uint64_t seed,
                                    double tol = kDefaultTol);

// Fundamental-domain check: for samples x drawn from the region, exactly one
// enumerated isometry g of the set satisfies g(x) in b_n(basepoint). Samples
// within 1e-6 * window diagonal of a zone boundary are discarded;
// inconclusive_error is thrown if more than 20% get discarded. statistic is
// the exactly-one fraction among kept samples, threshold 0.995. The basepoint
// must be the origin (the sets' isometries are enumerated around it).
VerificationReport check_fundamental_domain(const Metric& metric,
                                            const PointSet& set,
                                            Point2 basepoint, std::size_t n,
                                            Window region, std::size_t samples,
                                            std::uint64_t seed,
                                            double tol = kDefaultTol);

// Boundary-cell scaling probe: rasters the window at each resolution, records
// the boundary-cell fraction, and fits the decay exponent alpha in
// fraction ~ resolution^-alpha. Passes iff alpha >= 0.8 (an all-zero fraction
// sequence passes trivially). A set/metric pair whose mediatrices have
// positive area keeps the fraction roughly constant and fails.
VerificationReport check_boundary_measure(const Metric& metric,
                                          const PointSet& set, Point2 basepoint,
                                          const std::vector<std::size_t>& resolutions,
                                          Window window,
                                          double tol = kDefaultTol);

// Randomized sweep of the nested-circles consistency probe over
// configurations (x, R, r, a) in the region. statistic = violation count.
VerificationReport check_consistency_sweep(const Metric& metric, Window region,
                                           std::size_t configs,
                                           std::size_t probes_per_config,
                                           std::uint64_t seed);

}  // namespace brillouin
