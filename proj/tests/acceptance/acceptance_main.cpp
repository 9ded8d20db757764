// Acceptance gate: every criterion prints one PASS/FAIL line with its timing.
// The process exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "brillouin/counting.hpp"
#include "brillouin/errors.hpp"
#include "brillouin/fuchsian.hpp"
#include "brillouin/mediatrix.hpp"
#include "brillouin/metric.hpp"
#include "brillouin/pointset.hpp"
#include "brillouin/verify.hpp"
#include "brillouin/zones.hpp"

using namespace brillouin;

namespace {

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof(buf), f, args);
  va_end(args);
  return buf;
}

// ---------------------------------------------------------------------------
// 1: representation counts by two squares
// ---------------------------------------------------------------------------

std::string criterion_two_squares() {
  for (std::int64_t n = 0; n <= 100000; ++n) {
    if (r2_formula(n) != r2_bruteforce(n))
      return fmt("mismatch at n=%lld: formula %lld, enumeration %lld",
                 (long long)n, (long long)r2_formula(n),
                 (long long)r2_bruteforce(n));
  }
  return "";
}

// ---------------------------------------------------------------------------
// 2: torus refocusing counts
// ---------------------------------------------------------------------------

std::string criterion_torus() {
  for (std::int64_t n = 0; n <= 10000; ++n) {
    if (torus_focusing({n, 1}) != r2_formula(n))
      return fmt("integer t^2=%lld disagrees with the representation count",
                 (long long)n);
  }
  for (std::int64_t den = 2; den <= 7; ++den) {
    for (std::int64_t num = 1; num <= 300; ++num) {
      if (num % den == 0) continue;
      if (torus_focusing({num, den}) != 0)
        return fmt("fractional t^2=%lld/%lld should have no refocusing",
                   (long long)num, (long long)den);
    }
  }
  if (torus_focusing({-50, -2}) != 12) return "sign normalization of -50/-2 broke";
  if (torus_focusing({0, 3}) != 1) return "t^2=0 should count the trivial geodesic";
  return "";
}

// ---------------------------------------------------------------------------
// 3: orbit focusing counts at levels 2, 3, 5
// ---------------------------------------------------------------------------

std::string criterion_focusing_formula() {
  if (gamma_focusing_formula(2, 1) != 4) return "level 2 circle n=1 should hold 4 points";
  if (gamma_focusing_formula(3, 9) != 8) return "level 3 circle n=9 should hold 8 points";
  if (gamma_focusing_formula(5, 25) != 8) return "level 5 circle n=25 should hold 8 points";
  for (std::int64_t k : {2, 3, 5}) {
    for (std::int64_t n = 0; n <= 2000; ++n) {
      std::int64_t f = gamma_focusing_formula(k, n);
      std::int64_t b = gamma_focusing_bruteforce(k, n);
      if (f != b)
        return fmt("k=%lld n=%lld: formula %lld, enumeration %lld", (long long)k,
                   (long long)n, (long long)f, (long long)b);
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// 4: the bound dominates at higher prime levels and is attained at 3 and 5
// ---------------------------------------------------------------------------

std::string criterion_focusing_bound() {
  for (std::int64_t k : {7, 11}) {
    for (std::int64_t n = 0; n <= 2000; ++n) {
      if (gamma_focusing_bruteforce(k, n) > gamma_focusing_bound(k, n))
        return fmt("k=%lld n=%lld exceeds the bound", (long long)k, (long long)n);
    }
  }
  for (std::int64_t k : {3, 5}) {
    for (std::int64_t n = 0; n <= 2000; ++n) {
      if (gamma_focusing_bound(k, n) != gamma_focusing_formula(k, n))
        return fmt("bound not attained at k=%lld n=%lld", (long long)k, (long long)n);
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// 5: rotation structure of the literal quadruple solutions
// ---------------------------------------------------------------------------

bool congruent_level(const Quadruple& g, std::int64_t k) {
  auto md = [k](std::int64_t v) {
    std::int64_t m = v % k;
    return m < 0 ? m + k : m;
  };
  return md(g.r + g.p) == 1 && md(g.r - g.p) == 1 && md(g.s + g.q) == 0 &&
         md(g.s - g.q) == 0;
}

std::string criterion_rotation_orbits() {
  for (std::int64_t n = 1; n <= 2000; ++n) {
    auto all = solve_quadruples_unconstrained(n);
    if ((std::int64_t)all.size() != r2_formula(n) * r2_formula(n + 1))
      return fmt("n=%lld: solution count is not the product of representation counts",
                 (long long)n);
    if (all.empty()) continue;

    std::map<Quadruple, std::vector<Quadruple>, std::less<Quadruple>> orbits;
    for (const Quadruple& g : all) orbits[canonicalize(g)].push_back(g);
    if (orbits.size() * 4 != all.size())
      return fmt("n=%lld: orbits do not partition into fours", (long long)n);

    std::map<std::int64_t, std::size_t> totals;
    for (const auto& [canon, members] : orbits) {
      if (members.size() != 4)
        return fmt("n=%lld: an orbit has %zu members", (long long)n, members.size());
      std::set<Quadruple> uniq(members.begin(), members.end());
      if (uniq.size() != 4) return fmt("n=%lld: repeated orbit member", (long long)n);
      for (const Quadruple& g : members)
        if (canonicalize(g) != canon)
          return fmt("n=%lld: canonical form not orbit constant", (long long)n);

      for (std::int64_t k : {2, 3, 5, 7}) {
        std::vector<Quadruple> cong;
        for (const Quadruple& g : members)
          if (congruent_level(g, k)) cong.push_back(g);
        totals[k] += cong.size();
        if (k == 2) {
          if (cong.size() != 0 && cong.size() != 2)
            return fmt("n=%lld: level 2 hits %zu of 4 rotations", (long long)n,
                       cong.size());
          if (cong.size() == 2) {
            Quadruple neg{-cong[0].p, -cong[0].q, -cong[0].r, -cong[0].s};
            if (!(cong[1] == neg))
              return fmt("n=%lld: level 2 pair is not a sign pair", (long long)n);
          }
        } else if (cong.size() > 1) {
          return fmt("n=%lld: level %lld hits %zu of 4 rotations", (long long)n,
                     (long long)k, cong.size());
        }
      }
    }
    for (std::int64_t k : {2, 3, 5, 7}) {
      std::size_t expect = solve_quadruples(n, k).size() * (k == 2 ? 2 : 1);
      if (totals[k] != expect)
        return fmt("n=%lld level %lld: %zu congruent rotations, solver says %zu",
                   (long long)n, (long long)k, totals[k], expect);
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// 6: closed zones cover, open zones are disjoint
// ---------------------------------------------------------------------------

std::string criterion_tiling() {
  struct Combo {
    Metric metric;
    PointSet set;
    Window region;
    const char* name;
  };
  std::vector<Combo> combos;
  combos.push_back({Metric::euclidean(), PointSet::square_lattice(),
                    square_window(3.0), "square/euclidean"});
  combos.push_back({Metric::lk(4.0), PointSet::square_lattice(),
                    square_window(3.0), "square/quartic"});
  combos.push_back({Metric::euclidean(), PointSet::irrational_lattice(),
                    square_window(3.0), "irrational/euclidean"});
  combos.push_back({Metric::lk(4.0), PointSet::irrational_lattice(),
                    square_window(3.0), "irrational/quartic"});
  combos.push_back({Metric::euclidean(), PointSet::cross_set(),
                    square_window(3.0), "cross/euclidean"});
  combos.push_back({Metric::lk(4.0), PointSet::cross_set(), square_window(3.0),
                    "cross/quartic"});
  combos.push_back({Metric::manhattan(), PointSet::irrational_lattice(),
                    square_window(3.0), "irrational/manhattan"});
  combos.push_back({Metric::hyperbolic(), PointSet::gamma_orbit(2, 1000),
                    square_window(0.5), "orbit/hyperbolic"});

  std::uint64_t seed = 601;
  for (const Combo& c : combos) {
    for (std::size_t n : {1, 2, 3}) {
      VerificationReport r =
          check_tiling(c.metric, c.set, n, c.region, 100000, seed++);
      if (!r.passed)
        return fmt("%s n=%zu: %.0f violations (first: %s)", c.name, n, r.statistic,
                   r.details.empty() ? "none recorded" : r.details[0].c_str());
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// 7: equal zone areas under a transitive group, inequality without one
// ---------------------------------------------------------------------------

std::string criterion_equal_area() {
  Metric l2 = Metric::euclidean();
  PointSet z2 = PointSet::square_lattice();
  std::vector<AreaEstimate> est;
  for (std::size_t n = 1; n <= 6; ++n) {
    est.push_back(area_estimate(l2, z2, {0, 0}, n, square_window(4.0), 1000000,
                                100 + n));
    if (std::abs(est.back().area - 1.0) > 0.02)
      return fmt("square lattice zone %zu area %.4f is off unit", n,
                 est.back().area);
  }
  for (std::size_t i = 0; i < est.size(); ++i) {
    for (std::size_t j = i + 1; j < est.size(); ++j) {
      double se = std::sqrt(est[i].std_error * est[i].std_error +
                            est[j].std_error * est[j].std_error);
      double z = std::abs(est[i].area - est[j].area) / se;
      if (z >= 3.0)
        return fmt("square lattice zones %zu and %zu differ at z=%.2f", i + 1,
                   j + 1, z);
    }
  }

  VerificationReport hyp = check_equal_area(
      Metric::hyperbolic(), PointSet::gamma_orbit(2, 30000), {0, 0}, {1, 2, 3},
      200000, 77);
  if (!hyp.passed)
    return fmt("hyperbolic orbit zones spread to z=%.2f", hyp.statistic);

  VerificationReport cross = check_equal_area(
      l2, PointSet::cross_set(), {0, 0}, {1, 2}, 1000000, 78);
  if (cross.passed)
    return fmt("cross set zones looked equal (z=%.2f) but must not", cross.statistic);
  return "";
}

// ---------------------------------------------------------------------------
// 8: each point is claimed by exactly one symmetry of the set
// ---------------------------------------------------------------------------

std::string criterion_fundamental_domain() {
  for (std::size_t n : {1, 2, 3}) {
    VerificationReport r =
        check_fundamental_domain(Metric::euclidean(), PointSet::square_lattice(),
                                 {0, 0}, n, square_window(2.0), 10000, 810 + n);
    if (!r.passed)
      return fmt("square lattice n=%zu: unique fraction %.5f", n, r.statistic);
  }
  VerificationReport h = check_fundamental_domain(
      Metric::hyperbolic(), PointSet::gamma_orbit(2, 1000), {0, 0}, 1,
      square_window(0.45), 10000, 814);
  if (!h.passed)
    return fmt("hyperbolic orbit: unique fraction %.5f", h.statistic);
  return "";
}

// ---------------------------------------------------------------------------
// 9: boundaries are thin and separate consecutive indices
// ---------------------------------------------------------------------------

std::string criterion_boundary_structure() {
  Metric l2 = Metric::euclidean();
  PointSet z2 = PointSet::square_lattice();
  Window w = square_window(3.0);
  ZoneRaster zr = raster(l2, z2, {0, 0}, w, 1200, 1200);

  std::size_t boundary_cells = 0, interior_checked = 0, sandwiched = 0;
  for (std::size_t j = 0; j < zr.height; ++j) {
    for (std::size_t i = 0; i < zr.width; ++i) {
      if (!zr.boundary_at(i, j)) continue;
      ++boundary_cells;
      if (i == 0 || j == 0 || i + 1 == zr.width || j + 1 == zr.height) continue;
      ++interior_checked;
      ZoneClassification c = classify(l2, z2, {0, 0}, zr.cell_center(i, j));
      bool low = false, high = false;
      for (int dj = -1; dj <= 1; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          if (di == 0 && dj == 0) continue;
          std::size_t ni = i + di, nj = j + dj;
          if (zr.boundary_at(ni, nj)) continue;
          std::size_t idx = zr.at(ni, nj);
          if (idx == c.m + 1) low = true;
          if (idx == c.m + c.ell) high = true;
        }
      }
      if (low && high) ++sandwiched;
    }
  }
  if (boundary_cells < 100)
    return fmt("only %zu boundary cells at this resolution", boundary_cells);
  double frac = (double)sandwiched / (double)interior_checked;
  if (frac < 0.99)
    return fmt("only %.2f%% of %zu boundary cells sit between their indices",
               100.0 * frac, interior_checked);

  // rays: refine every index jump and look at the crossing itself
  std::size_t jumps = 0, clean = 0;
  for (int d = 0; d < 360; ++d) {
    double theta = 0.0137 + 2.0 * M_PI * d / 360.0;
    Point2 dir{std::cos(theta), std::sin(theta)};
    auto samples = ray_profile(l2, z2, {0, 0}, dir, 3.0, 1000);
    for (std::size_t s = 1; s < samples.size(); ++s) {
      const RaySample& a = samples[s - 1];
      const RaySample& b = samples[s];
      if (a.boundary || b.boundary) continue;
      if (b.zone_index <= a.zone_index) {
        if (b.zone_index < a.zone_index)
          return fmt("zone index dropped along a ray at t=%.6f", b.t);
        continue;
      }
      ++jumps;
      double lo = a.t, hi = b.t;
      for (int it = 0; it < 50; ++it) {
        double mid = 0.5 * (lo + hi);
        ZoneClassification c = classify(l2, z2, {0, 0}, {mid * dir.x, mid * dir.y});
        if (c.zone_index() > a.zone_index && !c.on_boundary()) hi = mid;
        else lo = mid;
      }
      // lo holds the last predicate-false parameter, which after the interval
      // collapses sits inside the tie band; the midpoint may overshoot it
      double t_star = lo;
      ZoneClassification at = classify(l2, z2, {0, 0}, {t_star * dir.x, t_star * dir.y});
      if (!at.on_boundary())
        return fmt("refined crossing at t=%.9f is not on a boundary", t_star);
      if (at.ell == 2 && b.zone_index == a.zone_index + 1 &&
          at.m + 1 == a.zone_index)
        ++clean;
    }
  }
  if (jumps < 360) return fmt("only %zu index jumps across all rays", jumps);
  double clean_frac = (double)clean / (double)jumps;
  if (clean_frac < 0.99)
    return fmt("only %.2f%% of %zu ray crossings are simple steps of one",
               100.0 * clean_frac, jumps);
  return "";
}

// ---------------------------------------------------------------------------
// 10: mediatrix traces and their axis crossings
// ---------------------------------------------------------------------------

double quartic_norm(Point2 v) {
  double x = v.x * v.x, y = v.y * v.y;
  return std::pow(x * x + y * y, 0.25);
}

std::string criterion_traces() {
  // straight euclidean case
  Polyline straight = trace_level_set(Metric::euclidean(), {2, 0}, square_window(5.0));
  for (std::size_t i = 0; i < straight.points.size(); ++i)
    if (std::abs(straight.points[i].x - 1.0) > 1e-6)
      return fmt("euclidean trace wanders to x=%.9f", straight.points[i].x);

  Metric l4 = Metric::lk(4.0);
  struct Case {
    Point2 a;
    std::size_t crossings;
  };
  std::vector<Case> cases{{{1, 0}, 1}, {{1, 1}, 2}, {{2, 1}, 2}, {{3, 2}, 2}};
  bool saw_half = false, saw_irrational = false;
  TraceOptions opt;
  opt.step_size = 2e-4;  // chord error ~h^2/8 keeps axis interpolation near 1e-8
  for (const Case& tc : cases) {
    Polyline p = trace_level_set(l4, tc.a, square_window(4.0), opt);
    for (std::size_t i = 0; i < p.points.size(); ++i)
      if (p.residuals[i] > 1e-8)
        return fmt("trace of (%g, %g) has residual %.3g", tc.a.x, tc.a.y,
                   p.residuals[i]);
    auto ax = axis_intersections(p);
    if (ax.size() != tc.crossings)
      return fmt("trace of (%g, %g) crosses axes %zu times, wanted %zu", tc.a.x,
                 tc.a.y, ax.size(), tc.crossings);
    for (const AxisCrossing& c : ax) {
      // refine the true crossing independently
      auto h = [&](double t) {
        Point2 x = c.axis == 0 ? Point2{t, 0.0} : Point2{0.0, t};
        return quartic_norm(x - tc.a) - quartic_norm(x);
      };
      double lo = c.coordinate - 0.05, hi = c.coordinate + 0.05;
      if ((h(lo) < 0) == (h(hi) < 0))
        return fmt("no sign change near a crossing of (%g, %g)", tc.a.x, tc.a.y);
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        if ((h(mid) < 0) == (h(lo) < 0)) lo = mid;
        else hi = mid;
      }
      double root = 0.5 * (lo + hi);
      if (std::abs(root - c.coordinate) > 1e-6)
        return fmt("crossing %.9f of (%g, %g) is off its root %.9f", c.coordinate,
                   tc.a.x, tc.a.y, root);
      if (c.half_integer_distance <= 1e-6) saw_half = true;
      else if (c.half_integer_distance > 1e-3) saw_irrational = true;
      else
        return fmt("crossing %.9f of (%g, %g) is ambiguously near a half integer",
                   c.coordinate, tc.a.x, tc.a.y);
    }
  }
  if (!saw_half) return "no exact half-integer crossing was seen";
  if (!saw_irrational) return "no clearly irrational crossing was seen";

  try {
    trace_level_set(Metric::euclidean(), {2, 0}, Window{10, 11, 10, 11});
    return "tracing in a window far from the curve should fail to seed";
  } catch (const seed_not_found_error&) {
  }
  return "";
}

// ---------------------------------------------------------------------------
// 11: coincident fourth-power circles
// ---------------------------------------------------------------------------

std::string criterion_coincidences() {
  auto hits = lk_circle_coincidences(4, 200);
  if (hits.empty()) return "no coincidence found up to 200";
  const Coincidence& first = hits.front();
  if (first.value != 635318657)
    return fmt("first coincidence is %lld", (long long)first.value);
  if (first.representations.size() != 2 || first.representations[0].a != 59 ||
      first.representations[0].b != 158 || first.representations[1].a != 133 ||
      first.representations[1].b != 134)
    return "representations of the first coincidence are wrong";
  for (const Coincidence& c : hits) {
    if (c.representations.size() < 2) return "a coincidence lists fewer than 2 pairs";
    for (const PowerPair& pp : c.representations) {
      auto p4 = [](std::int64_t v) { return v * v * v * v; };
      if (p4(pp.a) + p4(pp.b) != c.value) return "a listed pair misses its value";
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// 12: boundary pixel mass scales away only for thin mediatrices
// ---------------------------------------------------------------------------

std::string criterion_boundary_measure() {
  VerificationReport thin = check_boundary_measure(
      Metric::manhattan(), PointSet::irrational_lattice(), {0, 0},
      {300, 600, 1200}, square_window(3.0));
  if (!thin.passed)
    return fmt("irrational rows should pass, alpha=%.3f", thin.statistic);
  VerificationReport fat = check_boundary_measure(
      Metric::manhattan(), PointSet::square_lattice(), {0, 0}, {300, 600, 1200},
      square_window(3.0));
  if (fat.passed)
    return fmt("square lattice should fail, alpha=%.3f", fat.statistic);
  return "";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<std::string()> run;
  };
  std::vector<Criterion> criteria{
      {"two-square counts: formula vs enumeration to 100000", criterion_two_squares},
      {"torus refocusing counts, integer and fractional", criterion_torus},
      {"orbit focusing counts at levels 2/3/5 to 2000", criterion_focusing_formula},
      {"focusing bound dominates at levels 7/11, attained at 3/5", criterion_focusing_bound},
      {"rotation orbits of quadruple solutions to 2000", criterion_rotation_orbits},
      {"zone tiling across 8 metric/set combinations", criterion_tiling},
      {"equal areas under transitivity, unequal without", criterion_equal_area},
      {"fundamental domains claim each point once", criterion_fundamental_domain},
      {"boundaries are thin and separate consecutive indices", criterion_boundary_structure},
      {"mediatrix traces and axis crossings", criterion_traces},
      {"coincident fourth-power circles", criterion_coincidences},
      {"boundary pixel mass scaling", criterion_boundary_measure},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    std::string err;
    try {
      err = criteria[i].run();
    } catch (const std::exception& e) {
      err = fmt("exception: %s", e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
    std::printf("%s  %2zu/12  %s  (%.1fs)\n", err.empty() ? "PASS" : "FAIL", i + 1,
                criteria[i].name, secs);
    if (!err.empty()) {
      std::printf("          %s\n", err.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  std::printf("%d/12 criteria passed\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}
