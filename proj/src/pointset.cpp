#include "brillouin/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "brillouin/errors.hpp"

namespace brillouin {

namespace {

constexpr double kHorizonSlack = 1e-12;

std::shared_ptr<const std::vector<PointSet::OrbitEntry>> build_orbit(
    std::int64_t k, std::int64_t n_max) {
  if (k < 2) throw std::invalid_argument("gamma_orbit: k must be >= 2");
  if (n_max < 0) throw std::invalid_argument("gamma_orbit: n_max must be >= 0");
  auto table = std::make_shared<std::vector<PointSet::OrbitEntry>>();
  for (std::int64_t n = 0; n <= n_max; ++n) {
    auto sols = solve_quadruples(n, k);
    if (sols.empty()) continue;
    // Distinct orbit points at this level = distinct rotation-orbit canonical
    // forms. Keep the lex-smallest solution quadruple as the representative.
    std::map<Quadruple, Quadruple> reps;
    for (const auto& g : sols) {
      Quadruple c = canonicalize(g);
      auto it = reps.find(c);
      if (it == reps.end() || g < it->second) reps.insert_or_assign(c, g);
    }
    for (const auto& [c, g] : reps) {
      PointSet::OrbitEntry e;
      e.pos = orbit_point(g);
      e.euclid_norm = euclid_norm(e.pos);
      e.quad = g;
      e.level = n;
      table->push_back(e);
    }
  }
  std::sort(table->begin(), table->end(),
            [](const PointSet::OrbitEntry& a, const PointSet::OrbitEntry& b) {
              if (a.euclid_norm != b.euclid_norm) return a.euclid_norm < b.euclid_norm;
              return lex_less(a.pos, b.pos);
            });
  return table;
}

}  // namespace

PointSet::PointSet(PointSetKind kind, double alpha, std::int64_t k, std::int64_t n_max)
    : kind_(kind), alpha_(alpha), gamma_k_(k), gamma_n_max_(n_max) {
  if (kind == PointSetKind::gamma_orbit) orbit_ = build_orbit(k, n_max);
}

PointSet PointSet::square_lattice() {
  return PointSet(PointSetKind::square_lattice, 0.0, 0, 0);
}

PointSet PointSet::irrational_lattice(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("irrational_lattice: alpha must be > 0");
  return PointSet(PointSetKind::irrational_lattice, alpha, 0, 0);
}

PointSet PointSet::irrational_lattice() {
  return irrational_lattice(std::sqrt(2.0));
}

PointSet PointSet::cross_set() { return PointSet(PointSetKind::cross_set, 0.0, 0, 0); }

PointSet PointSet::gamma_orbit(std::int64_t k, std::int64_t n_max) {
  return PointSet(PointSetKind::gamma_orbit, 0.0, k, n_max);
}

double PointSet::orbit_horizon() const {
  if (kind_ != PointSetKind::gamma_orbit)
    throw std::invalid_argument("orbit_horizon: not a gamma orbit");
  double n = static_cast<double>(gamma_n_max_);
  return std::atanh(std::sqrt(n / (n + 1.0)));
}

const std::vector<PointSet::OrbitEntry>& PointSet::orbit_entries() const {
  if (!orbit_) throw std::invalid_argument("orbit_entries: not a gamma orbit");
  return *orbit_;
}

namespace {

void append_lattice_candidates(const PointSet& set, Point2 center, double radius,
                               std::vector<Point2>& out) {
  // Every Lk norm dominates the sup norm, so candidate coordinates lie in a
  // +-radius box; one extra index of margin absorbs rounding in the division.
  auto lo_i = static_cast<std::int64_t>(std::floor(center.x - radius)) - 1;
  auto hi_i = static_cast<std::int64_t>(std::ceil(center.x + radius)) + 1;
  if (set.kind() == PointSetKind::square_lattice) {
    auto lo_j = static_cast<std::int64_t>(std::floor(center.y - radius)) - 1;
    auto hi_j = static_cast<std::int64_t>(std::ceil(center.y + radius)) + 1;
    for (std::int64_t i = lo_i; i <= hi_i; ++i)
      for (std::int64_t j = lo_j; j <= hi_j; ++j)
        out.push_back({static_cast<double>(i), static_cast<double>(j)});
  } else {
    double a = set.alpha();
    auto lo_j = static_cast<std::int64_t>(std::floor((center.y - radius) / a)) - 1;
    auto hi_j = static_cast<std::int64_t>(std::ceil((center.y + radius) / a)) + 1;
    for (std::int64_t i = lo_i; i <= hi_i; ++i)
      for (std::int64_t j = lo_j; j <= hi_j; ++j)
        out.push_back({static_cast<double>(i), static_cast<double>(j) * a});
  }
}

void append_cross_candidates(Point2 center, double radius, std::vector<Point2>& out) {
  auto lo_i = static_cast<std::int64_t>(std::floor(center.x - radius)) - 1;
  auto hi_i = static_cast<std::int64_t>(std::ceil(center.x + radius)) + 1;
  for (std::int64_t i = lo_i; i <= hi_i; ++i) {
    if (i == 0) continue;  // the origin joins through the vertical family
    out.push_back({static_cast<double>(i), 0.0});
  }
  auto lo_j = static_cast<std::int64_t>(std::floor(center.y - radius)) - 1;
  auto hi_j = static_cast<std::int64_t>(std::ceil(center.y + radius)) + 1;
  for (std::int64_t j = lo_j; j <= hi_j; ++j)
    out.push_back({0.0, static_cast<double>(j)});
}

}  // namespace

std::vector<Point2> enumerate_in_ball(const PointSet& set, const Metric& metric,
                                      Point2 center, double radius) {
  if (!(radius >= 0.0)) throw std::invalid_argument("enumerate_in_ball: negative radius");

  std::vector<Point2> candidates;
  if (set.kind() == PointSetKind::gamma_orbit) {
    const auto& entries = set.orbit_entries();
    double horizon = set.orbit_horizon();
    double reach;  // Euclidean norm below which members must be enumerated
    if (metric.kind() == MetricKind::hyperbolic_disk) {
      double center_dist = distance(metric, {0.0, 0.0}, center);
      if (center_dist + radius > horizon * (1.0 + kHorizonSlack) + kHorizonSlack)
        throw horizon_error("enumerate_in_ball: query exceeds the orbit completeness horizon");
      reach = std::tanh(center_dist + radius);
    } else {
      // Lk ball of radius R sits inside the Euclidean ball of radius
      // sqrt(2) * R (sup-norm bound both ways).
      double top = euclid_norm(center) + radius * std::sqrt(2.0);
      if (top > std::tanh(horizon) * (1.0 + kHorizonSlack) + kHorizonSlack)
        throw horizon_error("enumerate_in_ball: query exceeds the orbit completeness horizon");
      reach = top;
    }
    for (const auto& e : entries) {
      if (e.euclid_norm > reach * (1.0 + 1e-15) + 1e-15) break;
      candidates.push_back(e.pos);
    }
  } else {
    if (metric.kind() == MetricKind::hyperbolic_disk)
      throw std::invalid_argument(
          "enumerate_in_ball: hyperbolic metric needs a point set inside the unit disk");
    if (set.kind() == PointSetKind::cross_set)
      append_cross_candidates(center, radius, candidates);
    else
      append_lattice_candidates(set, center, radius, candidates);
  }

  std::vector<Point2> out;
  out.reserve(candidates.size());
  for (Point2 p : candidates)
    if (distance(metric, center, p) <= radius) out.push_back(p);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<Neighbor> nearest_sorted(const PointSet& set, const Metric& metric,
                                     Point2 query, std::size_t count) {
  if (count == 0) return {};
  double r;
  switch (set.kind()) {
    case PointSetKind::square_lattice:
      r = std::max(1.5, 1.3 * std::sqrt(static_cast<double>(count) / 3.14159));
      break;
    case PointSetKind::irrational_lattice:
      r = std::max(2.0, 1.3 * std::sqrt(static_cast<double>(count) * set.alpha() / 3.14159));
      break;
    case PointSetKind::cross_set:
      r = std::max(2.0, static_cast<double>(count) / 4.0 + 2.0);
      break;
    case PointSetKind::gamma_orbit:
      r = 0.5;
      break;
    default:
      r = 2.0;
  }

  std::vector<Point2> pts;
  for (;;) {
    pts = enumerate_in_ball(set, metric, query, r);
    if (pts.size() >= count) break;
    r *= 1.5;  // gamma_orbit growth stops at the horizon via enumerate's check
  }

  std::vector<Neighbor> all;
  all.reserve(pts.size());
  for (Point2 p : pts) all.push_back({p, distance(metric, query, p)});
  std::sort(all.begin(), all.end(), [](const Neighbor& a, const Neighbor& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    return lex_less(a.point, b.point);
  });
  all.resize(count);
  return all;
}

}  // namespace brillouin
