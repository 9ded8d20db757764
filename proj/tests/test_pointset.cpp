#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "brillouin/counting.hpp"
#include "brillouin/errors.hpp"
#include "brillouin/pointset.hpp"

using namespace brillouin;

namespace {

// Brute-force lattice/cross enumeration over a generous integer box.
std::vector<Point2> naive_members(const PointSet& set, const Metric& m, Point2 c,
                                  double radius) {
  std::vector<Point2> out;
  long span = long(radius / (set.kind() == PointSetKind::irrational_lattice &&
                                     set.alpha() < 1.0
                                 ? set.alpha()
                                 : 1.0)) +
              long(std::abs(c.x) + std::abs(c.y)) + 3;
  auto push = [&](Point2 p) {
    if (distance(m, c, p) <= radius) out.push_back(p);
  };
  if (set.kind() == PointSetKind::cross_set) {
    for (long i = -span; i <= span; ++i) {
      push({double(i), 0.0});
      if (i != 0) push({0.0, double(i)});
    }
  } else {
    double ay = set.kind() == PointSetKind::irrational_lattice ? set.alpha() : 1.0;
    for (long i = -span; i <= span; ++i)
      for (long j = -span; j <= span; ++j) push({double(i), double(j) * ay});
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("square lattice ball enumeration: hand counts") {
  PointSet z2 = PointSet::square_lattice();
  Metric l2 = Metric::euclidean();
  auto pts = enumerate_in_ball(z2, l2, {0, 0}, 1.5);
  CHECK(pts.size() == 9);  // origin, 4 axis neighbors, 4 diagonals
  CHECK(std::is_sorted(pts.begin(), pts.end(), lex_less));
  auto tight = enumerate_in_ball(z2, l2, {0, 0}, 0.99);
  CHECK(tight.size() == 1);
  auto exact = enumerate_in_ball(z2, l2, {0, 0}, 1.0);
  CHECK(exact.size() == 5);  // closed ball includes the circle
}

TEST_CASE("ball enumeration matches the naive box scan") {
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  std::uniform_real_distribution<double> ur(0.3, 3.5);
  for (const Metric& m : {Metric::euclidean(), Metric::manhattan(), Metric::lk(4.0)}) {
    for (const PointSet& s : {PointSet::square_lattice(), PointSet::irrational_lattice(),
                              PointSet::cross_set()}) {
      for (int trial = 0; trial < 25; ++trial) {
        Point2 c{u(gen), u(gen)};
        double r = ur(gen);
        auto got = enumerate_in_ball(s, m, c, r);
        auto want = naive_members(s, m, c, r);
        CHECK(got == want);
      }
    }
  }
}

TEST_CASE("irrational lattice default spacing is sqrt 2") {
  PointSet irr = PointSet::irrational_lattice();
  CHECK(irr.alpha() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  auto pts = enumerate_in_ball(irr, Metric::euclidean(), {0, 0}, 1.1);
  CHECK(pts.size() == 3);  // (-1,0),(0,0),(1,0); (0,±sqrt2) are outside
}

TEST_CASE("cross set members lie on the axes") {
  auto pts = enumerate_in_ball(PointSet::cross_set(), Metric::euclidean(), {0, 0}, 2.2);
  CHECK(pts.size() == 9);
  for (Point2 p : pts) CHECK((p.x == 0.0 || p.y == 0.0));
}

TEST_CASE("nearest_sorted orders by distance with lexicographic ties") {
  PointSet z2 = PointSet::square_lattice();
  Metric l2 = Metric::euclidean();
  auto nn = nearest_sorted(z2, l2, {0.2, 0.1}, 6);
  REQUIRE(nn.size() == 6);
  CHECK(nn[0].point == Point2{0.0, 0.0});
  for (std::size_t i = 1; i < nn.size(); ++i) {
    CHECK(nn[i - 1].dist <= nn[i].dist + 1e-15);
    if (nn[i - 1].dist == nn[i].dist) CHECK(lex_less(nn[i - 1].point, nn[i].point));
  }
  // distances are the true metric distances
  for (const auto& n : nn)
    CHECK(n.dist == doctest::Approx(distance(l2, {0.2, 0.1}, n.point)).epsilon(1e-15));

  // ties at the basepoint corner: four lattice points at distance sqrt(0.5)
  auto tied = nearest_sorted(z2, l2, {0.5, 0.5}, 4);
  for (const auto& n : tied)
    CHECK(n.dist == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("gamma orbit: completeness, levels, and counts") {
  const std::int64_t n_max = 50;
  PointSet orb = PointSet::gamma_orbit(2, n_max);
  CHECK(orb.gamma_k() == 2);
  CHECK(orb.gamma_n_max() == n_max);
  CHECK(orb.orbit_horizon() ==
        doctest::Approx(std::atanh(std::sqrt(double(n_max) / double(n_max + 1))))
            .epsilon(1e-15));

  const auto& entries = orb.orbit_entries();
  REQUIRE(!entries.empty());
  CHECK(entries.front().level == 0);
  CHECK(entries.front().pos == Point2{0.0, 0.0});

  std::vector<std::int64_t> per_level(n_max + 1, 0);
  for (const auto& e : entries) {
    REQUIRE(e.level >= 0);
    REQUIRE(e.level <= n_max);
    ++per_level[e.level];
    CHECK(e.euclid_norm == doctest::Approx(euclid_norm(e.pos)).epsilon(1e-15));
    CHECK(euclid_norm_sq(e.pos) ==
          doctest::Approx(double(e.level) / double(e.level + 1)).epsilon(1e-12));
    // the stored group element reproduces the position
    Point2 img = orbit_point(e.quad);
    CHECK(img.x == doctest::Approx(e.pos.x).epsilon(1e-14));
    CHECK(img.y == doctest::Approx(e.pos.y).epsilon(1e-14));
  }
  CHECK(per_level[0] == 1);
  for (std::int64_t n = 1; n <= n_max; ++n)
    CHECK(per_level[n] == gamma_focusing_formula(2, n));
}

TEST_CASE("gamma orbit queries respect the completeness horizon") {
  PointSet orb = PointSet::gamma_orbit(2, 30);
  Metric hyp = Metric::hyperbolic();
  double horizon = orb.orbit_horizon();
  auto pts = enumerate_in_ball(orb, hyp, {0, 0}, horizon * 0.5);
  CHECK(!pts.empty());
  CHECK_THROWS_AS(enumerate_in_ball(orb, hyp, {0, 0}, horizon * 1.01), horizon_error);
  Point2 off{0.4, 0.0};
  CHECK_THROWS_AS(
      enumerate_in_ball(orb, hyp, off, horizon - distance(hyp, {0, 0}, off) + 0.05),
      horizon_error);
  CHECK_THROWS_AS(nearest_sorted(orb, hyp, {0.9, 0.0}, 4000), horizon_error);
}

TEST_CASE("gamma orbit ball enumeration agrees with a scan of the entries") {
  PointSet orb = PointSet::gamma_orbit(2, 40);
  Metric hyp = Metric::hyperbolic();
  Point2 c{0.25, -0.1};
  double r = 0.8;
  auto got = enumerate_in_ball(orb, hyp, c, r);
  std::vector<Point2> want;
  for (const auto& e : orb.orbit_entries())
    if (distance(hyp, c, e.pos) <= r) want.push_back(e.pos);
  std::sort(want.begin(), want.end(), lex_less);
  CHECK(got == want);
}

TEST_CASE("point sets are cheap value types sharing orbit storage") {
  PointSet a = PointSet::gamma_orbit(2, 30);
  PointSet b = a;
  CHECK(&a.orbit_entries() == &b.orbit_entries());
}
