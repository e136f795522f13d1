#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

#include "scov/disc_cover.hpp"
#include "scov/optimize.hpp"
#include "scov/polygon.hpp"
#include "scov/steiner.hpp"
#include "scov/union_area.hpp"

using namespace scov;
using oracle::kPi;

TEST_CASE("nelder-mead minimizes smooth functions") {
  NMConfig cfg;
  cfg.tol = 1e-12;
  cfg.max_iter = 2000;

  const Eigen::Vector2d target(1.5, -2.0);
  const auto quad = [&](const Eigen::VectorXd& x) {
    return (x - target).squaredNorm();
  };
  const NMResult r2 = nelder_mead(quad, Eigen::Vector2d(0, 0), 1.0, cfg);
  CHECK(r2.converged);
  CHECK((r2.x - target).norm() <= 1e-9);
  CHECK(r2.value <= 1e-18);
  // history is the running best: non-increasing
  for (std::size_t i = 1; i < r2.history.size(); ++i) {
    CHECK(r2.history[i] <= r2.history[i - 1] + 1e-300);
  }

  const Eigen::Vector3d t3(0.3, 0.7, -1.1);
  const auto quad3 = [&](const Eigen::VectorXd& x) {
    return (x - t3).squaredNorm() + 5.0;
  };
  const NMResult r3 = nelder_mead(quad3, Eigen::Vector3d(2, 2, 2), 1.0, cfg);
  CHECK((r3.x - t3).norm() <= 1e-7);
  CHECK(r3.value == doctest::Approx(5.0));

  CHECK_THROWS_AS(nelder_mead(quad, Eigen::Vector2d(0, 0), 0.0, cfg), std::invalid_argument);
  NMConfig bad = cfg;
  bad.tol = 0.0;
  CHECK_THROWS_AS(nelder_mead(quad, Eigen::Vector2d(0, 0), 1.0, bad), std::invalid_argument);
}

TEST_CASE("quadratic objective value and area identity") {
  const PointSet sq = oracle::unit_square();
  const ConvexPolygon h = convex_hull_2d(sq);

  // at the center each |omega - v|^2 = 1/2 and each angle is pi/2
  CHECK(std::abs(quadratic_objective(Vec2(0.5, 0.5), h) - kPi) <= 1e-12);

  // 4 * union = Q(omega) + 2 * S_CH for interior anchors
  SplitMix64 rng(79);
  for (int t = 0; t < 25; ++t) {
    const ConvexPolygon poly = oracle::random_polygon(rng);
    const PointSet ps{Eigen::MatrixXd(poly.vertices())};
    Eigen::VectorXd w(poly.size());
    for (Eigen::Index i = 0; i < poly.size(); ++i) w[i] = rng.uniform01_open();
    const Vec2 om = poly.vertices() * (w / w.sum());
    const double area = union_area_exact(build_cover(ps, om)).union_area;
    const double q = quadratic_objective(om, poly);
    CHECK(std::abs(4 * area - (q + 2 * polygon_area(poly))) <= 1e-9);
  }
}

TEST_CASE("constant gap: union minus quadratic/4 is anchor-independent") {
  SplitMix64 rng(83);
  for (int t = 0; t < 10; ++t) {
    const ConvexPolygon poly = oracle::random_polygon(rng);
    const PointSet ps{Eigen::MatrixXd(poly.vertices())};
    double ref = 0.0;
    for (int k = 0; k < 20; ++k) {
      Eigen::VectorXd w(poly.size());
      for (Eigen::Index i = 0; i < poly.size(); ++i) w[i] = rng.uniform01_open();
      const Vec2 om = poly.vertices() * (w / w.sum());
      const double gap = union_area_exact(build_cover(ps, om)).union_area -
                         quadratic_objective(om, poly) / 4;
      if (k == 0) {
        ref = gap;
        CHECK(std::abs(gap - polygon_area(poly) / 2) <= 1e-9);
      }
      CHECK(std::abs(gap - ref) <= 1e-9);
    }
  }
}

TEST_CASE("quadratic gradient vanishes at the steiner center") {
  SplitMix64 rng(89);
  for (int t = 0; t < 15; ++t) {
    const ConvexPolygon poly = oracle::random_polygon(rng);
    const Vec2 st = steiner_center_angles(poly).center;

    // exact gradient: 2 * (2*pi*omega - sum theta_i v_i) = 0 at the center
    const Vec2 weighted = poly.vertices() * poly.exterior_angles();
    CHECK((2 * (2 * kPi * st - weighted)).norm() <= 1e-12);

    // central differences agree
    const auto f = [&](const Eigen::VectorXd& w) {
      return quadratic_objective(Vec2(w), poly);
    };
    CHECK(oracle::central_diff(f, st, 1e-5).norm() <= 1e-6);
  }
}

TEST_CASE("analytic optimum examples") {
  const OptimizationResult sq = optimal_omega_analytic(oracle::unit_square());
  CHECK((sq.omega_star - Eigen::Vector2d(0.5, 0.5)).norm() <= 1e-12);
  CHECK(std::abs(sq.objective_area - (0.5 + kPi / 4)) <= 1e-9);
  CHECK(sq.method == OptimizeMethod::analytic);
  CHECK(sq.converged);

  Eigen::MatrixXd seg(2, 2);
  seg << -1, 1,
          0, 0;
  const OptimizationResult s = optimal_omega_analytic(PointSet(seg));
  CHECK(s.omega_star.norm() <= 1e-12);
  CHECK(std::abs(s.objective_area - kPi / 2) <= 1e-9);

  Eigen::MatrixXd one(2, 1);
  one << 2, 3;
  const OptimizationResult p = optimal_omega_analytic(PointSet(one));
  CHECK((p.omega_star - Eigen::Vector2d(2, 3)).norm() == 0.0);
  CHECK(p.objective_area == 0.0);

  Eigen::MatrixXd cube(3, 2);
  cube << 0, 1, 0, 1, 0, 1;
  CHECK_THROWS_AS(optimal_omega_analytic(PointSet(cube)), std::invalid_argument);
}

TEST_CASE("numeric optimum lands on the analytic one") {
  SplitMix64 rng(97);
  Eigen::MatrixXd tri(2, 3);
  tri << 0, 4, 0,
         0, 0, 3;
  std::vector<PointSet> cases;
  cases.emplace_back(tri);
  cases.push_back(oracle::unit_square());
  for (int t = 0; t < 8; ++t) cases.push_back(oracle::random_point_set_2d(rng, 12));

  for (const PointSet& ps : cases) {
    const OptimizationResult ref = optimal_omega_analytic(ps);
    const OptimizationResult num = optimal_omega_numeric(ps);
    CHECK(num.method == OptimizeMethod::nelder_mead);
    CHECK(num.converged);
    CHECK((num.omega_star - ref.omega_star).norm() <= 1e-5);
    CHECK(num.objective_area <= ref.objective_area + 1e-9);
    REQUIRE(num.iterations.has_value());
    CHECK(*num.iterations <= 500);
    CHECK(point_in_hull(num.omega_star, convex_hull_2d(ps)));
  }
}

TEST_CASE("optimum is translation equivariant") {
  SplitMix64 rng(101);
  for (int t = 0; t < 5; ++t) {
    const PointSet ps = oracle::random_point_set_2d(rng, 8);
    const Eigen::Vector2d shift(rng.uniform(-10, 10), rng.uniform(-10, 10));
    const PointSet moved{Eigen::MatrixXd(ps.points().colwise() + shift)};
    const Vec2 a = optimal_omega_analytic(ps).omega_star;
    const Vec2 b = optimal_omega_analytic(moved).omega_star;
    CHECK((b - (a + shift)).norm() <= 1e-9);
  }
}

TEST_CASE("dominance probe never finds a better anchor") {
  const DominanceReport rep = dominance_probe(oracle::unit_square(), 200, 4);
  CHECK(rep.trials == 200);
  CHECK(rep.violations == 0);
  CHECK(rep.min_gap >= -1e-9);
  CHECK((rep.steiner_anchor - Vec2(0.5, 0.5)).norm() <= 1e-12);
  CHECK(std::abs(rep.steiner_area - (0.5 + kPi / 4)) <= 1e-9);

  SplitMix64 rng(103);
  for (int t = 0; t < 5; ++t) {
    const PointSet ps = oracle::random_point_set_2d(rng, 10);
    const DominanceReport r = dominance_probe(ps, 100, 500 + t);
    CHECK(r.violations == 0);
    CHECK(r.min_gap >= -1e-9);
  }

  CHECK_THROWS_AS(dominance_probe(oracle::unit_square(), 0, 1), std::invalid_argument);
}
