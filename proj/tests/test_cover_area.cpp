#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

#include "scov/disc_cover.hpp"
#include "scov/polygon.hpp"
#include "scov/union_area.hpp"

using namespace scov;
using oracle::kPi;

namespace {

PointSet two_points(const Vec2& a, const Vec2& b) {
  Eigen::MatrixXd m(2, 2);
  m.col(0) = a;
  m.col(1) = b;
  return PointSet(m);
}

}  // namespace

TEST_CASE("build_cover geometry") {
  const PointSet ps = oracle::unit_square();
  const DiscCover cover = build_cover(ps, Vec2(0, 0));
  REQUIRE(cover.size() == 4);
  CHECK(cover.radii()[0] == 0.0);  // anchor sits on the first point
  CHECK((cover.centers().col(2) - Vec2(0.5, 0.5)).norm() <= 1e-15);
  CHECK(cover.radii()[2] == doctest::Approx(std::sqrt(2.0) / 2));
  // every boundary passes through the anchor
  for (Eigen::Index i = 0; i < cover.size(); ++i) {
    const double d = (cover.centers().col(i) - Vec2(0, 0)).norm();
    CHECK(std::abs(d - cover.radii()[i]) <= 1e-12);
  }

  Eigen::Vector3d omega3(0, 0, 0);
  CHECK_THROWS_AS(build_cover(ps, omega3), std::invalid_argument);
}

TEST_CASE("pair second intersection is the perpendicular foot") {
  // Anchor at origin, points on the axes: circles through 0 centered at
  // (a/2, 0) and (0, b/2) meet again at the foot of the altitude from 0
  // onto the line x/a + y/b = 1.
  const auto q = anchored_pair_second_intersection(Vec2(0, 0), Vec2(4, 0), Vec2(0, 3));
  REQUIRE(q.has_value());
  const Vec2 expect = project_point_on_line(Vec2(0, 0), Vec2(4, 0), Vec2(0, 3));
  CHECK((*q - expect).norm() <= 1e-12);
  CHECK((*q - Vec2(36.0 / 25.0, 48.0 / 25.0)).norm() <= 1e-12);

  // collinear diameters: tangent at the anchor, no second point
  CHECK_FALSE(anchored_pair_second_intersection(Vec2(0, 0), Vec2(1, 1), Vec2(3, 3)).has_value());
  CHECK_FALSE(anchored_pair_second_intersection(Vec2(0, 0), Vec2(1, 0), Vec2(-2, 0)).has_value());
}

TEST_CASE("closed form: unit square anchors") {
  const PointSet ps = oracle::unit_square();

  const AreaReport center = excess_area_closed_form(build_cover(ps, Vec2(0.5, 0.5)));
  CHECK(std::abs(center.union_area - (0.5 + kPi / 4)) <= 1e-12);
  REQUIRE(center.hull_area.has_value());
  CHECK(*center.hull_area == doctest::Approx(1.0));
  CHECK(std::abs(*center.excess_area - (kPi / 4 - 0.5)) <= 1e-12);

  const AreaReport vertex = excess_area_closed_form(build_cover(ps, Vec2(0, 0)));
  CHECK(std::abs(vertex.union_area - (0.5 + kPi / 2)) <= 1e-12);

  CHECK_THROWS_AS(excess_area_closed_form(build_cover(ps, Vec2(2, 2))), std::domain_error);
}

TEST_CASE("closed form: tangent segment pair") {
  const PointSet ps = two_points(Vec2(-1, 0), Vec2(1, 0));
  const AreaReport r = excess_area_closed_form(build_cover(ps, Vec2(0, 0)));
  // two radius-1/2 discs tangent at the anchor
  CHECK(std::abs(r.union_area - kPi / 2) <= 1e-12);
  CHECK(std::abs(union_area_exact(build_cover(ps, Vec2(0, 0))).union_area - kPi / 2) <= 1e-12);
}

TEST_CASE("exact: single disc") {
  Eigen::MatrixXd m(2, 1);
  m << 2, 3;
  const AreaReport r = union_area_exact(build_cover(PointSet(m), Vec2(0, 0)));
  CHECK(std::abs(r.union_area - kPi * 13.0 / 4.0) <= 1e-9);
}

TEST_CASE("exact: anchor on the point kills the cover") {
  Eigen::MatrixXd m(2, 1);
  m << 1, 1;
  const AreaReport r = union_area_exact(build_cover(PointSet(m), Vec2(1, 1)));
  CHECK(r.union_area == 0.0);
}

TEST_CASE("exact matches the two-disc lens oracle") {
  SplitMix64 rng(43);
  for (int t = 0; t < 60; ++t) {
    const Vec2 p1(rng.uniform(-3, 3), rng.uniform(-3, 3));
    const Vec2 p2(rng.uniform(-3, 3), rng.uniform(-3, 3));
    const Vec2 om(rng.uniform(-4, 4), rng.uniform(-4, 4));
    if ((p1 - p2).norm() < 1e-6) continue;
    const DiscCover cover = build_cover(two_points(p1, p2), om);
    if (cover.size() < 2) continue;  // anchor merged onto a point
    const double oracle_area = oracle::two_disc_union(
        cover.centers().col(0), cover.radii()[0], cover.centers().col(1), cover.radii()[1]);
    CHECK(std::abs(union_area_exact(cover).union_area - oracle_area) <= 1e-9);
  }
}

TEST_CASE("closed form and exact agree for interior anchors") {
  SplitMix64 rng(47);
  int checked = 0;
  while (checked < 200) {
    const PointSet ps = oracle::random_point_set_2d(rng, 12);
    const ConvexPolygon h = convex_hull_2d(ps);
    if (h.kind() != HullKind::polygon) continue;
    // random point in the hull: convex combination of vertices
    Eigen::VectorXd w(h.size());
    for (Eigen::Index i = 0; i < h.size(); ++i) w[i] = rng.uniform01_open();
    const Vec2 om = h.vertices() * (w / w.sum());
    const DiscCover cover = build_cover(ps, om);
    const double a = excess_area_closed_form(cover).union_area;
    const double b = union_area_exact(cover).union_area;
    CHECK(std::abs(a - b) <= 1e-9);
    ++checked;
  }
}

TEST_CASE("closed form and exact agree on the hull boundary") {
  const PointSet ps = oracle::unit_square();
  for (const Vec2& om : {Vec2(0.5, 0.0), Vec2(1.0, 0.25), Vec2(0.0, 1.0)}) {
    const DiscCover cover = build_cover(ps, om);
    CHECK(std::abs(excess_area_closed_form(cover).union_area -
                   union_area_exact(cover).union_area) <= 1e-9);
  }
}

TEST_CASE("exterior anchors: exact only, union still covers the hull area") {
  SplitMix64 rng(53);
  for (int t = 0; t < 40; ++t) {
    const PointSet ps = oracle::random_point_set_2d(rng, 10);
    const ConvexPolygon h = convex_hull_2d(ps);
    const Vec2 om(rng.uniform(-6, 6), rng.uniform(-6, 6));
    const AreaReport r = union_area_exact(build_cover(ps, om));
    CHECK(r.union_area >= polygon_area(h) - 1e-9);
    REQUIRE(r.hull_area.has_value());
    CHECK(*r.excess_area == doctest::Approx(r.union_area - *r.hull_area));
  }
}

TEST_CASE("interior points do not change the union") {
  SplitMix64 rng(59);
  for (int t = 0; t < 20; ++t) {
    const ConvexPolygon h = oracle::random_polygon(rng);
    const PointSet base{Eigen::MatrixXd(h.vertices())};
    const Vec2 om(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const double area0 = union_area_exact(build_cover(base, om)).union_area;

    // graft up to 10 interior points (random hull combinations)
    Eigen::MatrixXd aug(2, h.size() + 10);
    aug.leftCols(h.size()) = h.vertices();
    for (int k = 0; k < 10; ++k) {
      Eigen::VectorXd w(h.size());
      for (Eigen::Index i = 0; i < h.size(); ++i) w[i] = rng.uniform01_open();
      aug.col(h.size() + k) = h.vertices() * (w / w.sum());
    }
    const double area1 = union_area_exact(build_cover(PointSet(aug), om)).union_area;
    CHECK(std::abs(area1 - area0) <= 1e-9);
  }
}

TEST_CASE("monte carlo area: 2d") {
  const PointSet ps = oracle::unit_square();
  const DiscCover cover = build_cover(ps, Vec2(0.5, 0.5));
  const AreaReport mc = union_measure_mc(cover, 200000, 2024);
  REQUIRE(mc.standard_error.has_value());
  CHECK(*mc.standard_error > 0);
  CHECK(std::abs(mc.union_area - (0.5 + kPi / 4)) <= 4 * *mc.standard_error);
  CHECK(*mc.samples == 200000);

  CHECK_THROWS_AS(union_measure_mc(cover, 9999, 1), std::invalid_argument);
}

TEST_CASE("monte carlo area is deterministic per seed and shard count") {
  const DiscCover cover = build_cover(oracle::unit_square(), Vec2(0.2, 0.7));
  const AreaReport a = union_measure_mc(cover, 50000, 5, 1);
  const AreaReport b = union_measure_mc(cover, 50000, 5, 1);
  CHECK(a.union_area == b.union_area);
  const AreaReport c = union_measure_mc(cover, 50000, 5, 3);
  const AreaReport d = union_measure_mc(cover, 50000, 5, 3);
  CHECK(c.union_area == d.union_area);
}

TEST_CASE("monte carlo volume: 3d ball") {
  Eigen::MatrixXd m(3, 1);
  m << 2, 0, 0;
  const DiscCover cover = build_cover(PointSet(m), Eigen::Vector3d(0, 0, 0));
  // single ball of radius 1
  const AreaReport mc = union_measure_mc(cover, 400000, 99);
  CHECK(std::abs(mc.union_area - 4.0 * kPi / 3.0) <= 4 * *mc.standard_error);
  CHECK_FALSE(mc.hull_area.has_value());
  CHECK_FALSE(mc.excess_area.has_value());
}

TEST_CASE("monte carlo: zero-radius cover measures zero") {
  Eigen::MatrixXd m(2, 1);
  m << 5, 5;
  const DiscCover cover = build_cover(PointSet(m), Vec2(5, 5));
  const AreaReport mc = union_measure_mc(cover, 10000, 1);
  CHECK(mc.union_area == 0.0);
}

TEST_CASE("excess over the hull is nonnegative for interior anchors") {
  SplitMix64 rng(61);
  for (int t = 0; t < 30; ++t) {
    const ConvexPolygon h = oracle::random_polygon(rng);
    const PointSet ps{Eigen::MatrixXd(h.vertices())};
    Eigen::VectorXd w(h.size());
    for (Eigen::Index i = 0; i < h.size(); ++i) w[i] = rng.uniform01_open();
    const Vec2 om = h.vertices() * (w / w.sum());
    const AreaReport r = excess_area_closed_form(build_cover(ps, om));
    CHECK(*r.excess_area >= 0.0);  // the cover contains the hull
    CHECK(r.union_area >= *r.hull_area);
  }
}
