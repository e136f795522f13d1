// Independent reference computations the tests compare the library against.
// Everything here is deliberately implemented by a different route than the
// library code (acos instead of atan2, brute-force hulls, closed-form lens
// areas, finite differences).
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "scov/polygon.hpp"
#include "scov/rng.hpp"
#include "scov/types.hpp"

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

// Exterior turn angle at b of the CCW chain a -> b -> c, via the arccos of
// the normalized edge dot product.
inline double exterior_angle_acos(const scov::Vec2& a, const scov::Vec2& b,
                                  const scov::Vec2& c) {
  const scov::Vec2 u = (b - a).normalized();
  const scov::Vec2 v = (c - b).normalized();
  return std::acos(std::clamp(u.dot(v), -1.0, 1.0));
}

// Area of the union of two discs (lens subtraction).
inline double two_disc_union(const scov::Vec2& c1, double r1,
                             const scov::Vec2& c2, double r2) {
  const double d = (c1 - c2).norm();
  const double a1 = kPi * r1 * r1, a2 = kPi * r2 * r2;
  if (d >= r1 + r2) return a1 + a2;
  if (d <= std::abs(r1 - r2)) return std::max(a1, a2);
  const double i1 =
      r1 * r1 * std::acos((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1));
  const double i2 =
      r2 * r2 * std::acos((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2));
  const double k = 0.5 * std::sqrt((-d + r1 + r2) * (d + r1 - r2) *
                                   (d - r1 + r2) * (d + r1 + r2));
  return a1 + a2 - (i1 + i2 - k);
}

// Minkowski sum the slow way: convex hull of all pairwise vertex sums.
inline scov::ConvexPolygon brute_minkowski(const scov::ConvexPolygon& a,
                                           const scov::ConvexPolygon& b) {
  Eigen::Matrix2Xd sums(2, a.size() * b.size());
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index j = 0; j < b.size(); ++j) {
      sums.col(k++) = a.vertex(i) + b.vertex(j);
    }
  }
  return scov::convex_hull_2d(scov::PointSet(sums));
}

template <class F>
Eigen::VectorXd central_diff(F&& f, const Eigen::VectorXd& x, double h) {
  Eigen::VectorXd g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Eigen::VectorXd hi = x, lo = x;
    hi[i] += h;
    lo[i] -= h;
    g[i] = (f(hi) - f(lo)) / (2.0 * h);
  }
  return g;
}

inline scov::PointSet random_point_set_2d(scov::SplitMix64& rng, int n,
                                          double half_extent = 1.0) {
  Eigen::MatrixXd pts(2, n);
  for (int c = 0; c < n; ++c) {
    pts(0, c) = rng.uniform(-half_extent, half_extent);
    pts(1, c) = rng.uniform(-half_extent, half_extent);
  }
  return scov::PointSet(pts);
}

inline scov::PointSet random_point_set_3d(scov::SplitMix64& rng, int n,
                                          double half_extent = 1.0) {
  Eigen::MatrixXd pts(3, n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < 3; ++r) pts(r, c) = rng.uniform(-half_extent, half_extent);
  }
  return scov::PointSet(pts);
}

// Non-degenerate random polygon: hull of 3..max_pts random points, redrawn
// until the hull has a genuine interior.
inline scov::ConvexPolygon random_polygon(scov::SplitMix64& rng,
                                          int max_pts = 12) {
  for (;;) {
    const int n = 3 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(
                                           std::max(1, max_pts - 2)));
    const scov::ConvexPolygon h =
        scov::convex_hull_2d(random_point_set_2d(rng, n));
    if (h.kind() == scov::HullKind::polygon) return h;
  }
}

inline scov::PointSet unit_square() {
  Eigen::Matrix2Xd m(2, 4);
  m << 0, 1, 1, 0,
       0, 0, 1, 1;
  return scov::PointSet(m);
}

}  // namespace oracle
