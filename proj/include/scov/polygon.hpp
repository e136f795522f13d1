#pragma once

#include "scov/types.hpp"

namespace scov {

enum class HullKind { polygon, segment, point };

/// The convex hull of a planar point set: extreme vertices in CCW order
/// starting at the lexicographically smallest one, with the exterior turn
/// angle cached per vertex. Degenerate hulls are first-class: a segment
/// carries angles {pi, pi}, a single point {2*pi}, so the angle total is
/// always 2*pi.
class ConvexPolygon {
public:
  /// Normalizes a CCW vertex cycle: merges near-duplicate neighbours, drops
  /// collinear vertices, detects degenerate kinds, rotates the start to the
  /// lexicographic minimum and computes exterior angles. Throws
  /// std::invalid_argument if the cycle is not convex CCW.
  static ConvexPolygon from_ccw_cycle(const Eigen::Matrix2Xd& verts);

  HullKind kind() const { return kind_; }
  Eigen::Index size() const { return verts_.cols(); }
  const Eigen::Matrix2Xd& vertices() const { return verts_; }
  Vec2 vertex(Eigen::Index i) const { return verts_.col(i); }
  const Eigen::VectorXd& exterior_angles() const { return ext_angles_; }

private:
  friend ConvexPolygon scale_polygon(const ConvexPolygon&, double);
  ConvexPolygon(HullKind kind, Eigen::Matrix2Xd verts, Eigen::VectorXd angles)
      : kind_(kind), verts_(std::move(verts)), ext_angles_(std::move(angles)) {}

  HullKind kind_;
  Eigen::Matrix2Xd verts_;
  Eigen::VectorXd ext_angles_;
};

/// Monotone-chain hull. Collinear boundary points are excluded, so every
/// retained vertex has a strictly positive turn angle. Never fails:
/// degenerate inputs yield segment/point kinds.
ConvexPolygon convex_hull_2d(const PointSet& ps);

/// theta_i = pi - interior angle at vertex i; the values sum to 2*pi.
const Eigen::VectorXd& exterior_angles(const ConvexPolygon& poly);

/// Shoelace area; 0 for degenerate kinds.
double polygon_area(const ConvexPolygon& poly);

/// True iff q is inside or on the boundary within kGeomEps (signed distance
/// against each CCW edge).
bool point_in_hull(const Vec2& q, const ConvexPolygon& poly);

/// Minkowski sum by the CCW edge-merge of the two boundary cycles.
ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b);

/// {t*x | x in K}; exterior angles are unchanged. Requires t > 0.
ConvexPolygon scale_polygon(const ConvexPolygon& poly, double t);

inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

/// Foot of the perpendicular from q onto the line through a and b (a != b).
Vec2 project_point_on_line(const Vec2& q, const Vec2& a, const Vec2& b);

}  // namespace scov
