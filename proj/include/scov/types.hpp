#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace scov {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

// Tolerance for geometric predicates (collinearity, containment) on
// desk-scale coordinates (|x| <= 1e6).
inline constexpr double kGeomEps = 1e-9;

// Points closer than this are merged at PointSet construction.
inline constexpr double kDedupEps = 1e-12;

/// An ordered constellation of N >= 1 points in R^2 or R^3, stored as the
/// columns of a dim x N matrix. Coordinates must be finite; duplicates
/// within kDedupEps are dropped (first occurrence kept). Immutable.
class PointSet {
public:
  /// pts: dim x N, one point per column.
  explicit PointSet(const Eigen::MatrixXd& pts);

  static PointSet of_2d(const std::vector<Vec2>& pts);
  static PointSet of_3d(const std::vector<Vec3>& pts);

  int dim() const { return static_cast<int>(pts_.rows()); }
  Eigen::Index size() const { return pts_.cols(); }
  const Eigen::MatrixXd& points() const { return pts_; }
  Eigen::VectorXd point(Eigen::Index i) const { return pts_.col(i); }

private:
  Eigen::MatrixXd pts_;
};

}  // namespace scov
