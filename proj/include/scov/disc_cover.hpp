#pragma once

#include "scov/types.hpp"

#include <optional>

namespace scov {

struct Disc {
  Eigen::VectorXd center;
  double radius = 0.0;
};

/// The family of discs/balls S_{P_i}(omega) with the segments [omega, P_i] as
/// diameters: disc i is centered at (omega + P_i)/2 with radius
/// |omega - P_i|/2, so every boundary passes through the anchor.
class DiscCover {
public:
  DiscCover(PointSet source, Eigen::VectorXd anchor);

  int dim() const { return source_.dim(); }
  Eigen::Index size() const { return centers_.cols(); }
  const Eigen::VectorXd& anchor() const { return anchor_; }
  const PointSet& source() const { return source_; }
  const Eigen::MatrixXd& centers() const { return centers_; }
  const Eigen::VectorXd& radii() const { return radii_; }
  Disc disc(Eigen::Index i) const { return {centers_.col(i), radii_[i]}; }

private:
  PointSet source_;
  Eigen::VectorXd anchor_;
  Eigen::MatrixXd centers_;
  Eigen::VectorXd radii_;
};

DiscCover build_cover(const PointSet& ps, const Eigen::VectorXd& omega);

/// Second intersection of the boundary circles of the anchored discs of p_i
/// and p_j (both circles pass through the anchor). Empty when [omega,p_i] and
/// [omega,p_j] are collinear, i.e. the circles are tangent at the anchor;
/// otherwise the foot of the perpendicular from the anchor onto line(p_i,p_j).
std::optional<Vec2> anchored_pair_second_intersection(const Vec2& omega, const Vec2& pi,
                                                      const Vec2& pj);

}  // namespace scov
