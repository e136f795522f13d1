#include "scov/disc_cover.hpp"

#include "scov/polygon.hpp"

namespace scov {

DiscCover::DiscCover(PointSet source, Eigen::VectorXd anchor)
    : source_(std::move(source)), anchor_(std::move(anchor)) {
  if (anchor_.size() != source_.dim()) {
    throw std::invalid_argument("anchor dimension does not match point set");
  }
  if (!anchor_.allFinite()) throw std::invalid_argument("anchor must be finite");
  const Eigen::MatrixXd& pts = source_.points();
  centers_ = (pts.colwise() + anchor_) * 0.5;
  radii_ = (pts.colwise() - anchor_).colwise().norm().transpose() * 0.5;
}

DiscCover build_cover(const PointSet& ps, const Eigen::VectorXd& omega) {
  return DiscCover(ps, omega);
}

std::optional<Vec2> anchored_pair_second_intersection(const Vec2& omega, const Vec2& pi,
                                                      const Vec2& pj) {
  const Vec2 u = pi - omega;
  const Vec2 v = pj - omega;
  if (std::abs(cross2(u, v)) <= kGeomEps * u.norm() * v.norm()) {
    return std::nullopt;  // tangent at the anchor
  }
  return project_point_on_line(omega, pi, pj);
}

}  // namespace scov
