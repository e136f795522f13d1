#include "scov/types.hpp"

namespace scov {

PointSet::PointSet(const Eigen::MatrixXd& pts) {
  const Eigen::Index dim = pts.rows();
  if (dim != 2 && dim != 3) {
    throw std::invalid_argument("points must be 2D or 3D");
  }
  if (pts.cols() == 0) {
    throw std::invalid_argument("at least one point required");
  }
  if (!pts.allFinite()) {
    throw std::invalid_argument("coordinates must be finite");
  }
  std::vector<Eigen::Index> keep;
  keep.reserve(pts.cols());
  for (Eigen::Index i = 0; i < pts.cols(); ++i) {
    bool dup = false;
    for (Eigen::Index k : keep) {
      if ((pts.col(i) - pts.col(k)).cwiseAbs().maxCoeff() <= kDedupEps) {
        dup = true;
        break;
      }
    }
    if (!dup) keep.push_back(i);
  }
  pts_.resize(dim, static_cast<Eigen::Index>(keep.size()));
  for (Eigen::Index j = 0; j < pts_.cols(); ++j) {
    pts_.col(j) = pts.col(keep[static_cast<std::size_t>(j)]);
  }
}

PointSet PointSet::of_2d(const std::vector<Vec2>& pts) {
  Eigen::MatrixXd m(2, static_cast<Eigen::Index>(pts.size()));
  for (Eigen::Index i = 0; i < m.cols(); ++i) m.col(i) = pts[static_cast<std::size_t>(i)];
  return PointSet(m);
}

PointSet PointSet::of_3d(const std::vector<Vec3>& pts) {
  Eigen::MatrixXd m(3, static_cast<Eigen::Index>(pts.size()));
  for (Eigen::Index i = 0; i < m.cols(); ++i) m.col(i) = pts[static_cast<std::size_t>(i)];
  return PointSet(m);
}

}  // namespace scov
