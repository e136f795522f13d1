#include "scov/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "scov/polygon.hpp"
#include "scov/rng.hpp"

namespace scov {

namespace {

Eigen::MatrixXd sample_hull_2d(const PointSet& ps, std::int64_t n,
                               SplitMix64& rng) {
  const ConvexPolygon hull = convex_hull_2d(ps);
  Eigen::MatrixXd out(2, n);
  switch (hull.kind()) {
    case HullKind::point:
      out.colwise() = Eigen::Vector2d(hull.vertex(0));
      return out;
    case HullKind::segment: {
      const Vec2 a = hull.vertex(0), b = hull.vertex(1);
      for (Eigen::Index s = 0; s < n; ++s) {
        out.col(s) = a + rng.uniform01() * (b - a);
      }
      return out;
    }
    case HullKind::polygon:
      break;
  }
  // Fan triangulation from vertex 0; triangles chosen by area.
  const Eigen::Matrix2Xd& v = hull.vertices();
  const Eigen::Index m = v.cols();
  std::vector<double> cum(static_cast<std::size_t>(m - 2));
  double total = 0.0;
  for (Eigen::Index k = 1; k + 1 < m; ++k) {
    const Vec2 e1 = v.col(k) - v.col(0);
    const Vec2 e2 = v.col(k + 1) - v.col(0);
    total += 0.5 * std::abs(cross2(e1, e2));
    cum[static_cast<std::size_t>(k - 1)] = total;
  }
  for (Eigen::Index s = 0; s < n; ++s) {
    const double pick = rng.uniform01() * total;
    const auto it = std::upper_bound(cum.begin(), cum.end(), pick);
    const Eigen::Index k =
        1 + static_cast<Eigen::Index>(std::min<std::ptrdiff_t>(
                it - cum.begin(), static_cast<std::ptrdiff_t>(cum.size()) - 1));
    double r1 = rng.uniform01(), r2 = rng.uniform01();
    if (r1 + r2 > 1.0) {
      r1 = 1.0 - r1;
      r2 = 1.0 - r2;
    }
    out.col(s) = v.col(0) + r1 * (v.col(k) - v.col(0)) +
                 r2 * (v.col(k + 1) - v.col(0));
  }
  return out;
}

}  // namespace

Eigen::MatrixXd sample_hull_points(const PointSet& ps, std::int64_t n,
                                   std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("sample count must be nonnegative");
  SplitMix64 rng(seed);
  if (ps.dim() == 2) return sample_hull_2d(ps, n, rng);

  const Eigen::MatrixXd& pts = ps.points();
  Eigen::MatrixXd out(3, n);
  Eigen::VectorXd w(pts.cols());
  for (Eigen::Index s = 0; s < n; ++s) {
    for (Eigen::Index i = 0; i < pts.cols(); ++i) {
      w[i] = -std::log(rng.uniform01_open());
    }
    out.col(s) = pts * (w / w.sum());
  }
  return out;
}

CoverQuery is_covered(const Eigen::VectorXd& q, const DiscCover& cover) {
  if (q.size() != cover.dim()) {
    throw std::invalid_argument("query dimension does not match cover");
  }
  for (Eigen::Index i = 0; i < cover.size(); ++i) {
    if ((q - cover.centers().col(i)).norm() <= cover.radii()[i] + 1e-9) {
      return {true, i};
    }
  }
  return {false, std::nullopt};
}

CoverageReport verify_coverage(const PointSet& ps,
                               const Eigen::VectorXd& omega, std::int64_t n,
                               std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("at least one sample required");
  const DiscCover cover = build_cover(ps, omega);
  const Eigen::MatrixXd samples = sample_hull_points(ps, n, seed);
  // Translate the anchor to the origin for the certificate computation.
  const Eigen::MatrixXd shifted = ps.points().colwise() - omega;

  CoverageReport rep;
  rep.samples = n;
  for (Eigen::Index s = 0; s < n; ++s) {
    const Eigen::VectorXd q = samples.col(s);
    const double margin =
        (cover.radii() -
         (cover.centers().colwise() - q).colwise().norm().transpose())
            .maxCoeff();
    rep.worst_margin = std::min(rep.worst_margin, margin);
    if (margin >= -1e-9) continue;

    CoverageWitness w;
    w.q = q;
    const Eigen::VectorXd qt = q - omega;
    w.projections =
        (shifted.colwise() - qt).transpose() * qt;  // qt . (p_i - qt)
    w.numerical = (w.projections.array() >= 0.0).any();
    if (w.numerical) {
      ++rep.numerical_artifacts;
    } else {
      ++rep.violations;
    }
    rep.witnesses.push_back(std::move(w));
  }
  return rep;
}

PairClassification classify_pair(const DiscCover& cover, Eigen::Index i,
                                 Eigen::Index j) {
  if (cover.dim() != 2) {
    throw std::invalid_argument("pair classification requires a 2D cover");
  }
  if (i == j || i < 0 || j < 0 || i >= cover.size() || j >= cover.size()) {
    throw std::invalid_argument("pair indices must be distinct and in range");
  }
  if (cover.radii()[i] <= 0.0 || cover.radii()[j] <= 0.0) {
    throw std::invalid_argument("zero-radius disc cannot be classified");
  }
  PairClassification c;
  const auto q = anchored_pair_second_intersection(
      cover.anchor(), cover.source().points().col(i),
      cover.source().points().col(j));
  if (q) {
    c.second_point = *q;
  } else {
    c.tangent_at_anchor = true;
  }
  return c;
}

}  // namespace scov
