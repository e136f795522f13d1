#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scov/disc_cover.hpp"
#include "scov/types.hpp"

namespace scov {

// Result of testing one point against a cover.
struct CoverQuery {
  bool covered = false;
  std::optional<Eigen::Index> witness;  // first disc containing the point
};

// One uncovered sample, kept with its certificate: the projections
// q~ . (p~_i - q~) in the anchor-translated frame. A genuine counterexample
// to hull coverage requires every projection to be negative; if any is
// nonnegative the sample is triaged as floating-point noise instead.
struct CoverageWitness {
  Eigen::VectorXd q;
  Eigen::VectorXd projections;
  bool numerical = false;
};

struct CoverageReport {
  std::int64_t samples = 0;
  std::int64_t violations = 0;            // all-negative certificates
  std::int64_t numerical_artifacts = 0;   // failures with a nonnegative projection
  // min over samples of max_i (radius_i - dist(q, center_i)); negative values
  // beyond -1e-9 indicate a sample outside every disc.
  double worst_margin = std::numeric_limits<double>::infinity();
  std::vector<CoverageWitness> witnesses;
};

// Draws n points from the convex hull of ps. In 2D the hull is
// fan-triangulated and sampled uniformly by area (degenerate hulls fall back
// to the segment / single point). In 3D the draw is a random convex
// combination with normalized exponential weights: guaranteed in-hull but not
// uniform, which is all a universally-quantified coverage check needs.
Eigen::MatrixXd sample_hull_points(const PointSet& ps, std::int64_t n,
                                   std::uint64_t seed);

// True iff some disc contains q within a +1e-9 slack on its radius; hull
// boundary points sit exactly on circle boundaries, so the non-strict test
// is required. Witness is the first qualifying disc index.
CoverQuery is_covered(const Eigen::VectorXd& q, const DiscCover& cover);

// Samples n hull points and tests each against the cover anchored at omega.
CoverageReport verify_coverage(const PointSet& ps, const Eigen::VectorXd& omega,
                               std::int64_t n, std::uint64_t seed);

// Pairwise geometry of two anchored discs: either tangent at the anchor
// (collinear diameters) or crossing at the anchor plus one more point, the
// foot of the perpendicular from the anchor onto line(P_i, P_j).
struct PairClassification {
  bool tangent_at_anchor = false;
  std::optional<Vec2> second_point;
};

PairClassification classify_pair(const DiscCover& cover, Eigen::Index i,
                                 Eigen::Index j);

}  // namespace scov
