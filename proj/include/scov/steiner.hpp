#pragma once

#include "scov/polygon.hpp"
#include "scov/types.hpp"

#include <cstdint>
#include <optional>

namespace scov {

enum class SteinerMethod { angles, projection, directional };

struct SteinerResult {
  Eigen::VectorXd center;
  SteinerMethod method = SteinerMethod::angles;
  /// Present for the directional estimator only: 2-norm of the per-coordinate
  /// standard errors of the mean.
  std::optional<double> standard_error;
  std::int64_t samples_or_nodes = 0;
};

/// Exterior-angle weighted vertex centroid, sum(theta_i/2pi * v_i). Valid for
/// every hull kind: a segment yields its midpoint, a point itself.
SteinerResult steiner_center_angles(const ConvexPolygon& poly);

/// Support-integral route: composite midpoint quadrature over [0, pi) of
/// u(theta) * (min_i<P_i,u> + max_i<P_i,u>) / pi with signed projections.
/// Requires dim == 2 and nodes >= 16.
SteinerResult steiner_center_projection(const PointSet& ps, int nodes = 4096);

/// Monte Carlo route, any dimension: directions drawn uniformly on the unit
/// sphere; the argmax input point (ties to the lowest index) is averaged.
/// For polytopes this converges to the Steiner point, the argmax frequencies
/// being the normalized normal-cone measures. Requires samples >= 1000.
/// shards < 1 reads STEINER_COVER_THREADS (default 1).
SteinerResult steiner_point_directional(const PointSet& ps, std::int64_t samples,
                                        std::uint64_t seed, int shards = 1);

/// Raw tally behind the directional estimator: per-point argmax hit counts
/// plus the running moments of the selected points.
struct DirectionalTally {
  Eigen::VectorXd mean;            // average of argmax points
  Eigen::VectorXd standard_error;  // per-coordinate SE of the mean
  Eigen::VectorXi hits;            // argmax count per input point
  std::int64_t samples = 0;
};

DirectionalTally directional_argmax_tally(const PointSet& ps, std::int64_t samples,
                                          std::uint64_t seed, int shards = 1);

}  // namespace scov
