#pragma once

#include "scov/disc_cover.hpp"

#include <cstdint>
#include <optional>

namespace scov {

enum class AreaMethod { closed_form, exact, monte_carlo };

struct AreaReport {
  /// Hull area (2D). Unset in 3D, where the hull volume is out of scope.
  std::optional<double> hull_area;
  double union_area = 0.0;
  /// union_area - hull_area; unset in 3D.
  std::optional<double> excess_area;
  AreaMethod method = AreaMethod::exact;
  std::optional<double> standard_error;  // monte_carlo only
  std::optional<std::int64_t> samples;   // monte_carlo only
};

/// Closed form for an anchor inside (or on) the hull: only the hull vertices
/// matter, and the excess over the hull is sum(theta_i * d_i^2 / 4) - S_CH/2
/// with d_i the anchor-vertex distances. Throws std::domain_error for an
/// exterior anchor; use union_area_exact there.
AreaReport excess_area_closed_form(const DiscCover& cover);

/// Exact union area for any 2D anchor via boundary-arc decomposition. All
/// circles share the anchor; each pair additionally meets at the foot of the
/// perpendicular from the anchor onto the line of the two source points.
/// Arcs not strictly inside any other disc bound the union, and Green's
/// theorem sums their contributions.
AreaReport union_area_exact(const DiscCover& cover);

/// Rejection sampling over the tight axis-aligned bounding box of the discs;
/// works in 2D and 3D. Requires samples >= 10^4. shards < 1 reads
/// STEINER_COVER_THREADS (default 1).
AreaReport union_measure_mc(const DiscCover& cover, std::int64_t samples,
                            std::uint64_t seed, int shards = 1);

}  // namespace scov
