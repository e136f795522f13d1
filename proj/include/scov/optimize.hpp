#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "scov/polygon.hpp"
#include "scov/types.hpp"

namespace scov {

/// Nelder-Mead knobs. tol and initial_edge of 0 pick the defaults: edge
/// 0.1 x the bounding-box diagonal, and a simplex-diameter stop of 1e-10 for
/// the exact 2D objective or 1e-4 for the stochastic 3D one. mc_samples and
/// seed only drive the 3D objective, which re-uses one seed across every
/// evaluation (common random numbers) so the optimizer sees a deterministic
/// surrogate surface.
struct NMConfig {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  double tol = 0.0;
  int max_iter = 500;
  double initial_edge = 0.0;
  std::int64_t mc_samples = 200000;
  std::uint64_t seed = 1;
};

enum class OptimizeMethod { analytic, nelder_mead };

struct OptimizationResult {
  Eigen::VectorXd omega_star;
  double objective_area = 0.0;
  OptimizeMethod method = OptimizeMethod::analytic;
  std::optional<int> iterations;
  bool converged = false;
  std::vector<double> objective_history;  // best value per iteration (numeric)
};

struct NMResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> history;
};

/// Derivative-free simplex minimization (the standard reflect / expand /
/// contract / shrink scheme). The initial simplex is regular with the given
/// edge length, centered on x0. Stops when the max pairwise vertex distance
/// drops below cfg.tol (which must be positive here) or after max_iter
/// iterations.
NMResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                     const Eigen::VectorXd& x0, double edge,
                     const NMConfig& cfg);

/// sum(theta_i * |omega - v_i|^2) over the polygon vertices. Defined for any
/// omega; equals 4*(union area) - 2*S_CH only when omega is inside the hull.
double quadratic_objective(const Vec2& omega, const ConvexPolygon& poly);

/// The provably optimal anchor in 2D: the Steiner center of the hull.
/// objective_area is the exact union area there.
OptimizationResult optimal_omega_analytic(const PointSet& ps);

/// Nelder-Mead on the exact union area (2D) or on a fixed-seed Monte Carlo
/// volume estimate (3D). Starts from the centroid of the points.
OptimizationResult optimal_omega_numeric(const PointSet& ps,
                                         const NMConfig& cfg = {});

/// Empirical optimality check: `trials` anchors, half sampled in the hull and
/// half outside it within a 3x bounding box, must never undercut the Steiner
/// anchor's exact area by more than 1e-9.
struct DominanceReport {
  std::int64_t trials = 0;
  std::int64_t violations = 0;
  double min_gap = 0.0;  // min over anchors of area(anchor) - area(steiner)
  Vec2 steiner_anchor{0, 0};
  double steiner_area = 0.0;
};

DominanceReport dominance_probe(const PointSet& ps, std::int64_t trials,
                                std::uint64_t seed);

}  // namespace scov
