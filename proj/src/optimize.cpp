#include "scov/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "scov/coverage.hpp"
#include "scov/rng.hpp"
#include "scov/steiner.hpp"
#include "scov/union_area.hpp"

namespace scov {

namespace {

double simplex_diameter(const std::vector<Eigen::VectorXd>& v) {
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      d = std::max(d, (v[i] - v[j]).norm());
    }
  }
  return d;
}

double bbox_diagonal(const Eigen::MatrixXd& pts) {
  return (pts.rowwise().maxCoeff() - pts.rowwise().minCoeff()).norm();
}

}  // namespace

NMResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                     const Eigen::VectorXd& x0, double edge,
                     const NMConfig& cfg) {
  if (!(edge > 0.0)) throw std::invalid_argument("simplex edge must be positive");
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const int n = static_cast<int>(x0.size());

  // Regular simplex with the requested edge (Spendley-style offsets), then
  // recentered so its centroid sits on x0.
  const double p = (n - 1.0 + std::sqrt(n + 1.0)) / (n * std::sqrt(2.0));
  const double q = (std::sqrt(n + 1.0) - 1.0) / (n * std::sqrt(2.0));
  std::vector<Eigen::VectorXd> v(static_cast<std::size_t>(n) + 1);
  v[0] = x0;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd off = Eigen::VectorXd::Constant(n, q);
    off[i] = p;
    v[static_cast<std::size_t>(i) + 1] = x0 + edge * off;
  }
  Eigen::VectorXd centroid_all = Eigen::VectorXd::Zero(n);
  for (const auto& vi : v) centroid_all += vi;
  centroid_all /= static_cast<double>(n + 1);
  for (auto& vi : v) vi += x0 - centroid_all;

  std::vector<double> fv(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) fv[i] = f(v[i]);

  NMResult res;
  std::vector<std::size_t> order(v.size());
  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    {
      std::vector<Eigen::VectorXd> vs(v.size());
      std::vector<double> fs(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        vs[i] = v[order[i]];
        fs[i] = fv[order[i]];
      }
      v.swap(vs);
      fv.swap(fs);
    }
    res.history.push_back(fv[0]);
    res.iterations = iter + 1;
    if (simplex_diameter(v) < cfg.tol) {
      res.converged = true;
      break;
    }

    Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
    for (std::size_t i = 0; i + 1 < v.size(); ++i) c += v[i];
    c /= static_cast<double>(n);
    const std::size_t worst = v.size() - 1;

    const Eigen::VectorXd xr = c + cfg.reflection * (c - v[worst]);
    const double fr = f(xr);
    if (fr < fv[0]) {
      const Eigen::VectorXd xe = c + cfg.expansion * (xr - c);
      const double fe = f(xe);
      if (fe < fr) {
        v[worst] = xe;
        fv[worst] = fe;
      } else {
        v[worst] = xr;
        fv[worst] = fr;
      }
    } else if (fr < fv[worst - 1]) {
      v[worst] = xr;
      fv[worst] = fr;
    } else if (fr < fv[worst]) {
      const Eigen::VectorXd xc = c + cfg.contraction * (xr - c);
      const double fc = f(xc);
      if (fc <= fr) {
        v[worst] = xc;
        fv[worst] = fc;
      } else {
        for (std::size_t i = 1; i < v.size(); ++i) {
          v[i] = v[0] + cfg.shrink * (v[i] - v[0]);
          fv[i] = f(v[i]);
        }
      }
    } else {
      const Eigen::VectorXd xc = c + cfg.contraction * (v[worst] - c);
      const double fc = f(xc);
      if (fc < fv[worst]) {
        v[worst] = xc;
        fv[worst] = fc;
      } else {
        for (std::size_t i = 1; i < v.size(); ++i) {
          v[i] = v[0] + cfg.shrink * (v[i] - v[0]);
          fv[i] = f(v[i]);
        }
      }
    }
  }

  const auto best = static_cast<std::size_t>(
      std::min_element(fv.begin(), fv.end()) - fv.begin());
  res.x = v[best];
  res.value = fv[best];
  return res;
}

double quadratic_objective(const Vec2& omega, const ConvexPolygon& poly) {
  const Eigen::VectorXd d2 =
      (poly.vertices().colwise() - omega).colwise().squaredNorm().transpose();
  return poly.exterior_angles().dot(d2);
}

OptimizationResult optimal_omega_analytic(const PointSet& ps) {
  if (ps.dim() != 2) {
    throw std::invalid_argument(
        "the analytic optimum is available in 2D only; use the numeric route");
  }
  const ConvexPolygon hull = convex_hull_2d(ps);
  OptimizationResult r;
  r.omega_star = steiner_center_angles(hull).center;
  r.objective_area = union_area_exact(build_cover(ps, r.omega_star)).union_area;
  r.method = OptimizeMethod::analytic;
  r.converged = true;
  return r;
}

OptimizationResult optimal_omega_numeric(const PointSet& ps,
                                         const NMConfig& cfg) {
  NMConfig c = cfg;
  if (c.tol <= 0.0) c.tol = (ps.dim() == 2) ? 1e-10 : 1e-4;
  double edge = c.initial_edge;
  if (edge <= 0.0) {
    const double diag = bbox_diagonal(ps.points());
    edge = 0.1 * (diag > 0.0 ? diag : 1.0);
  }

  std::function<double(const Eigen::VectorXd&)> objective;
  if (ps.dim() == 2) {
    objective = [&ps](const Eigen::VectorXd& w) {
      return union_area_exact(build_cover(ps, w)).union_area;
    };
  } else {
    objective = [&ps, &c](const Eigen::VectorXd& w) {
      return union_measure_mc(build_cover(ps, w), c.mc_samples, c.seed)
          .union_area;
    };
  }

  const Eigen::VectorXd x0 = ps.points().rowwise().mean();
  const NMResult nm = nelder_mead(objective, x0, edge, c);

  OptimizationResult r;
  r.omega_star = nm.x;
  r.objective_area = nm.value;
  r.method = OptimizeMethod::nelder_mead;
  r.iterations = nm.iterations;
  r.converged = nm.converged;
  r.objective_history = nm.history;
  return r;
}

DominanceReport dominance_probe(const PointSet& ps, std::int64_t trials,
                                std::uint64_t seed) {
  if (ps.dim() != 2) {
    throw std::invalid_argument("dominance probe is 2D only");
  }
  if (trials < 1) throw std::invalid_argument("at least one trial required");

  const ConvexPolygon hull = convex_hull_2d(ps);
  DominanceReport rep;
  rep.trials = trials;
  rep.steiner_anchor = steiner_center_angles(hull).center;
  rep.steiner_area =
      union_area_exact(build_cover(ps, rep.steiner_anchor)).union_area;
  rep.min_gap = std::numeric_limits<double>::infinity();

  SplitMix64 rng(seed);
  const std::int64_t n_in = trials - trials / 2;
  const Eigen::MatrixXd inside = sample_hull_points(ps, n_in, rng.next());

  // Exterior anchors: rejection-sampled from a 3x bounding box (degenerate
  // axes widened so segments and single points still get a real box).
  const Eigen::Vector2d lo = ps.points().rowwise().minCoeff();
  const Eigen::Vector2d hi = ps.points().rowwise().maxCoeff();
  const Eigen::Vector2d mid = 0.5 * (lo + hi);
  const Eigen::Vector2d half =
      1.5 * (hi - lo).cwiseMax(Eigen::Vector2d::Ones());

  auto probe = [&](const Vec2& w) {
    const double gap =
        union_area_exact(build_cover(ps, w)).union_area - rep.steiner_area;
    rep.min_gap = std::min(rep.min_gap, gap);
    if (gap < -1e-9) ++rep.violations;
  };

  for (Eigen::Index s = 0; s < inside.cols(); ++s) probe(inside.col(s));
  for (std::int64_t s = 0; s < trials / 2; ++s) {
    Vec2 w;
    do {
      w = mid + Vec2(half.x() * (2.0 * rng.uniform01() - 1.0),
                     half.y() * (2.0 * rng.uniform01() - 1.0));
    } while (point_in_hull(w, hull));
    probe(w);
  }
  return rep;
}

}  // namespace scov
