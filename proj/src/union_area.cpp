#include "scov/union_area.hpp"

#include "scov/polygon.hpp"
#include "scov/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

namespace scov {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

AreaReport excess_area_closed_form(const DiscCover& cover) {
  if (cover.dim() != 2) {
    throw std::invalid_argument("closed form requires a 2D cover");
  }
  const Vec2 omega = cover.anchor();
  const ConvexPolygon hull = convex_hull_2d(cover.source());
  if (!point_in_hull(omega, hull)) {
    throw std::domain_error(
        "anchor lies outside the convex hull; use the exact method");
  }
  const double hull_area = polygon_area(hull);
  const Eigen::VectorXd& th = hull.exterior_angles();
  const Eigen::VectorXd d2 =
      (hull.vertices().colwise() - omega).colwise().squaredNorm().transpose();
  const double excess = 0.25 * th.dot(d2) - 0.5 * hull_area;

  AreaReport r;
  r.hull_area = hull_area;
  r.excess_area = excess;
  r.union_area = hull_area + excess;
  r.method = AreaMethod::closed_form;
  return r;
}

AreaReport union_area_exact(const DiscCover& cover) {
  if (cover.dim() != 2) {
    throw std::invalid_argument("exact arrangement requires a 2D cover");
  }
  const Vec2 omega = cover.anchor();
  const ConvexPolygon hull = convex_hull_2d(cover.source());
  const double hull_area = polygon_area(hull);

  struct Item {
    Vec2 center;
    double radius;
    Vec2 point;  // the source point defining the disc
  };
  std::vector<Item> discs;
  for (Eigen::Index i = 0; i < cover.size(); ++i) {
    if (cover.radii()[i] > 0.0) {
      discs.push_back({cover.centers().col(i), cover.radii()[i],
                       cover.source().points().col(i)});
    }
  }

  // Drop discs contained in a single other disc; this removes the
  // internally tangent collinear pairs before arc decomposition.
  std::vector<bool> dropped(discs.size(), false);
  for (std::size_t i = 0; i < discs.size(); ++i) {
    for (std::size_t j = 0; j < discs.size(); ++j) {
      if (i == j) continue;
      const double d = (discs[i].center - discs[j].center).norm();
      if (d + discs[i].radius <= discs[j].radius + 1e-12) {
        dropped[i] = true;
        break;
      }
    }
  }
  std::vector<Item> active;
  for (std::size_t i = 0; i < discs.size(); ++i) {
    if (!dropped[i]) active.push_back(discs[i]);
  }

  double area = 0.0;
  std::vector<double> ang;
  for (std::size_t i = 0; i < active.size(); ++i) {
    const Item& di = active[i];
    ang.clear();
    auto push_angle = [&](const Vec2& p) {
      double a = std::atan2(p.y() - di.center.y(), p.x() - di.center.x());
      if (a < 0.0) a += kTwoPi;
      ang.push_back(a);
    };
    // The anchor is on every circle; register it once per circle rather than
    // recomputing it pairwise.
    push_angle(omega);
    for (std::size_t j = 0; j < active.size(); ++j) {
      if (i == j) continue;
      if (auto q = anchored_pair_second_intersection(omega, di.point, active[j].point)) {
        push_angle(*q);
      }
    }
    std::sort(ang.begin(), ang.end());
    ang.erase(std::unique(ang.begin(), ang.end(),
                          [](double a, double b) { return b - a <= 1e-12; }),
              ang.end());
    if (ang.size() > 1 && ang.front() + kTwoPi - ang.back() <= 1e-12) {
      ang.pop_back();
    }

    for (std::size_t k = 0; k < ang.size(); ++k) {
      const double a = ang[k];
      const double b = (k + 1 < ang.size()) ? ang[k + 1] : ang[0] + kTwoPi;
      if (b - a <= 1e-14) continue;
      const double mid = 0.5 * (a + b);
      const Vec2 p = di.center + di.radius * Vec2(std::cos(mid), std::sin(mid));
      bool interior = false;
      for (std::size_t j = 0; j < active.size(); ++j) {
        if (i == j) continue;
        const double r2 = active[j].radius * active[j].radius;
        if ((p - active[j].center).squaredNorm() < r2 * (1.0 - 1e-10)) {
          interior = true;
          break;
        }
      }
      if (interior) continue;
      // Green's theorem along the CCW arc a..b of circle (c, r).
      const double r = di.radius;
      const Vec2& c = di.center;
      area += 0.5 * (r * (c.x() * (std::sin(b) - std::sin(a)) -
                          c.y() * (std::cos(b) - std::cos(a))) +
                     r * r * (b - a));
    }
  }

  AreaReport r;
  r.hull_area = hull_area;
  r.union_area = area;
  r.excess_area = area - hull_area;
  r.method = AreaMethod::exact;
  return r;
}

AreaReport union_measure_mc(const DiscCover& cover, std::int64_t samples,
                            std::uint64_t seed, int shards) {
  if (samples < 10000) {
    throw std::invalid_argument("Monte Carlo measure requires samples >= 10^4");
  }
  shards = resolve_shards(shards);
  const int dim = cover.dim();

  // Tight bounding box over the positive-radius discs.
  Eigen::VectorXd lo = Eigen::VectorXd::Constant(dim, 0.0);
  Eigen::VectorXd hi = Eigen::VectorXd::Constant(dim, 0.0);
  std::vector<Eigen::Index> active;
  bool first = true;
  for (Eigen::Index i = 0; i < cover.size(); ++i) {
    const double ri = cover.radii()[i];
    if (ri <= 0.0) continue;
    active.push_back(i);
    const Eigen::VectorXd clo = (cover.centers().col(i).array() - ri).matrix();
    const Eigen::VectorXd chi = (cover.centers().col(i).array() + ri).matrix();
    if (first) {
      lo = clo;
      hi = chi;
      first = false;
    } else {
      lo = lo.cwiseMin(clo);
      hi = hi.cwiseMax(chi);
    }
  }

  AreaReport r;
  r.method = AreaMethod::monte_carlo;
  r.samples = samples;
  if (dim == 2) {
    const ConvexPolygon hull = convex_hull_2d(cover.source());
    r.hull_area = polygon_area(hull);
  }

  if (active.empty()) {
    r.union_area = 0.0;
    r.standard_error = 0.0;
    if (r.hull_area) r.excess_area = -*r.hull_area;
    return r;
  }

  const Eigen::VectorXd span = hi - lo;
  const double box = span.prod();

  std::vector<std::int64_t> counts(static_cast<std::size_t>(shards));
  const std::int64_t base = samples / shards;
  for (int k = 0; k < shards; ++k) {
    counts[static_cast<std::size_t>(k)] = base + (k < samples % shards ? 1 : 0);
  }
  std::vector<std::int64_t> hits(static_cast<std::size_t>(shards), 0);

  auto run_shard = [&](int k) {
    SplitMix64 rng(seed + static_cast<std::uint64_t>(k));
    constexpr Eigen::Index kBatch = 8192;
    Eigen::MatrixXd x(dim, kBatch);
    Eigen::Array<bool, Eigen::Dynamic, 1> hit(kBatch);
    std::int64_t h = 0, left = counts[static_cast<std::size_t>(k)];
    while (left > 0) {
      const Eigen::Index b = static_cast<Eigen::Index>(std::min<std::int64_t>(left, kBatch));
      for (Eigen::Index s = 0; s < b; ++s) {
        for (int d = 0; d < dim; ++d) x(d, s) = lo[d] + span[d] * rng.uniform01();
      }
      hit.head(b).setConstant(false);
      for (Eigen::Index i : active) {
        const double r2 = cover.radii()[i] * cover.radii()[i];
        const Eigen::VectorXd ci = cover.centers().col(i);
        hit.head(b) = hit.head(b) || ((x.leftCols(b).colwise() - ci)
                                          .colwise()
                                          .squaredNorm()
                                          .transpose()
                                          .array() <= r2);
      }
      h += hit.head(b).count();
      left -= b;
    }
    hits[static_cast<std::size_t>(k)] = h;
  };

  if (shards == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(shards));
    for (int k = 0; k < shards; ++k) pool.emplace_back(run_shard, k);
    for (auto& t : pool) t.join();
  }

  std::int64_t total_hits = 0;
  for (std::int64_t h : hits) total_hits += h;
  const double p = static_cast<double>(total_hits) / static_cast<double>(samples);
  r.union_area = box * p;
  r.standard_error = box * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  if (r.hull_area) r.excess_area = r.union_area - *r.hull_area;
  return r;
}

}  // namespace scov
