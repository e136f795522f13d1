#include "scov/steiner.hpp"

#include "scov/rng.hpp"

#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

namespace scov {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

SteinerResult steiner_center_angles(const ConvexPolygon& poly) {
  const Eigen::VectorXd& th = poly.exterior_angles();
  Eigen::Vector2d c = poly.vertices() * (th / kTwoPi);
  SteinerResult r;
  r.center = c;
  r.method = SteinerMethod::angles;
  r.samples_or_nodes = poly.size();
  return r;
}

SteinerResult steiner_center_projection(const PointSet& ps, int nodes) {
  if (ps.dim() != 2) {
    throw std::invalid_argument("projection route requires 2D points");
  }
  if (nodes < 16) throw std::invalid_argument("projection route requires nodes >= 16");

  const Eigen::MatrixXd& pts = ps.points();
  const double dt = kPi / nodes;
  Vec2 acc = Vec2::Zero();
  for (int k = 0; k < nodes; ++k) {
    const double t = (k + 0.5) * dt;
    const Vec2 u(std::cos(t), std::sin(t));
    const Eigen::VectorXd proj = pts.transpose() * u;
    acc += u * ((proj.minCoeff() + proj.maxCoeff()) * dt);
  }
  SteinerResult r;
  r.center = acc / kPi;
  r.method = SteinerMethod::projection;
  r.samples_or_nodes = nodes;
  return r;
}

DirectionalTally directional_argmax_tally(const PointSet& ps, std::int64_t samples,
                                          std::uint64_t seed, int shards) {
  if (samples < 1000) {
    throw std::invalid_argument("directional route requires samples >= 1000");
  }
  shards = resolve_shards(shards);
  const int dim = ps.dim();
  const Eigen::Index n = ps.size();
  const Eigen::MatrixXd& pts = ps.points();

  struct ShardAcc {
    Eigen::VectorXd sum, sumsq;
    Eigen::VectorXi hits;
  };
  std::vector<ShardAcc> acc(static_cast<std::size_t>(shards));
  std::vector<std::int64_t> counts(static_cast<std::size_t>(shards));
  const std::int64_t base = samples / shards;
  for (int k = 0; k < shards; ++k) {
    counts[static_cast<std::size_t>(k)] = base + (k < samples % shards ? 1 : 0);
  }

  auto run_shard = [&](int k) {
    SplitMix64 rng(seed + static_cast<std::uint64_t>(k));
    ShardAcc a{Eigen::VectorXd::Zero(dim), Eigen::VectorXd::Zero(dim),
               Eigen::VectorXi::Zero(n)};
    constexpr Eigen::Index kBatch = 4096;
    Eigen::MatrixXd dirs(dim, kBatch);
    std::int64_t left = counts[static_cast<std::size_t>(k)];
    while (left > 0) {
      const Eigen::Index b = static_cast<Eigen::Index>(std::min<std::int64_t>(left, kBatch));
      for (Eigen::Index s = 0; s < b; ++s) dirs.col(s) = rng.unit_direction(dim);
      const Eigen::MatrixXd proj = pts.transpose() * dirs.leftCols(b);  // n x b
      for (Eigen::Index s = 0; s < b; ++s) {
        Eigen::Index best = 0;
        double bestv = proj(0, s);
        for (Eigen::Index i = 1; i < n; ++i) {
          if (proj(i, s) > bestv) {  // strict: ties keep the lowest index
            bestv = proj(i, s);
            best = i;
          }
        }
        a.hits[best] += 1;
        a.sum += pts.col(best);
        a.sumsq += pts.col(best).cwiseAbs2();
      }
      left -= b;
    }
    acc[static_cast<std::size_t>(k)] = std::move(a);
  };

  if (shards == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(shards));
    for (int k = 0; k < shards; ++k) pool.emplace_back(run_shard, k);
    for (auto& t : pool) t.join();
  }

  // Combine in shard order so the result depends only on (seed, shards).
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd sumsq = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXi hits = Eigen::VectorXi::Zero(n);
  for (const auto& a : acc) {
    sum += a.sum;
    sumsq += a.sumsq;
    hits += a.hits;
  }

  DirectionalTally t;
  t.samples = samples;
  t.mean = sum / static_cast<double>(samples);
  t.hits = hits;
  if (samples > 1) {
    const double s = static_cast<double>(samples);
    Eigen::VectorXd var =
        (sumsq / s - t.mean.cwiseAbs2()).cwiseMax(0.0) * (s / (s - 1.0));
    t.standard_error = (var / s).cwiseSqrt();
  } else {
    t.standard_error = Eigen::VectorXd::Zero(dim);
  }
  return t;
}

SteinerResult steiner_point_directional(const PointSet& ps, std::int64_t samples,
                                        std::uint64_t seed, int shards) {
  const DirectionalTally t = directional_argmax_tally(ps, samples, seed, shards);
  SteinerResult r;
  r.center = t.mean;
  r.method = SteinerMethod::directional;
  r.standard_error = t.standard_error.norm();
  r.samples_or_nodes = samples;
  return r;
}

}  // namespace scov
