#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>

namespace scov {

/// SplitMix64: 64-bit-state generator (Steele, Lea & Flood). Chosen so that
/// sampled sequences are reproducible from a single documented seed; shard k
/// of a parallel run uses seed + k.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1): top 53 bits of next().
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1]; safe as a log() argument.
  double uniform01_open() {
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Box-Muller pair of independent standard normals.
  void normal_pair(double& z0, double& z1) {
    const double u1 = uniform01_open();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * 3.141592653589793238462643383279502884 * u2;
    z0 = r * std::cos(t);
    z1 = r * std::sin(t);
  }

  /// Uniform direction on S^{dim-1}: ceil(dim/2) Box-Muller pairs drawn per
  /// sample (surplus normal discarded), vector normalized.
  Eigen::VectorXd unit_direction(int dim) {
    Eigen::VectorXd g(dim);
    for (;;) {
      for (int i = 0; i < dim; i += 2) {
        double z0, z1;
        normal_pair(z0, z1);
        g[i] = z0;
        if (i + 1 < dim) g[i + 1] = z1;
      }
      const double n = g.norm();
      if (n > 1e-12) return g / n;
    }
  }

private:
  std::uint64_t state_;
};

/// Shard count for sample-parallel loops: STEINER_COVER_THREADS when set to a
/// positive integer, else 1. Results are deterministic per (seed, shards).
int shard_count_from_env();

/// Resolves a user-facing shard argument: values < 1 mean "from environment".
int resolve_shards(int shards);

}  // namespace scov
