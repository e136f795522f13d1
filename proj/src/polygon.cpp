#include "scov/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace scov {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool lex_less(const Vec2& a, const Vec2& b) {
  return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
}

// Rotates a vertex cycle so it starts at the lexicographically smallest one.
Eigen::Matrix2Xd rotate_to_lex_min(const Eigen::Matrix2Xd& v) {
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i < v.cols(); ++i) {
    if (lex_less(v.col(i), v.col(start))) start = i;
  }
  Eigen::Matrix2Xd out(2, v.cols());
  for (Eigen::Index i = 0; i < v.cols(); ++i) {
    out.col(i) = v.col((start + i) % v.cols());
  }
  return out;
}

Eigen::VectorXd turn_angles(const Eigen::Matrix2Xd& v) {
  const Eigen::Index m = v.cols();
  Eigen::VectorXd ang(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Vec2 prev = v.col((i + m - 1) % m);
    const Vec2 next = v.col((i + 1) % m);
    const Vec2 e0 = v.col(i) - prev;
    const Vec2 e1 = next - v.col(i);
    ang[i] = std::atan2(cross2(e0, e1), e0.dot(e1));
  }
  return ang;
}

}  // namespace

ConvexPolygon ConvexPolygon::from_ccw_cycle(const Eigen::Matrix2Xd& verts) {
  std::vector<Vec2> v;
  v.reserve(static_cast<std::size_t>(verts.cols()));
  for (Eigen::Index i = 0; i < verts.cols(); ++i) {
    v.push_back(verts.col(i));
  }

  // Merge consecutive near-duplicates (including the wrap-around pair).
  auto dedup = [&] {
    std::vector<Vec2> out;
    for (const Vec2& p : v) {
      if (out.empty() || (p - out.back()).cwiseAbs().maxCoeff() > kDedupEps) out.push_back(p);
    }
    while (out.size() > 1 &&
           (out.front() - out.back()).cwiseAbs().maxCoeff() <= kDedupEps) {
      out.pop_back();
    }
    v = std::move(out);
  };
  dedup();

  // Drop vertices whose turn is collinear within tolerance; removals cascade.
  bool removed = true;
  while (removed && v.size() >= 3) {
    removed = false;
    std::vector<Vec2> out;
    const std::size_t m = v.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Vec2& prev = out.empty() ? v[(i + m - 1) % m] : out.back();
      const Vec2& cur = v[i];
      const Vec2& next = v[(i + 1) % m];
      const Vec2 base = next - prev;
      const double c = cross2(cur - prev, base);
      if (std::abs(c) <= kGeomEps * base.norm()) {
        removed = true;  // cur lies on [prev, next] within tolerance
        continue;
      }
      out.push_back(cur);
    }
    v = std::move(out);
    dedup();
  }

  if (v.empty()) throw std::invalid_argument("empty vertex cycle");

  if (v.size() == 1) {
    Eigen::Matrix2Xd m(2, 1);
    m.col(0) = v[0];
    Eigen::VectorXd a(1);
    a[0] = kTwoPi;
    return ConvexPolygon(HullKind::point, std::move(m), std::move(a));
  }

  if (v.size() == 2) {
    Eigen::Matrix2Xd m(2, 2);
    if (lex_less(v[1], v[0])) std::swap(v[0], v[1]);
    m.col(0) = v[0];
    m.col(1) = v[1];
    Eigen::VectorXd a(2);
    a << kPi, kPi;
    return ConvexPolygon(HullKind::segment, std::move(m), std::move(a));
  }

  Eigen::Matrix2Xd m(2, static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = v[i];
  m = rotate_to_lex_min(m);

  Eigen::VectorXd ang = turn_angles(m);
  if ((ang.array() <= 0.0).any()) {
    throw std::invalid_argument("vertex cycle is not convex CCW");
  }
  if (std::abs(ang.sum() - kTwoPi) > 1e-9) {
    throw std::invalid_argument("vertex cycle turn angles do not sum to 2*pi");
  }
  return ConvexPolygon(HullKind::polygon, std::move(m), std::move(ang));
}

ConvexPolygon convex_hull_2d(const PointSet& ps) {
  if (ps.dim() != 2) throw std::invalid_argument("convex_hull_2d requires 2D points");
  const Eigen::Index n = ps.size();
  std::vector<Vec2> p;
  p.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) p.push_back(ps.points().col(i));
  std::sort(p.begin(), p.end(), lex_less);

  if (p.size() == 1) {
    Eigen::Matrix2Xd m(2, 1);
    m.col(0) = p[0];
    return ConvexPolygon::from_ccw_cycle(m);
  }

  // Andrew monotone chain; pops within kGeomEps of collinear so boundary
  // points on an edge never survive as vertices.
  auto build = [&](auto begin, auto end) {
    std::vector<Vec2> h;
    for (auto it = begin; it != end; ++it) {
      while (h.size() >= 2) {
        const Vec2 base = *it - h[h.size() - 2];
        const double c = cross2(h.back() - h[h.size() - 2], base);
        if (c <= kGeomEps * base.norm()) {
          h.pop_back();
        } else {
          break;
        }
      }
      h.push_back(*it);
    }
    return h;
  };
  std::vector<Vec2> lower = build(p.begin(), p.end());
  std::vector<Vec2> upper = build(p.rbegin(), p.rend());

  std::vector<Vec2> cycle(lower.begin(), lower.end() - 1);
  cycle.insert(cycle.end(), upper.begin(), upper.end() - 1);

  Eigen::Matrix2Xd m(2, static_cast<Eigen::Index>(cycle.size()));
  for (std::size_t i = 0; i < cycle.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = cycle[i];
  return ConvexPolygon::from_ccw_cycle(m);
}

const Eigen::VectorXd& exterior_angles(const ConvexPolygon& poly) {
  return poly.exterior_angles();
}

double polygon_area(const ConvexPolygon& poly) {
  if (poly.kind() != HullKind::polygon) return 0.0;
  const auto& v = poly.vertices();
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.cols(); ++i) {
    const Eigen::Index j = (i + 1) % v.cols();
    s += cross2(v.col(i), v.col(j));
  }
  return 0.5 * s;
}

bool point_in_hull(const Vec2& q, const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  switch (poly.kind()) {
    case HullKind::point:
      return (q - v.col(0)).norm() <= kGeomEps;
    case HullKind::segment: {
      const Vec2 a = v.col(0), b = v.col(1);
      const Vec2 d = b - a;
      const double t = std::clamp((q - a).dot(d) / d.squaredNorm(), 0.0, 1.0);
      return (q - (a + t * d)).norm() <= kGeomEps;
    }
    case HullKind::polygon: {
      for (Eigen::Index i = 0; i < v.cols(); ++i) {
        const Vec2 a = v.col(i);
        const Vec2 e = Vec2(v.col((i + 1) % v.cols())) - a;
        if (cross2(e, Vec2(q - a)) < -kGeomEps * e.norm()) return false;
      }
      return true;
    }
  }
  return false;
}

namespace {

// Vertex cycle reordered to start at the bottommost (then leftmost) vertex,
// which makes the CCW edge angles nondecreasing in [0, 2*pi).
std::vector<Vec2> bottom_start_cycle(const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i < v.cols(); ++i) {
    if (v(1, i) < v(1, start) ||
        (v(1, i) == v(1, start) && v(0, i) < v(0, start))) {
      start = i;
    }
  }
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(v.cols()));
  for (Eigen::Index i = 0; i < v.cols(); ++i) out.push_back(v.col((start + i) % v.cols()));
  return out;
}

double edge_angle(const Vec2& e) {
  double a = std::atan2(e.y(), e.x());
  if (a < 0.0) a += kTwoPi;
  return a;
}

}  // namespace

ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b) {
  // A degenerate point acts as a translation.
  if (a.kind() == HullKind::point) {
    Eigen::Matrix2Xd v = b.vertices().colwise() + Vec2(a.vertex(0));
    return ConvexPolygon::from_ccw_cycle(v);
  }
  if (b.kind() == HullKind::point) return minkowski_sum(b, a);

  const std::vector<Vec2> va = bottom_start_cycle(a);
  const std::vector<Vec2> vb = bottom_start_cycle(b);
  const std::size_t na = va.size(), nb = vb.size();

  auto edge = [](const std::vector<Vec2>& v, std::size_t i) {
    return Vec2(v[(i + 1) % v.size()] - v[i]);
  };

  std::vector<Vec2> out;
  out.reserve(na + nb);
  Vec2 cur = va[0] + vb[0];
  std::size_t i = 0, j = 0;
  while (i < na || j < nb) {
    out.push_back(cur);
    if (i == na) {
      cur += edge(vb, j++);
    } else if (j == nb) {
      cur += edge(va, i++);
    } else {
      const Vec2 ea = edge(va, i);
      const Vec2 eb = edge(vb, j);
      const double pa = edge_angle(ea), pb = edge_angle(eb);
      if (std::abs(pa - pb) <= 1e-12) {
        cur += ea + eb;  // parallel edges fuse
        ++i;
        ++j;
      } else if (pa < pb) {
        cur += ea;
        ++i;
      } else {
        cur += eb;
        ++j;
      }
    }
  }

  Eigen::Matrix2Xd m(2, static_cast<Eigen::Index>(out.size()));
  for (std::size_t k = 0; k < out.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = out[k];
  return ConvexPolygon::from_ccw_cycle(m);
}

ConvexPolygon scale_polygon(const ConvexPolygon& poly, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("scale factor must be positive");
  Eigen::Matrix2Xd v = poly.vertices() * t;
  return ConvexPolygon(poly.kind(), std::move(v), poly.exterior_angles());
}

Vec2 project_point_on_line(const Vec2& q, const Vec2& a, const Vec2& b) {
  const Vec2 d = b - a;
  const double t = (q - a).dot(d) / d.squaredNorm();
  return a + t * d;
}

}  // namespace scov
