#include "scov/io.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "scov/disc_cover.hpp"

namespace scov {

namespace {

using nlohmann::json;

json vec_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json cols_to_json(const Eigen::MatrixXd& m) {
  json a = json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) a.push_back(vec_to_json(m.col(c)));
  return a;
}

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void fail_line(int lineno, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(lineno) + ": " + what);
}

PointSet parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  int lineno = 0;
  Eigen::Index dim = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trimmed(line);
    if (t.empty()) continue;
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= t.size()) {
      const std::size_t comma = t.find(',', pos);
      const std::string tok =
          trimmed(t.substr(pos, comma == std::string::npos ? std::string::npos
                                                           : comma - pos));
      try {
        std::size_t used = 0;
        const double val = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        row.push_back(val);
      } catch (const std::exception&) {
        fail_line(lineno, "invalid number '" + tok + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (dim == 0) {
      if (row.size() != 2 && row.size() != 3) {
        fail_line(lineno, "expected 2 or 3 coordinates, got " +
                              std::to_string(row.size()));
      }
      dim = static_cast<Eigen::Index>(row.size());
    } else if (static_cast<Eigen::Index>(row.size()) != dim) {
      fail_line(lineno, "expected " + std::to_string(dim) +
                            " coordinates, got " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("at least one point required");
  Eigen::MatrixXd pts(dim, static_cast<Eigen::Index>(rows.size()));
  for (std::size_t c = 0; c < rows.size(); ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      pts(r, static_cast<Eigen::Index>(c)) = rows[c][static_cast<std::size_t>(r)];
    }
  }
  return PointSet(pts);
}

PointSet parse_json_points(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("points")) {
    throw std::runtime_error(
        "input must be an object with \"dim\" and \"points\"");
  }
  if (!j["dim"].is_number_integer()) {
    throw std::runtime_error("\"dim\" must be 2 or 3");
  }
  const int dim = j["dim"].get<int>();
  if (dim != 2 && dim != 3) throw std::runtime_error("\"dim\" must be 2 or 3");
  const json& pts_j = j["points"];
  if (!pts_j.is_array() || pts_j.empty()) {
    throw std::runtime_error("at least one point required");
  }
  Eigen::MatrixXd pts(dim, static_cast<Eigen::Index>(pts_j.size()));
  for (std::size_t c = 0; c < pts_j.size(); ++c) {
    const json& p = pts_j[c];
    if (!p.is_array() || static_cast<int>(p.size()) != dim) {
      throw std::runtime_error("point " + std::to_string(c) +
                               " must be an array of " + std::to_string(dim) +
                               " numbers");
    }
    for (int r = 0; r < dim; ++r) {
      if (!p[static_cast<std::size_t>(r)].is_number()) {
        throw std::runtime_error("point " + std::to_string(c) +
                                 " must contain numbers only");
      }
      pts(r, static_cast<Eigen::Index>(c)) =
          p[static_cast<std::size_t>(r)].get<double>();
    }
  }
  return PointSet(pts);
}

const char* kind_name(HullKind k) {
  switch (k) {
    case HullKind::polygon: return "polygon";
    case HullKind::segment: return "segment";
    case HullKind::point: return "point";
  }
  return "polygon";
}

const char* method_name(SteinerMethod m) {
  switch (m) {
    case SteinerMethod::angles: return "angles";
    case SteinerMethod::projection: return "projection";
    case SteinerMethod::directional: return "directional";
  }
  return "angles";
}

const char* method_name(AreaMethod m) {
  switch (m) {
    case AreaMethod::closed_form: return "closed_form";
    case AreaMethod::exact: return "exact";
    case AreaMethod::monte_carlo: return "monte_carlo";
  }
  return "exact";
}

std::string fmt6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

InputFormat detect_format(const std::string& path) {
  const std::size_t dot = path.find_last_of('.');
  if (dot != std::string::npos && path.substr(dot) == ".csv") {
    return InputFormat::csv;
  }
  return InputFormat::json;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PointSet parse_points(const std::string& text, InputFormat fmt) {
  return fmt == InputFormat::csv ? parse_csv(text) : parse_json_points(text);
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json to_json(const PointSet& ps) {
  return {{"dim", ps.dim()}, {"points", cols_to_json(ps.points())}};
}

nlohmann::json to_json(const ConvexPolygon& poly) {
  json j;
  j["type"] = "hull";
  j["kind"] = kind_name(poly.kind());
  j["vertices"] = cols_to_json(poly.vertices());
  j["exterior_angles"] = vec_to_json(poly.exterior_angles());
  j["area"] = polygon_area(poly);
  return j;
}

nlohmann::json to_json(const SteinerResult& r) {
  json j;
  j["type"] = "steiner_result";
  j["method"] = method_name(r.method);
  j["center"] = vec_to_json(r.center);
  j["samples_or_nodes"] = r.samples_or_nodes;
  if (r.standard_error) j["stderr"] = *r.standard_error;
  return j;
}

nlohmann::json to_json(const AreaReport& r) {
  json j;
  j["type"] = "area_report";
  j["method"] = method_name(r.method);
  j["union_area"] = r.union_area;
  if (r.hull_area) j["hull_area"] = *r.hull_area;
  if (r.excess_area) j["excess_area"] = *r.excess_area;
  if (r.standard_error) j["stderr"] = *r.standard_error;
  if (r.samples) j["samples"] = *r.samples;
  return j;
}

nlohmann::json to_json(const CoverageReport& r) {
  json j;
  j["type"] = "coverage_report";
  j["samples"] = r.samples;
  j["violations"] = r.violations;
  j["numerical_artifacts"] = r.numerical_artifacts;
  j["worst_margin"] = r.worst_margin;
  json w = json::array();
  for (const auto& wit : r.witnesses) {
    w.push_back({{"q", vec_to_json(wit.q)},
                 {"projections", vec_to_json(wit.projections)},
                 {"numerical", wit.numerical}});
  }
  j["witnesses"] = w;
  return j;
}

nlohmann::json to_json(const OptimizationResult& r) {
  json j;
  j["type"] = "optimization_result";
  j["method"] =
      r.method == OptimizeMethod::analytic ? "analytic" : "nelder_mead";
  j["omega_star"] = vec_to_json(r.omega_star);
  j["objective_area"] = r.objective_area;
  j["converged"] = r.converged;
  if (r.iterations) j["iterations"] = *r.iterations;
  if (!r.objective_history.empty()) j["objective_history"] = r.objective_history;
  return j;
}

nlohmann::json to_json(const ConjectureReport& r) {
  json j;
  j["type"] = "conjecture_report";
  j["points"] = to_json(r.points);
  j["omega_numeric"] = vec_to_json(r.omega_numeric);
  j["steiner_estimate"] = vec_to_json(r.steiner_estimate);
  j["steiner_stderr"] = r.steiner_stderr;
  j["distance"] = r.distance;
  j["bbox_diagonal"] = r.bbox_diagonal;
  j["normalized_distance"] = r.normalized_distance;
  j["volume_at_numeric"] = r.volume_at_numeric;
  j["volume_at_numeric_stderr"] = r.volume_at_numeric_stderr;
  j["volume_at_steiner"] = r.volume_at_steiner;
  j["volume_at_steiner_stderr"] = r.volume_at_steiner_stderr;
  j["mc_samples"] = r.mc_samples;
  j["dir_samples"] = r.dir_samples;
  j["seed"] = r.seed;
  j["nm_iterations"] = r.nm_iterations;
  j["nm_converged"] = r.nm_converged;
  return j;
}

nlohmann::json to_json(const ConjectureSuite& s) {
  json j;
  j["type"] = "conjecture_suite";
  json reports = json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  j["reports"] = reports;
  j["summary"] = {
      {"trials", s.summary.trials},
      {"max_normalized_distance", s.summary.max_normalized_distance},
      {"mean_normalized_distance", s.summary.mean_normalized_distance},
      {"steiner_better_beyond_noise", s.summary.steiner_better_beyond_noise},
      {"gate_note",
       "distance thresholds here are reproducibility gates for this tool, "
       "not evidence that the minimizing anchor provably equals the Steiner "
       "point"},
  };
  return j;
}

nlohmann::json make_run_report(const std::string& command,
                               const std::string& input_bytes,
                               nlohmann::json payload) {
  json j;
  j["tool_version"] = kToolVersion;
  j["spec_version"] = kFormatVersion;
  j["command"] = command;
  j["inputs_digest"] = fnv1a_hex(input_bytes);
  j["payload"] = std::move(payload);
  return j;
}

void render_svg(const PointSet& ps, const Vec2& omega, std::ostream& out) {
  if (ps.dim() != 2) throw std::invalid_argument("SVG rendering is 2D only");
  const DiscCover cover = build_cover(ps, omega);
  const ConvexPolygon hull = convex_hull_2d(ps);
  const Vec2 steiner = steiner_center_angles(hull).center;

  // Disc bounding box, padded 5%. All-zero-radius covers (a single point at
  // the anchor) get a unit half-extent so the box never collapses.
  Vec2 lo = omega, hi = omega;
  bool any = false;
  for (Eigen::Index i = 0; i < cover.size(); ++i) {
    const double r = cover.radii()[i];
    if (r <= 0.0) continue;
    const Vec2 c = cover.centers().col(i);
    const Vec2 clo(c.x() - r, c.y() - r), chi(c.x() + r, c.y() + r);
    lo = any ? Vec2(lo.cwiseMin(clo)) : clo;
    hi = any ? Vec2(hi.cwiseMax(chi)) : chi;
    any = true;
  }
  if (!any) {
    lo = omega - Vec2::Ones();
    hi = omega + Vec2::Ones();
  }
  const double pad = 0.05 * (hi - lo).maxCoeff();
  lo.array() -= pad;
  hi.array() += pad;
  const double w = hi.x() - lo.x(), h = hi.y() - lo.y();
  const double scale = std::max(w, h);
  const double sw = 0.004 * scale;   // stroke width
  const double mr = 0.015 * scale;   // marker radius
  const double dr = 0.6 * mr;        // point-dot radius

  // The y axis is flipped by hand (SVG y grows downward), so every emitted
  // y coordinate is negated and the viewBox starts at -max_y.
  auto fy = [](double y) { return -y; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt6(lo.x())
      << " " << fmt6(fy(hi.y())) << " " << fmt6(w) << " " << fmt6(h) << "\">\n";

  if (hull.kind() != HullKind::point) {
    out << "  <polygon points=\"";
    for (Eigen::Index i = 0; i < hull.size(); ++i) {
      if (i) out << " ";
      out << fmt6(hull.vertex(i).x()) << "," << fmt6(fy(hull.vertex(i).y()));
    }
    out << "\" fill=\"#a8dadc\" fill-opacity=\"0.35\" stroke=\"#457b9d\" "
           "stroke-width=\""
        << fmt6(sw) << "\"/>\n";
  }

  for (Eigen::Index i = 0; i < cover.size(); ++i) {
    out << "  <circle cx=\"" << fmt6(cover.centers()(0, i)) << "\" cy=\""
        << fmt6(fy(cover.centers()(1, i))) << "\" r=\""
        << fmt6(cover.radii()[i]) << "\" fill=\"none\" stroke=\"#1d3557\" "
        << "stroke-width=\"" << fmt6(sw) << "\"/>\n";
  }

  for (Eigen::Index i = 0; i < ps.size(); ++i) {
    const double x = ps.points()(0, i), y = fy(ps.points()(1, i));
    out << "  <path class=\"marker point\" d=\"M " << fmt6(x + dr) << " "
        << fmt6(y) << " A " << fmt6(dr) << " " << fmt6(dr) << " 0 1 0 "
        << fmt6(x - dr) << " " << fmt6(y) << " A " << fmt6(dr) << " "
        << fmt6(dr) << " 0 1 0 " << fmt6(x + dr) << " " << fmt6(y)
        << " Z\" fill=\"#1d3557\"/>\n";
  }

  {
    const double x = omega.x(), y = fy(omega.y());
    out << "  <path class=\"marker anchor\" d=\"M " << fmt6(x - mr) << " "
        << fmt6(y - mr) << " L " << fmt6(x + mr) << " " << fmt6(y + mr)
        << " M " << fmt6(x - mr) << " " << fmt6(y + mr) << " L "
        << fmt6(x + mr) << " " << fmt6(y - mr)
        << "\" stroke=\"#e63946\" stroke-width=\"" << fmt6(1.5 * sw)
        << "\" fill=\"none\"/>\n";
  }

  {
    const double x = steiner.x(), y = fy(steiner.y());
    const double s = mr / std::sqrt(2.0);
    out << "  <path class=\"marker steiner\" d=\"M " << fmt6(x - mr) << " "
        << fmt6(y) << " L " << fmt6(x + mr) << " " << fmt6(y) << " M "
        << fmt6(x) << " " << fmt6(y - mr) << " L " << fmt6(x) << " "
        << fmt6(y + mr) << " M " << fmt6(x - s) << " " << fmt6(y - s) << " L "
        << fmt6(x + s) << " " << fmt6(y + s) << " M " << fmt6(x - s) << " "
        << fmt6(y + s) << " L " << fmt6(x + s) << " " << fmt6(y - s)
        << "\" stroke=\"#2a9d8f\" stroke-width=\"" << fmt6(1.5 * sw)
        << "\" fill=\"none\"/>\n";
  }

  out << "</svg>\n";
}

}  // namespace scov
