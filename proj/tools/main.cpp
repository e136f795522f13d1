#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "scov/disc_cover.hpp"
#include "scov/io.hpp"

namespace {

using nlohmann::json;

std::string join_argv(int argc, char** argv) {
  std::ostringstream ss;
  for (int i = 0; i < argc; ++i) {
    if (i) ss << ' ';
    ss << argv[i];
  }
  return ss.str();
}

Eigen::VectorXd parse_omega(const std::string& text, int dim) {
  std::vector<double> vals;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      vals.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("--omega: invalid number '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(vals.size()) != dim) {
    throw std::invalid_argument(
        "--omega expects " + std::to_string(dim) +
        " comma-separated coordinates to match the input dimension");
  }
  Eigen::VectorXd w(dim);
  for (int i = 0; i < dim; ++i) w[i] = vals[static_cast<std::size_t>(i)];
  return w;
}

scov::PointSet load_points(const std::string& path, std::string& bytes_out) {
  bytes_out = scov::read_file(path);
  return scov::parse_points(bytes_out, scov::detect_format(path));
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  const std::string command = join_argv(argc, argv);

  CLI::App app{"anchored disc/sphere covers of point constellations"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto* hull_cmd = app.add_subcommand("hull", "convex hull with exterior angles");
  std::string h_in;
  hull_cmd->add_option("in", h_in, "input points (.json or .csv)")->required();
  hull_cmd->callback([&] {
    std::string bytes;
    const scov::PointSet ps = load_points(h_in, bytes);
    emit(scov::make_run_report(command, bytes,
                               scov::to_json(scov::convex_hull_2d(ps))));
  });

  auto* steiner_cmd = app.add_subcommand("steiner", "Steiner center of the hull");
  std::string s_in, s_method = "angles";
  int s_nodes = 4096;
  std::int64_t s_samples = 1000000;
  std::uint64_t s_seed = 1;
  steiner_cmd->add_option("in", s_in, "input points")->required();
  steiner_cmd->add_option("--method", s_method, "angles | projection | directional")
      ->check(CLI::IsMember({"angles", "projection", "directional"}))
      ->capture_default_str();
  steiner_cmd->add_option("--nodes", s_nodes, "quadrature nodes (projection)")
      ->capture_default_str();
  steiner_cmd->add_option("--samples", s_samples, "directions (directional)")
      ->capture_default_str();
  steiner_cmd->add_option("--seed", s_seed, "random seed")->capture_default_str();
  steiner_cmd->callback([&] {
    std::string bytes;
    const scov::PointSet ps = load_points(s_in, bytes);
    scov::SteinerResult r;
    if (s_method == "angles") {
      r = scov::steiner_center_angles(scov::convex_hull_2d(ps));
    } else if (s_method == "projection") {
      r = scov::steiner_center_projection(ps, s_nodes);
    } else {
      r = scov::steiner_point_directional(ps, s_samples, s_seed, 0);
    }
    emit(scov::make_run_report(command, bytes, scov::to_json(r)));
  });

  auto* area_cmd = app.add_subcommand("area", "area/volume of the disc union");
  std::string a_in, a_omega, a_method = "exact";
  std::int64_t a_samples = 1000000;
  std::uint64_t a_seed = 1;
  area_cmd->add_option("in", a_in, "input points")->required();
  area_cmd->add_option("--omega", a_omega, "anchor, e.g. 0.5,0.5")->required();
  area_cmd->add_option("--method", a_method, "exact | closed-form | mc")
      ->check(CLI::IsMember({"exact", "closed-form", "mc"}))
      ->capture_default_str();
  area_cmd->add_option("--samples", a_samples, "Monte Carlo samples")
      ->capture_default_str();
  area_cmd->add_option("--seed", a_seed, "random seed")->capture_default_str();
  area_cmd->callback([&] {
    std::string bytes;
    const scov::PointSet ps = load_points(a_in, bytes);
    const scov::DiscCover cover =
        scov::build_cover(ps, parse_omega(a_omega, ps.dim()));
    scov::AreaReport r;
    if (a_method == "closed-form") {
      try {
        r = scov::excess_area_closed_form(cover);
      } catch (const std::domain_error& e) {
        throw std::domain_error(std::string(e.what()) +
                                " (re-run with --method exact)");
      }
    } else if (a_method == "exact") {
      r = scov::union_area_exact(cover);
    } else {
      r = scov::union_measure_mc(cover, a_samples, a_seed, 0);
    }
    emit(scov::make_run_report(command, bytes, scov::to_json(r)));
  });

  auto* cover_cmd =
      app.add_subcommand("cover-check", "verify hull coverage empirically");
  std::string c_in, c_omega;
  std::int64_t c_n = 10000;
  std::uint64_t c_seed = 1;
  cover_cmd->add_option("in", c_in, "input points")->required();
  cover_cmd->add_option("--omega", c_omega, "anchor")->required();
  cover_cmd->add_option("-n,--samples", c_n, "hull samples")->capture_default_str();
  cover_cmd->add_option("--seed", c_seed, "random seed")->capture_default_str();
  cover_cmd->callback([&] {
    std::string bytes;
    const scov::PointSet ps = load_points(c_in, bytes);
    const scov::CoverageReport r =
        scov::verify_coverage(ps, parse_omega(c_omega, ps.dim()), c_n, c_seed);
    emit(scov::make_run_report(command, bytes, scov::to_json(r)));
    if (r.violations != 0) exit_code = 1;
  });

  auto* opt_cmd =
      app.add_subcommand("optimize", "anchor minimizing the union area");
  std::string o_in;
  bool o_numeric = false;
  double o_tol = 0.0;
  std::int64_t o_mc = 200000;
  std::uint64_t o_seed = 1;
  opt_cmd->add_option("in", o_in, "input points")->required();
  opt_cmd->add_flag("--numeric", o_numeric,
                    "derivative-free minimization instead of the closed form "
                    "(implied for 3D input)");
  opt_cmd->add_option("--tol", o_tol, "simplex-diameter stop (0 = default)")
      ->capture_default_str();
  opt_cmd->add_option("--mc-samples", o_mc, "3D objective samples")
      ->capture_default_str();
  opt_cmd->add_option("--seed", o_seed, "3D objective seed")->capture_default_str();
  opt_cmd->callback([&] {
    std::string bytes;
    const scov::PointSet ps = load_points(o_in, bytes);
    scov::OptimizationResult r;
    if (o_numeric || ps.dim() == 3) {
      scov::NMConfig cfg;
      cfg.tol = o_tol;
      cfg.mc_samples = o_mc;
      cfg.seed = o_seed;
      r = scov::optimal_omega_numeric(ps, cfg);
    } else {
      r = scov::optimal_omega_analytic(ps);
    }
    emit(scov::make_run_report(command, bytes, scov::to_json(r)));
  });

  auto* conj_cmd = app.add_subcommand(
      "conjecture3d", "numeric-argmin vs Steiner-point experiment in 3D");
  std::string j_in;
  int j_random = 0, j_trials = 1;
  std::int64_t j_mc = 100000, j_dir = 100000;
  std::uint64_t j_seed = 1;
  conj_cmd->add_option("in", j_in, "input points (3D)");
  conj_cmd->add_option("--random", j_random,
                       "draw this many unit-cube points per trial instead");
  conj_cmd->add_option("--trials", j_trials, "number of trials")
      ->capture_default_str();
  conj_cmd->add_option("--mc-samples", j_mc, "volume samples per evaluation")
      ->capture_default_str();
  conj_cmd->add_option("--dir-samples", j_dir,
                       "directions for the Steiner estimate")
      ->capture_default_str();
  conj_cmd->add_option("--seed", j_seed, "master seed")->capture_default_str();
  conj_cmd->callback([&] {
    if (j_in.empty() == (j_random == 0)) {
      throw CLI::ValidationError("conjecture3d",
                                 "pass an input file or --random N, not both");
    }
    scov::ConjectureSuite suite;
    std::string bytes;
    if (!j_in.empty()) {
      const scov::PointSet ps = load_points(j_in, bytes);
      suite = scov::run_conjecture_suite(ps, j_trials, j_seed, j_mc, j_dir);
    } else {
      bytes = "random:" + std::to_string(j_random) +
              ":seed=" + std::to_string(j_seed);
      suite = scov::run_conjecture_suite(j_trials, j_random, j_seed, j_mc, j_dir);
    }
    emit(scov::make_run_report(command, bytes, scov::to_json(suite)));
  });

  auto* plot_cmd = app.add_subcommand("plot", "SVG figure of the cover");
  std::string p_in, p_omega, p_out;
  plot_cmd->add_option("in", p_in, "input points (2D)")->required();
  plot_cmd->add_option("--omega", p_omega, "anchor")->required();
  plot_cmd->add_option("-o,--out", p_out, "output .svg path")->required();
  plot_cmd->callback([&] {
    std::string bytes;
    const scov::PointSet ps = load_points(p_in, bytes);
    if (ps.dim() != 2) throw std::invalid_argument("plot requires 2D input");
    const Eigen::VectorXd w = parse_omega(p_omega, ps.dim());
    std::ofstream out(p_out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + p_out + "'");
    scov::render_svg(ps, scov::Vec2(w), out);
    emit(scov::make_run_report(command, bytes,
                               json{{"type", "plot"}, {"output", p_out}}));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    emit(json{{"error", e.what()}});
    return 1;
  }
  return exit_code;
}
