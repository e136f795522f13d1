#pragma once

#include <iostream>
#include <string>

#include "json.hpp"

#include "scov/conjecture.hpp"
#include "scov/coverage.hpp"
#include "scov/optimize.hpp"
#include "scov/polygon.hpp"
#include "scov/steiner.hpp"
#include "scov/types.hpp"
#include "scov/union_area.hpp"

namespace scov {

inline constexpr const char* kToolVersion = "0.1.0";
// Version of the report/input format contract, independent of the tool build.
inline constexpr const char* kFormatVersion = "1.0";

enum class InputFormat { json, csv };

/// .csv extension selects CSV; everything else is treated as JSON.
InputFormat detect_format(const std::string& path);

/// Whole-file read; throws std::runtime_error when unreadable.
std::string read_file(const std::string& path);

/// JSON shape: {"dim": 2, "points": [[x, y], ...]} (optional "name" ignored).
/// CSV: one comma-separated point per line, dimension inferred from the first
/// row. Parse errors carry the 1-based line number. Duplicate points merge
/// per the PointSet rule.
PointSet parse_points(const std::string& text, InputFormat fmt);

/// FNV-1a 64-bit digest of the raw input bytes, as 16 hex characters.
std::string fnv1a_hex(const std::string& bytes);

nlohmann::json to_json(const PointSet& ps);
nlohmann::json to_json(const ConvexPolygon& poly);
nlohmann::json to_json(const SteinerResult& r);
nlohmann::json to_json(const AreaReport& r);
nlohmann::json to_json(const CoverageReport& r);
nlohmann::json to_json(const OptimizationResult& r);
nlohmann::json to_json(const ConjectureReport& r);
nlohmann::json to_json(const ConjectureSuite& s);

/// Report envelope printed by every subcommand: tool/format versions, the
/// command line, a digest of the input bytes and the tagged payload.
/// Serialization is lossless: doubles are emitted with shortest-round-trip
/// precision (up to 17 significant digits).
nlohmann::json make_run_report(const std::string& command,
                               const std::string& input_bytes,
                               nlohmann::json payload);

/// Standalone SVG: the anchored discs (stroked circles), the hull (filled,
/// translucent), the input points (dots), the anchor (cross) and the Steiner
/// center (star). viewBox = disc bounding box padded 5%; all coordinates
/// printed with 6 decimal places so output is byte-stable across platforms.
void render_svg(const PointSet& ps, const Vec2& omega, std::ostream& out);

}  // namespace scov
