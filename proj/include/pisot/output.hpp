#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pisot/catalog.hpp"
#include "pisot/cut_project.hpp"
#include "pisot/localconfig.hpp"
#include "pisot/spectrum.hpp"
#include "pisot/voronoi.hpp"

namespace pisot::io {

using Json = nlohmann::ordered_json;

/// Header c0..c{phi-1},re,im and one row per point, floats at 12 significant digits.
std::string points_csv(const std::vector<CyclotomicInt>& points);
std::string patch_csv(const Patch& p);
/// {base, order, kind, radius_or_degree, count, complete}
Json patch_meta(const Patch& p);

/// {name, order, min_poly, beta_coeffs, conj_auts, is_unit}
Json catalog_json(const BaseSpec& b);

/// [{center_coeffs, vertices, neighbor_indices, radius, trusted}]
Json cells_json(const std::vector<VoronoiCell>& cells);

/// {case, seed_count, propagated: [{depth, count}], classification, points}
Json missing_json(const MissingReport& r);

/// [{class_id, edge_count, signature, member_count}]
Json tile_classes_json(const std::vector<TileClass>& tiles);

/// Descendant graph in dot format; nodes labelled by tile class when given.
std::string config_dot(const ConfigEnumeration& e, const std::vector<ConfigEdge>& edges,
                       const std::vector<TileClass>* tiles = nullptr);

/// Fixed colors for tile classes and overlays.
inline constexpr std::array<std::string_view, 12> kPalette = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#1b9e77", "#d95f02"};
std::string_view palette(std::size_t i);

/// Minimal SVG builder with a y-up world frame mapped into a square canvas.
class Svg {
 public:
  Svg(double half_extent, int pixels = 800);
  void comment(const std::string& text);
  void point(Complex p, double radius, std::string_view fill);
  void polygon(const std::vector<Complex>& vertices, std::string_view fill, std::string_view stroke,
               double opacity = 1.0);
  std::string str() const;

 private:
  double x(Complex p) const;
  double y(Complex p) const;
  double half_;
  int px_;
  std::vector<std::string> body_;
};

/// 64-bit content hash (hex) used in run manifests.
std::string content_hash(std::string_view bytes);

struct RunManifest {
  std::string command;
  std::string case_name;
  int order = 0;
  std::map<std::string, std::string> parameters;
  std::string tool_version;
  std::vector<std::pair<std::string, std::string>> outputs;  // path, hash

  Json to_json() const;
};

/// Writes `content` to dir/name, records it in the manifest, returns the path.
std::filesystem::path write_output(const std::filesystem::path& dir, const std::string& name,
                                   const std::string& content, RunManifest& manifest);

}  // namespace pisot::io
