#include "pisot/output.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace pisot::io {

namespace {

std::string num(double v, int digits = 12) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v == 0 ? 0.0 : v);  // no "-0"
  return buf;
}

Json coeffs(const CyclotomicInt& z) {
  Json a = Json::array();
  for (auto c : z.coeffs()) a.push_back(c);
  return a;
}

}  // namespace

std::string points_csv(const std::vector<CyclotomicInt>& points) {
  std::ostringstream os;
  const int d = points.empty() ? 0 : points.front().degree();
  for (int i = 0; i < d; ++i) os << 'c' << i << ',';
  os << "re,im\n";
  for (const auto& z : points) {
    for (auto c : z.coeffs()) os << c << ',';
    const Complex p = embed(z);
    os << num(p.real()) << ',' << num(p.imag()) << '\n';
  }
  return os.str();
}

std::string patch_csv(const Patch& p) { return points_csv(p.points); }

Json patch_meta(const Patch& p) {
  Json j;
  j["base"] = p.base.label();
  j["order"] = p.base.order;
  j["kind"] = p.kind == PatchKind::Ball ? "ball" : "degree";
  if (p.kind == PatchKind::Ball)
    j["radius_or_degree"] = p.radius;
  else
    j["radius_or_degree"] = p.degree_bound;
  j["count"] = p.size();
  j["complete"] = p.complete;
  return j;
}

Json catalog_json(const BaseSpec& b) {
  Json j;
  j["name"] = b.label();
  j["order"] = b.order;
  j["min_poly"] = b.min_poly;
  j["beta_coeffs"] = coeffs(b.beta);
  j["conj_auts"] = b.conj_auts;
  j["is_unit"] = b.is_unit;
  return j;
}

Json cells_json(const std::vector<VoronoiCell>& cells) {
  Json out = Json::array();
  for (const auto& c : cells) {
    Json j;
    j["center_coeffs"] = coeffs(c.center);
    Json v = Json::array();
    for (const auto& p : c.vertices) v.push_back({p.real(), p.imag()});
    j["vertices"] = std::move(v);
    j["neighbor_indices"] = c.neighbor_indices;
    j["radius"] = c.radius;
    j["trusted"] = c.trusted;
    out.push_back(std::move(j));
  }
  return out;
}

Json missing_json(const MissingReport& r) {
  Json j;
  j["case"] = r.label;
  j["seed_count"] = r.seed_missing.size();
  std::map<int, std::size_t> per_depth;
  for (const auto& m : r.propagated_missing) ++per_depth[m.depth];
  Json prop = Json::array();
  for (auto [d, c] : per_depth) prop.push_back({{"depth", d}, {"count", c}});
  j["propagated"] = std::move(prop);
  j["classification"] = to_string(r.classification);
  j["propagation_available"] = r.propagation_available;
  j["candidates"] = r.candidates;
  j["suspect_count"] = r.suspects.size();
  Json pts = Json::array();
  for (const auto* list : {&r.seed_missing, &r.propagated_missing})
    for (const auto& m : *list) {
      const Complex p = embed(m.x);
      pts.push_back({{"coeffs", coeffs(m.x)},
                     {"re", p.real()},
                     {"im", p.imag()},
                     {"depth", m.depth},
                     {"region", to_string(m.region)},
                     {"heuristic", m.heuristic}});
    }
  j["points"] = std::move(pts);
  return j;
}

Json tile_classes_json(const std::vector<TileClass>& tiles) {
  Json out = Json::array();
  for (std::size_t i = 0; i < tiles.size(); ++i)
    out.push_back({{"class_id", i},
                   {"edge_count", tiles[i].vertices.size()},
                   {"signature", tiles[i].signature},
                   {"member_count", tiles[i].members.size()}});
  return out;
}

std::string config_dot(const ConfigEnumeration& e, const std::vector<ConfigEdge>& edges,
                       const std::vector<TileClass>* tiles) {
  std::vector<int> cls(e.configs.size(), -1);
  if (tiles)
    for (std::size_t t = 0; t < tiles->size(); ++t)
      for (auto m : (*tiles)[t].members) cls[m] = static_cast<int>(t);
  std::ostringstream os;
  os << "digraph configs {\n  node [shape=circle, style=filled];\n";
  for (std::size_t i = 0; i < e.configs.size(); ++i) {
    os << "  c" << i << " [label=\"" << i << "\"";
    if (cls[i] >= 0) os << ", fillcolor=\"" << palette(static_cast<std::size_t>(cls[i])) << "\"";
    os << "];\n";
  }
  for (const auto& ed : edges) os << "  c" << ed.from << " -> c" << ed.to << " [label=\"" << ed.digit << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string_view palette(std::size_t i) { return kPalette[i % kPalette.size()]; }

Svg::Svg(double half_extent, int pixels) : half_(half_extent), px_(pixels) {
  if (!(half_extent > 0) || pixels <= 0) throw InvalidInput("SVG extent must be positive");
}

double Svg::x(Complex p) const { return (p.real() + half_) / (2 * half_) * px_; }
double Svg::y(Complex p) const { return (half_ - p.imag()) / (2 * half_) * px_; }

void Svg::comment(const std::string& text) { body_.push_back("<!-- " + text + " -->"); }

void Svg::point(Complex p, double radius, std::string_view fill) {
  std::ostringstream os;
  os << "<circle cx=\"" << num(x(p), 7) << "\" cy=\"" << num(y(p), 7) << "\" r=\"" << num(radius, 4)
     << "\" fill=\"" << fill << "\"/>";
  body_.push_back(os.str());
}

void Svg::polygon(const std::vector<Complex>& vertices, std::string_view fill, std::string_view stroke,
                  double opacity) {
  std::ostringstream os;
  os << "<polygon points=\"";
  for (std::size_t i = 0; i < vertices.size(); ++i)
    os << (i ? " " : "") << num(x(vertices[i]), 7) << ',' << num(y(vertices[i]), 7);
  os << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"0.5\" fill-opacity=\""
     << num(opacity, 3) << "\"/>";
  body_.push_back(os.str());
}

std::string Svg::str() const {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px_ << "\" height=\"" << px_ << "\" viewBox=\"0 0 "
     << px_ << ' ' << px_ << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& line : body_) os << line << '\n';
  os << "</svg>\n";
  return os.str();
}

std::string content_hash(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016zx", std::hash<std::string_view>{}(bytes));
  return buf;
}

Json RunManifest::to_json() const {
  Json j;
  j["command"] = command;
  j["case"] = {{"base", case_name}, {"order", order}};
  j["parameters"] = parameters;
  j["tool_version"] = tool_version;
  Json outs = Json::array();
  for (const auto& [path, hash] : outputs) outs.push_back({{"path", path}, {"hash", hash}});
  j["outputs"] = std::move(outs);
  return j;
}

std::filesystem::path write_output(const std::filesystem::path& dir, const std::string& name,
                                   const std::string& content, RunManifest& manifest) {
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
  manifest.outputs.emplace_back(name, content_hash(content));
  return path;
}

}  // namespace pisot::io
