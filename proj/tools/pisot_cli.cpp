// Command-line front end: catalog listing, table reproduction and figure data.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "pisot/attractor.hpp"
#include "pisot/catalog.hpp"
#include "pisot/cut_project.hpp"
#include "pisot/localconfig.hpp"
#include "pisot/output.hpp"
#include "pisot/parallel.hpp"
#include "pisot/reference.hpp"
#include "pisot/spectrum.hpp"
#include "pisot/voronoi.hpp"

namespace fs = std::filesystem;
using namespace pisot;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitMismatch = 2;
constexpr int kExitResource = 3;
constexpr int kExitInvalid = 4;

struct Options {
  std::string base = "tau";
  int order = 10;
  double radius = -1;
  int depth = -1;
  std::size_t budget = kDefaultConfigBudget;
  unsigned precision = kDefaultPrecision;
  std::string out;
  unsigned threads = 0;
  std::string contraction = "inverse";
  bool json = false;
  std::size_t cap = kDefaultPointCap;
};

std::string fmt(double v, int digits = 10) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

BaseSpec ref_base(std::string_view name, int order) { return lookup(name, order); }

// ---- bases --------------------------------------------------------------

int cmd_bases(const Options& o) {
  if (o.json) {
    io::Json all = io::Json::array();
    for (const auto& b : base_catalog()) all.push_back(io::catalog_json(b));
    std::cout << all.dump(2) << '\n';
    return 0;
  }
  std::printf("%-6s %-8s %-14s %-22s %s\n", "order", "name", "approx", "min_poly", "unit");
  for (const auto& b : base_catalog())
    std::printf("%-6d %-8s %-14s %-22s %s\n", b.order, b.name.empty() ? "-" : b.name.c_str(),
                fmt(b.value(), 9).c_str(), polynomial_text(b.min_poly).c_str(), b.is_unit ? "yes" : "no");
  return 0;
}

// ---- repro --------------------------------------------------------------

bool repro_density() {
  bool all = true;
  std::printf("%-10s %-6s %-9s %-9s %-15s %s\n", "base", "order", "computed", "expected", "compared", "");
  for (const auto& row : reference::kDensity) {
    const BaseSpec b = ref_base(row.name, row.order);
    const DensityVerdict v = density_verdict(b, make_alphabet(b.order));
    const bool dense = v.relatively_dense == DensityAnswer::Yes;
    bool ok = dense == row.relatively_dense;
    if (row.name == "kappa" && row.order == 9) ok = ok && std::abs(v.compared_value - reference::kKappa9Threshold) < 1e-8;
    all = all && ok;
    std::printf("%-10s %-6d %-9s %-9s %-15s %s\n", b.label().c_str(), b.order, to_string(v.relatively_dense).c_str(),
                row.relatively_dense ? "YES" : "NO", fmt(v.compared_value, 9).c_str(), verdict(ok));
  }
  return all;
}

bool repro_intervals() {
  bool all = true;
  std::printf("%-10s %-6s %-10s %-10s %-10s %-10s %-14s %-14s %s\n", "base", "order", "s", "s_ref", "t", "t_ref",
              "missing", "missing_ref", "");
  for (const auto& row : reference::kIntervals) {
    const BaseSpec b = ref_base(row.name, row.order);
    const CapSpec spec = CapSpec::standard(b);
    const Patch patch = generate_ball(b, make_alphabet(b.order), propagation_radius(b, 1) + 1e-6);
    const MissingReport rep = missing_points(spec, patch, 1);
    const bool ok = std::abs(spec.prewindow.s - row.s) < 1e-5 && std::abs(spec.prewindow.t - row.t) < 1e-5 &&
                    to_string(rep.classification) == row.missing;
    all = all && ok;
    std::printf("%-10s %-6d %-10s %-10s %-10s %-10s %-14s %-14s %s\n", b.label().c_str(), b.order,
                fmt(spec.prewindow.s, 5).c_str(), fmt(row.s, 5).c_str(), fmt(spec.prewindow.t, 5).c_str(),
                fmt(row.t, 5).c_str(), to_string(rep.classification).c_str(), std::string(row.missing).c_str(),
                verdict(ok));
  }
  return all;
}

bool repro_covering() {
  bool all = true;
  std::printf("%-10s %-6s %-14s %-14s %-14s %-14s %-4s %-4s %s\n", "base", "order", "R", "R_ref", "r_c", "r_c_ref",
              "n", "ref", "");
  for (const auto& row : reference::kCovering) {
    const BaseSpec b = ref_base(row.name, row.order);
    const CoveringRadiusResult res = covering_radius(b, make_alphabet(b.order));
    const bool ok = std::abs(res.region_R - row.region_R) < 1e-8 && std::abs(res.r_c - row.r_c) < 1e-6 &&
                    res.achieved_at_n == row.n;
    all = all && ok;
    std::printf("%-10s %-6d %-14s %-14s %-14s %-14s %-4d %-4d %s\n", b.label().c_str(), b.order,
                fmt(res.region_R).c_str(), fmt(row.region_R).c_str(), fmt(res.r_c).c_str(), fmt(row.r_c).c_str(),
                res.achieved_at_n, row.n, verdict(ok));
  }
  return all;
}

bool repro_configs(std::size_t budget) {
  bool all = true;
  std::printf("%-10s %-6s %-10s %-10s %-8s %-8s %s\n", "base", "order", "configs", "ref", "tiles", "ref", "");
  for (const auto& row : reference::kConfigs) {
    const BaseSpec b = ref_base(row.name, row.order);
    const ConfigEnumeration e = enumerate_configs(b, make_alphabet(b.order), budget);
    const auto tiles = tile_inventory(e);
    const auto nc = static_cast<long>(e.configs.size());
    const auto nt = static_cast<long>(tiles.size());
    bool ok;
    if (row.exact)
      ok = e.complete && nc == row.configs && nt == row.tiles;
    else
      ok = nc >= row.configs && nt >= row.tiles;
    all = all && ok;
    const std::string mark = e.complete ? "" : ">=";
    const std::string ref_mark = row.exact ? "" : ">=";
    std::printf("%-10s %-6d %-10s %-10s %-8s %-8s %s\n", b.label().c_str(), b.order, (mark + std::to_string(nc)).c_str(),
                (ref_mark + std::to_string(row.configs)).c_str(), (mark + std::to_string(nt)).c_str(),
                (ref_mark + std::to_string(row.tiles)).c_str(), verdict(ok));
  }
  return all;
}

int cmd_repro(int table, const Options& o) {
  bool ok = false;
  switch (table) {
    case 2: ok = repro_density(); break;
    case 3: ok = repro_intervals(); break;
    case 4: ok = repro_covering(); break;
    case 5: ok = repro_configs(o.budget); break;
    default: throw InvalidInput("repro expects a table id in {2,3,4,5}");
  }
  return ok ? 0 : kExitMismatch;
}

// ---- emit ---------------------------------------------------------------

fs::path output_dir(const Options& o) {
  if (!o.out.empty()) return o.out;
  if (const char* env = std::getenv("PISOT_OUT")) return env;
  return "out";
}

io::RunManifest manifest_for(const std::string& command, const BaseSpec& b, const Options& o) {
  io::RunManifest m;
  m.command = command;
  m.case_name = b.label();
  m.order = b.order;
  m.tool_version = kVersion;
  m.parameters["radius"] = fmt(o.radius, 6);
  m.parameters["depth"] = std::to_string(o.depth);
  m.parameters["budget"] = std::to_string(o.budget);
  m.parameters["precision"] = std::to_string(o.precision);
  return m;
}

void finish(const fs::path& dir, io::RunManifest& m) {
  io::RunManifest copy = m;
  const std::string text = copy.to_json().dump(2) + "\n";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "manifest.json") << text;
  for (const auto& [path, hash] : m.outputs) std::cout << (dir / path).string() << "  " << hash << '\n';
}

void emit_spectrum(const BaseSpec& b, Options o) {
  if (o.radius <= 0) o.radius = 6;
  const Patch p = generate_ball(b, make_alphabet(b.order), o.radius);
  const fs::path dir = output_dir(o);
  auto m = manifest_for("emit spectrum", b, o);
  io::write_output(dir, "spectrum.csv", io::patch_csv(p), m);
  io::write_output(dir, "spectrum.json", io::patch_meta(p).dump(2) + "\n", m);
  io::Svg svg(o.radius * 1.05);
  svg.comment("spectrum " + b.label() + " order " + std::to_string(b.order) + " radius " + fmt(o.radius, 4) +
              " points " + std::to_string(p.size()));
  for (const auto& z : p.embedded) svg.point(z, 2.0, io::palette(0));
  io::write_output(dir, "spectrum.svg", svg.str(), m);
  finish(dir, m);
}

void emit_attractor(const BaseSpec& b, Options o) {
  if (o.depth < 0) o.depth = 10;
  IFSSpec spec;
  if (o.contraction == "inverse")
    spec = IFSSpec::inverse(b);
  else if (o.contraction == "conjugate")
    spec = IFSSpec::conjugate(b, b.conj_auts.at(0));
  else
    throw InvalidInput("--contraction must be inverse or conjugate");
  const AttractorApprox a = approximate(spec, o.depth, o.cap);
  const fs::path dir = output_dir(o);
  auto m = manifest_for("emit attractor", b, o);
  m.parameters["contraction"] = o.contraction;
  io::write_output(dir, "attractor.csv", io::points_csv(a.points), m);
  io::Svg svg(spec.bounding_radius * 1.05);
  svg.comment("attractor " + b.label() + " order " + std::to_string(b.order) + " contraction " + o.contraction +
              " depth " + std::to_string(a.depth) + " resolution " + fmt(a.resolution, 12) + " points " +
              std::to_string(a.points.size()));
  if (a.points.size() <= 100'000) {
    for (const auto& z : a.embedded) svg.point(z, 1.0, io::palette(0));
  } else {
    // large clouds are drawn as an occupancy raster
    const int cells = 400;
    const double half = spec.bounding_radius * 1.05;
    const double h = 2 * half / cells;
    std::vector<char> hit(static_cast<std::size_t>(cells) * cells, 0);
    for (const auto& z : a.embedded) {
      const int i = std::clamp(static_cast<int>((z.real() + half) / h), 0, cells - 1);
      const int j = std::clamp(static_cast<int>((z.imag() + half) / h), 0, cells - 1);
      hit[static_cast<std::size_t>(j) * cells + i] = 1;
    }
    for (int j = 0; j < cells; ++j)
      for (int i = 0; i < cells; ++i)
        if (hit[static_cast<std::size_t>(j) * cells + i]) {
          const double x0 = -half + i * h, y0 = -half + j * h;
          svg.polygon({{x0, y0}, {x0 + h, y0}, {x0 + h, y0 + h}, {x0, y0 + h}}, io::palette(0), "none");
        }
  }
  io::write_output(dir, "attractor.svg", svg.str(), m);
  finish(dir, m);
}

void emit_tiling(const BaseSpec& b, Options o) {
  if (o.radius <= 0) o.radius = 15;
  const double reach = 2.0 / (b.value() - 1.0);
  const Patch p = generate_ball(b, make_alphabet(b.order), o.radius);
  const auto cs = cells(p, std::max(o.radius - reach, 0.0));
  // tile classes by congruence of trusted cells
  std::map<std::vector<std::int64_t>, std::size_t> cls;
  std::vector<std::vector<std::int64_t>> sig(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (cs[i].trusted) {
      std::vector<Complex> rel;
      for (const auto& v : cs[i].vertices) rel.push_back(v - cs[i].position);
      sig[i] = shape_signature(rel, kShapeQuantum);
      cls.emplace(sig[i], 0);
    }
  std::size_t next = 0;
  for (auto& [s, id] : cls) id = next++;
  const fs::path dir = output_dir(o);
  auto m = manifest_for("emit tiling", b, o);
  io::write_output(dir, "cells.json", io::cells_json(cs).dump(1) + "\n", m);
  io::Svg svg(o.radius);
  svg.comment("tiling " + b.label() + " order " + std::to_string(b.order) + " cells " + std::to_string(cs.size()) +
              " tile classes " + std::to_string(cls.size()));
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!cs[i].trusted) continue;
    svg.polygon(cs[i].vertices, io::palette(cls[sig[i]]), "#333333", 0.85);
  }
  for (const auto& c : cs) svg.point(c.position, 1.2, "#000000");
  io::write_output(dir, "tiling.svg", svg.str(), m);
  std::cout << "tile classes: " << cls.size() << '\n';
  finish(dir, m);
}

void emit_window_overlay(const BaseSpec& b, Options o) {
  if (o.radius <= 0) o.radius = 8;
  if (o.depth < 0) o.depth = 6;
  const CapSpec spec = CapSpec::standard(b);
  const int depth = b.is_unit ? 1 : 0;
  const double r = std::max(o.radius, propagation_radius(b, depth) + 1e-6);
  const Patch p = generate_ball(b, make_alphabet(b.order), r);
  const MissingReport rep = missing_points(spec, p, depth);
  const IFSSpec& ifs = spec.window.ifs;
  const AttractorApprox a = approximate(ifs, o.depth);
  const fs::path dir = output_dir(o);
  auto m = manifest_for("emit window_overlay", b, o);
  io::write_output(dir, "missing.json", io::missing_json(rep).dump(2) + "\n", m);
  io::Svg svg(ifs.bounding_radius * 1.1);
  svg.comment("window overlay " + b.label() + " order " + std::to_string(b.order) + " classification " +
              to_string(rep.classification));
  for (const auto& z : a.embedded) svg.point(z, 0.6, "#c8c8c8");
  if (spec.window.kind == WindowSpec::Polygon) {
    std::vector<Complex> v;
    for (const auto& z : spec.window.vertices) v.push_back(embed(z));
    svg.polygon(v, "none", "#000000");
  }
  for (const auto& z : conjugate_patch(p, spec.window.automorphism)) svg.point(embed(z), 1.2, io::palette(0));
  for (const auto* list : {&rep.seed_missing, &rep.propagated_missing})
    for (const auto& mp : *list) svg.point(embed(galois(mp.x, spec.window.automorphism)), 3.0, io::palette(2));
  io::write_output(dir, "window_overlay.svg", svg.str(), m);
  finish(dir, m);
}

void emit_config_graph(const BaseSpec& b, const Options& o) {
  const ConfigEnumeration e = enumerate_configs(b, make_alphabet(b.order), o.budget);
  if (!e.complete)
    throw ResourceError("configuration budget " + std::to_string(o.budget) + " reached before closure (" +
                        std::to_string(e.configs.size()) + " classes so far)");
  const auto tiles = tile_inventory(e);
  const auto edges = config_graph(e);
  const fs::path dir = output_dir(o);
  auto m = manifest_for("emit config_graph", b, o);
  io::write_output(dir, "config_graph.dot", io::config_dot(e, edges, &tiles), m);
  io::write_output(dir, "tile_classes.json", io::tile_classes_json(tiles).dump(2) + "\n", m);
  // swatches: one tile per column
  const double span = 2.2 * e.radius / 2;
  io::Svg svg(span * static_cast<double>(tiles.size()), 200 * static_cast<int>(tiles.size()));
  for (std::size_t t = 0; t < tiles.size(); ++t) {
    const Complex shift((2.0 * static_cast<double>(t) + 1 - static_cast<double>(tiles.size())) * span, 0);
    std::vector<Complex> v;
    for (const auto& z : tiles[t].vertices) v.push_back(z + shift);
    svg.polygon(v, io::palette(t), "#333333");
  }
  io::write_output(dir, "tile_swatches.svg", svg.str(), m);
  std::cout << "configurations: " << e.configs.size() << ", tiles: " << tiles.size() << '\n';
  finish(dir, m);
}

int cmd_emit(const std::string& kind, const Options& o) {
  const BaseSpec b = lookup(o.base, o.order);
  if (kind == "spectrum")
    emit_spectrum(b, o);
  else if (kind == "attractor")
    emit_attractor(b, o);
  else if (kind == "tiling")
    emit_tiling(b, o);
  else if (kind == "window_overlay")
    emit_window_overlay(b, o);
  else if (kind == "config_graph")
    emit_config_graph(b, o);
  else
    throw InvalidInput("unknown emit kind '" + kind + "'");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra of Pisot-cyclotomic numbers with polygonal alphabets"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--threads", o.threads, "worker threads (default: machine parallelism)");
  app.add_option("--out", o.out, "output directory (default: $PISOT_OUT or ./out)");
  app.add_option("--precision", o.precision, "embedding precision in bits")->check(CLI::Range(53u, 4096u));

  auto* bases = app.add_subcommand("bases", "list the catalog of Pisot-cyclotomic bases");
  bases->add_flag("--json", o.json, "print the catalog as JSON");

  int table = 0;
  auto* repro = app.add_subcommand("repro", "recompute a reference table and compare");
  repro->add_option("table", table, "table id: 2 density, 3 intervals, 4 covering radii, 5 configurations")
      ->required();
  repro->add_option("--budget", o.budget, "configuration budget for table 5");

  std::string kind;
  auto* emit = app.add_subcommand("emit", "write figure data (CSV/JSON/SVG/dot) and a run manifest");
  emit->add_option("kind", kind, "spectrum | attractor | tiling | window_overlay | config_graph")->required();
  emit->add_option("--base", o.base, "tau, tau2, lambda, delta, kappa, mu");
  emit->add_option("--order", o.order, "order n of the alphabet");
  emit->add_option("--radius", o.radius, "ball radius");
  emit->add_option("--depth", o.depth, "attractor depth");
  emit->add_option("--budget", o.budget, "configuration budget");
  emit->add_option("--cap", o.cap, "point cap for attractor approximations");
  emit->add_option("--contraction", o.contraction, "attractor contraction: inverse (1/beta) or conjugate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }
  if (o.threads > 0) set_worker_count(o.threads);

  try {
    if (*bases) return cmd_bases(o);
    if (*repro) return cmd_repro(table, o);
    if (*emit) return cmd_emit(kind, o);
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const UndecidedError& e) {
    std::cerr << "undecided: " << e.what() << '\n';
    return kExitMismatch;
  }
  return 0;
}
