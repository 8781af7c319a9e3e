#include "pisot/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pisot/parallel.hpp"

namespace pisot {

namespace {

constexpr double kTieSlack = 1e-9;

double covering_bound(const BaseSpec& base) { return 1.0 / (base.value() - 1.0); }

}  // namespace

double region_radius(double theta, double gamma) {
  if (!(gamma > 1)) throw InvalidInput("region radius needs gamma > 1");
  const double s = gamma * std::sin(theta);
  if (s > 1) throw InvalidInput("region radius undefined: gamma sin(theta) > 1");
  const double g2 = gamma * gamma;
  return (g2 * std::cos(theta) + gamma * std::sqrt(1 - s * s)) / (g2 - 1);
}

double region_theta(const BaseSpec& base) {
  const auto& name = base.name;
  if (name == "tau") return M_PI / 5;
  if (name == "tau2") return M_PI / 10;
  if (name == "lambda") return M_PI / 7;
  if (name == "delta") return M_PI / 8;
  if (name == "kappa") return M_PI / 18;
  if (name == "mu") return M_PI / 12;
  throw InvalidInput("no region angle for base " + base.label());
}

std::vector<VoronoiCell> cells(const Patch& patch, double safe_radius) {
  if (patch.kind != PatchKind::Ball || !patch.complete) throw InvalidInput("cells need a complete ball patch");
  const double reach = 2 * covering_bound(patch.base);
  if (safe_radius > patch.radius - reach + kTieSlack)
    throw InvalidInput("safe radius exceeds patch radius minus 2/(beta-1)");
  const PointGrid grid(patch.embedded, reach);
  std::vector<std::size_t> centers;
  for (std::size_t i = 0; i < patch.size(); ++i)
    if (std::abs(patch.embedded[i]) <= safe_radius + kTieSlack) centers.push_back(i);

  std::vector<VoronoiCell> out(centers.size());
  parallel_for(centers.size(), [&](std::size_t c) {
    const std::size_t i = centers[c];
    const Complex pos = patch.embedded[i];
    std::vector<std::uint32_t> near;
    std::vector<Complex> sites;
    grid.for_each_within(pos, reach, [&](std::uint32_t j) {
      if (j != i) {
        near.push_back(j);
        sites.push_back(patch.embedded[j]);
      }
    });
    const ClippedCell cc = clip_voronoi(pos, sites, 2 * reach);
    VoronoiCell& v = out[c];
    v.center = patch.points[i];
    v.position = pos;
    v.vertices = cc.vertices;
    v.radius = cc.radius(pos);
    v.trusted = !cc.touches_box();
    const std::size_t m = cc.vertices.size();
    for (std::size_t e = 0; e < m; ++e) {
      const int s = cc.edge_site[e];
      if (s < 0 || std::abs(cc.vertices[(e + 1) % m] - cc.vertices[e]) <= kVertexMerge) continue;
      const std::size_t j = near[static_cast<std::size_t>(s)];
      if (std::find(v.neighbor_indices.begin(), v.neighbor_indices.end(), j) != v.neighbor_indices.end()) continue;
      v.neighbor_indices.push_back(j);
      v.neighbors.push_back(patch.points[j]);
    }
  });
  return out;
}

ClippedCell adaptive_cell(Complex center, const PointGrid& grid, std::span<const Complex> pts, double start_reach,
                          double max_reach) {
  double reach = start_reach;
  while (true) {
    std::vector<Complex> sites;
    grid.for_each_within(center, reach, [&](std::uint32_t j) {
      if (std::abs(pts[j] - center) > kVertexMerge) sites.push_back(pts[j]);
    });
    ClippedCell cc = clip_voronoi(center, sites, reach);
    // determined once every point that could cut it (within twice its radius) was offered
    if (!cc.touches_box() && 2 * cc.radius(center) <= reach + kTieSlack) return cc;
    if (reach >= max_reach) {
      cc.vertices.clear();
      cc.edge_site.clear();
      return cc;
    }
    reach = std::min(2 * reach, max_reach);
  }
}

CoveringRadiusResult covering_radius(const BaseSpec& base, const Alphabet& alphabet, int n_max) {
  if (n_max < 1) throw InvalidInput("n_max must be at least 1");
  CoveringRadiusResult res;
  const double beta = base.value();
  const double bound = covering_bound(base);
  res.region_R = region_radius(region_theta(base), beta);

  // lower bound: every trusted cell of a ball patch is a genuine tile
  const double ball = 6 * bound + 4;
  const Patch lower = generate_ball(base, alphabet, ball);
  res.lower_bound_radius_used = ball - 2 * bound;
  double lo = 0;
  for (const auto& c : cells(lower, res.lower_bound_radius_used))
    if (c.trusted) lo = std::max(lo, c.radius);
  res.r_c = lo;

  for (int n = 1; n <= n_max; ++n) {
    const Patch xn = generate_degree(base, alphabet, n);
    const double region = std::pow(beta, n) * res.region_R;
    const PointGrid grid(xn.embedded, std::max(bound, region / 64));
    std::vector<std::size_t> centers;
    for (std::size_t i = 0; i < xn.size(); ++i)
      if (std::abs(xn.embedded[i]) <= region + kTieSlack) centers.push_back(i);
    std::vector<double> radii(centers.size());
    parallel_for(centers.size(), [&](std::size_t c) {
      const Complex pos = xn.embedded[centers[c]];
      const ClippedCell cc = adaptive_cell(pos, grid, xn.embedded, 2 * bound, 4 * (region + 2 * bound));
      radii[c] = cc.vertices.empty() ? std::numeric_limits<double>::infinity() : cc.radius(pos);
    });
    const double delta = radii.empty() ? std::numeric_limits<double>::infinity()
                                       : *std::max_element(radii.begin(), radii.end());
    res.delta_sequence.emplace_back(n, delta);
    if (delta <= lo + kTieSlack) {
      res.achieved_at_n = n;
      res.conclusive = true;
      break;
    }
  }
  return res;
}

double origin_tile_radius(const BaseSpec& base, const Alphabet& alphabet) {
  const double reach = 2 * covering_bound(base);
  const Patch p = generate_ball(base, alphabet, 2 * reach);
  const auto cs = cells(p, kTieSlack);
  for (const auto& c : cs)
    if (c.center.is_zero()) return c.radius;
  throw std::logic_error("origin missing from its own patch");
}

}  // namespace pisot
