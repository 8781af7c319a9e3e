#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pisot/catalog.hpp"
#include "pisot/cyclotomic.hpp"
#include "pisot/geometry.hpp"
#include "pisot/spectrum.hpp"

namespace pisot {

/// R(theta, gamma) = (gamma^2 cos t + gamma sqrt(1 - gamma^2 sin^2 t)) / (gamma^2 - 1).
/// Throws InvalidInput when gamma <= 1 or gamma sin(theta) > 1.
double region_radius(double theta, double gamma);

/// Angle used for the region A_n = beta^n B_R(0) of each Delone case:
/// pi/5 for tau (orders 5 and 10), pi/10 for tau^2, pi/7 for lambda,
/// pi/8, pi/18, pi/12 for delta, kappa, mu.
double region_theta(const BaseSpec& base);

struct VoronoiCell {
  CyclotomicInt center;
  Complex position;
  std::vector<Complex> vertices;  // counterclockwise
  std::vector<CyclotomicInt> neighbors;
  std::vector<std::size_t> neighbor_indices;  // into the patch
  double radius = 0;
  bool trusted = false;
};

/// Cells of all patch points with |center| <= safe_radius, each clipped
/// against the patch points within 2/(beta-1) of its center. Requires a
/// complete ball patch with safe_radius <= radius - 2/(beta-1).
std::vector<VoronoiCell> cells(const Patch& patch, double safe_radius);

/// Cell of `center` in the point cloud `pts` (center excluded by position),
/// growing the neighbourhood until the cell is determined. Returns a cell
/// with infinite radius if it stays unbounded within `max_reach`.
ClippedCell adaptive_cell(Complex center, const PointGrid& grid, std::span<const Complex> pts, double start_reach,
                          double max_reach);

struct CoveringRadiusResult {
  double r_c = 0;          // lower bound, equal to the covering radius when conclusive
  int achieved_at_n = -1;  // first n with Delta_n = lower bound
  std::vector<std::pair<int, double>> delta_sequence;
  double lower_bound_radius_used = 0;
  double region_R = 0;  // R(theta, beta)
  bool conclusive = false;
};

/// Lower bound from the trusted cells of a ball patch, upper bounds
/// Delta_n from the cells of X_n centered in beta^n B_R(0), n = 1..n_max.
CoveringRadiusResult covering_radius(const BaseSpec& base, const Alphabet& alphabet, int n_max = 8);

/// Radius of the Voronoi cell of the origin.
double origin_tile_radius(const BaseSpec& base, const Alphabet& alphabet);

}  // namespace pisot
