#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "pisot/cyclotomic.hpp"

namespace pisot {

/// Uniform bucket grid over a fixed set of planar points. The grid views
/// the caller's storage, which must outlive it.
class PointGrid {
 public:
  PointGrid() = default;
  PointGrid(std::span<const Complex> points, double cell_size);

  /// Calls f(index) for every point with |p - center| <= radius.
  template <class F>
  void for_each_within(Complex center, double radius, F&& f) const {
    if (points_.empty()) return;
    const long x0 = clamp_x(std::floor((center.real() - radius - min_x_) / cell_));
    const long x1 = clamp_x(std::floor((center.real() + radius - min_x_) / cell_));
    const long y0 = clamp_y(std::floor((center.imag() - radius - min_y_) / cell_));
    const long y1 = clamp_y(std::floor((center.imag() + radius - min_y_) / cell_));
    const double r2 = radius * radius;
    for (long y = y0; y <= y1; ++y)
      for (long x = x0; x <= x1; ++x) {
        const std::size_t c = static_cast<std::size_t>(y * nx_ + x);
        for (std::uint32_t k = start_[c]; k < start_[c + 1]; ++k) {
          const std::uint32_t idx = order_[k];
          if (std::norm(points_[idx] - center) <= r2) f(idx);
        }
      }
  }

  std::size_t size() const { return points_.size(); }

 private:
  long clamp_x(double v) const { return static_cast<long>(std::clamp(v, 0.0, static_cast<double>(nx_ - 1))); }
  long clamp_y(double v) const { return static_cast<long>(std::clamp(v, 0.0, static_cast<double>(ny_ - 1))); }

  std::span<const Complex> points_;
  double cell_ = 1.0;
  double min_x_ = 0, min_y_ = 0;
  long nx_ = 1, ny_ = 1;
  std::vector<std::uint32_t> start_;
  std::vector<std::uint32_t> order_;
};

inline double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

/// Vertices closer than this are merged; shorter edges are dropped.
inline constexpr double kVertexMerge = 1e-9;

/// Convex cell of `center` against a set of sites, counterclockwise.
/// Edge i runs from vertices[i] to vertices[i+1]; edge_site[i] is the index
/// of the site whose bisector carries it, or -1 for the bounding box.
struct ClippedCell {
  std::vector<Complex> vertices;
  std::vector<int> edge_site;

  double radius(Complex center) const;
  double area() const;
  bool touches_box() const;
};

/// Half-plane clipping of the square of half side `half_side` around
/// `center`. Sites farther than twice the running cell radius are skipped
/// since their bisectors cannot cut the cell. Sites equal to the center are
/// ignored.
ClippedCell clip_voronoi(Complex center, std::span<const Complex> sites, double half_side);

/// Cyclic (edge length, interior angle) sequence, minimal over rotations and
/// reversal, with values rounded to multiples of `quantum`.
std::vector<std::int64_t> shape_signature(const std::vector<Complex>& vertices, double quantum);

}  // namespace pisot
