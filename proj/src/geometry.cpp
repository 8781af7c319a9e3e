#include "pisot/geometry.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace pisot {

PointGrid::PointGrid(std::span<const Complex> points, double cell_size) : points_(points), cell_(cell_size) {
  if (points.empty()) return;
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = max_x;
  min_x_ = min_y_ = std::numeric_limits<double>::infinity();
  for (const auto& p : points) {
    min_x_ = std::min(min_x_, p.real());
    min_y_ = std::min(min_y_, p.imag());
    max_x = std::max(max_x, p.real());
    max_y = std::max(max_y, p.imag());
  }
  nx_ = static_cast<long>((max_x - min_x_) / cell_) + 1;
  ny_ = static_cast<long>((max_y - min_y_) / cell_) + 1;
  const std::size_t cells = static_cast<std::size_t>(nx_ * ny_);
  std::vector<std::uint32_t> bucket(points.size());
  start_.assign(cells + 1, 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const long x = static_cast<long>((points[i].real() - min_x_) / cell_);
    const long y = static_cast<long>((points[i].imag() - min_y_) / cell_);
    bucket[i] = static_cast<std::uint32_t>(std::min(y, ny_ - 1) * nx_ + std::min(x, nx_ - 1));
    ++start_[bucket[i] + 1];
  }
  for (std::size_t c = 0; c < cells; ++c) start_[c + 1] += start_[c];
  order_.resize(points.size());
  std::vector<std::uint32_t> fill(start_.begin(), start_.end() - 1);
  for (std::size_t i = 0; i < points.size(); ++i) order_[fill[bucket[i]]++] = static_cast<std::uint32_t>(i);
}

double ClippedCell::radius(Complex center) const {
  double r = 0;
  for (const auto& v : vertices) r = std::max(r, std::abs(v - center));
  return r;
}

double ClippedCell::area() const {
  double a = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) a += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
  return a / 2;
}

bool ClippedCell::touches_box() const {
  return std::any_of(edge_site.begin(), edge_site.end(), [](int s) { return s < 0; });
}

namespace {

// Keeps the side of the bisector of (c, q) that contains c.
void clip(std::vector<Complex>& poly, std::vector<int>& label, Complex c, Complex q, int site) {
  const Complex mid = (c + q) / 2.0;
  const Complex d = q - c;
  const double scale = std::abs(d);
  auto f = [&](Complex z) { return ((z - mid) * std::conj(d)).real() / scale; };
  std::vector<Complex> out;
  std::vector<int> out_label;
  const std::size_t m = poly.size();
  out.reserve(m + 1);
  out_label.reserve(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    const Complex a = poly[i], b = poly[(i + 1) % m];
    const double fa = f(a), fb = f(b);
    const bool ina = fa <= kVertexMerge, inb = fb <= kVertexMerge;
    if (ina) {
      out.push_back(a);
      out_label.push_back(label[i]);
    }
    if (ina != inb) {
      const double t = fa / (fa - fb);
      out.push_back(a + t * (b - a));
      // leaving: the new edge runs along the bisector; entering: along the old edge
      out_label.push_back(ina ? site : label[i]);
    }
  }
  // merge near-duplicate vertices; the surviving vertex keeps its label
  std::vector<Complex> merged;
  std::vector<int> merged_label;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!merged.empty() && std::abs(out[i] - merged.back()) < kVertexMerge) {
      merged.back() = out[i];
      merged_label.back() = out_label[i];
      continue;
    }
    merged.push_back(out[i]);
    merged_label.push_back(out_label[i]);
  }
  while (merged.size() > 1 && std::abs(merged.front() - merged.back()) < kVertexMerge) {
    merged.pop_back();
    merged_label.pop_back();
  }
  poly.swap(merged);
  label.swap(merged_label);
}

}  // namespace

ClippedCell clip_voronoi(Complex center, std::span<const Complex> sites, double half_side) {
  ClippedCell cell;
  const double h = half_side;
  cell.vertices = {center + Complex(-h, -h), center + Complex(h, -h), center + Complex(h, h), center + Complex(-h, h)};
  cell.edge_site = {-1, -1, -1, -1};
  std::vector<std::uint32_t> order(sites.size());
  std::iota(order.begin(), order.end(), 0u);
  std::vector<double> dist(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) dist[i] = std::abs(sites[i] - center);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return dist[a] < dist[b]; });
  double reach = cell.radius(center);
  for (auto i : order) {
    if (dist[i] < kVertexMerge) continue;
    if (dist[i] > 2 * reach + kVertexMerge) break;
    clip(cell.vertices, cell.edge_site, center, sites[i], static_cast<int>(i));
    reach = cell.radius(center);
  }
  return cell;
}

std::vector<std::int64_t> shape_signature(const std::vector<Complex>& v, double quantum) {
  const std::size_t m = v.size();
  auto q = [&](double x) { return static_cast<std::int64_t>(std::llround(x / quantum)); };
  std::vector<std::int64_t> fwd(2 * m), rev(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    const Complex prev = v[(i + m - 1) % m], cur = v[i], next = v[(i + 1) % m];
    const double angle = std::arg((prev - cur) / (next - cur));
    fwd[2 * i] = q(std::abs(next - cur));
    fwd[2 * i + 1] = q(std::abs(angle));
  }
  // reversed traversal: the edge before vertex i becomes the edge after it
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (m - i) % m;
    rev[2 * i] = fwd[2 * ((j + m - 1) % m)];
    rev[2 * i + 1] = fwd[2 * j + 1];
  }
  std::vector<std::int64_t> best;
  for (const auto* s : {&fwd, &rev})
    for (std::size_t r = 0; r < m; ++r) {
      std::vector<std::int64_t> cand(s->begin() + 2 * r, s->end());
      cand.insert(cand.end(), s->begin(), s->begin() + 2 * r);
      if (best.empty() || cand < best) best = std::move(cand);
    }
  return best;
}

}  // namespace pisot
