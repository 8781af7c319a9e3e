#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pisot/attractor.hpp"
#include "pisot/catalog.hpp"
#include "pisot/cyclotomic.hpp"
#include "pisot/spectrum.hpp"

namespace pisot {

/// I = [-s, s] on the conjugate line, J = [-t, t] on the real line.
struct OneDimWindow {
  double s = 0;
  double t = 0;
};

/// Acceptance window in the conjugate plane, queried with spectrum-side
/// points (the automorphism is applied internally).
struct WindowSpec {
  enum Kind { Polygon, Attractor } kind = Attractor;
  std::vector<CyclotomicInt> vertices;  // Polygon: counterclockwise, conjugate side
  IFSSpec ifs;                          // Attractor
  int automorphism = 1;
  bool closed = true;  // Sigma(cl W) when true, Sigma(int W) otherwise

  /// K(sigma(beta), A_n) with sigma = sigma_k.
  static WindowSpec attractor(const BaseSpec& base, int k, bool closed = true);
  /// The decagon with vertices tau^2 w^k in the conjugate plane of (tau, 10).
  static WindowSpec decagon(const BaseSpec& base, bool closed = true);

  RegionResult locate(const CyclotomicInt& x, std::size_t budget = kDefaultStateBudget) const;
  bool accepts(const RegionResult& r) const;
};

struct CapSpec {
  BaseSpec base;
  WindowSpec window;
  OneDimWindow prewindow;
  int sigma_omega_exponent = 0;  // sigma(w) = w^k
  double radius = 0;             // ball the candidate grid is cut to

  /// s = R/|sin arg w^k| with R = 1/(1-|sigma(beta)|), t = radius/sin(2 pi/n).
  /// radius defaults to 1/(beta-1). The window is the decagon for (tau, 10)
  /// and K(sigma(beta), A) otherwise.
  static CapSpec standard(const BaseSpec& base, double radius = -1, bool closed = true);
};

/// Integer pairs (a, b) with a + b beta in J and a + b beta' in I, where
/// beta' is the real conjugate. Endpoint comparisons carry 1e-12 slack
/// toward inclusion, so the result may contain boundary extras.
std::vector<std::pair<std::int64_t, std::int64_t>> one_dim_points(const BaseSpec& base, OneDimWindow w);

/// {p + w q : p, q in Sigma(I) n J} cut to the closed ball of spec.radius.
std::vector<CyclotomicInt> candidate_grid(const CapSpec& spec);

/// Points of the candidate grid accepted by the window, sorted.
std::vector<CyclotomicInt> window_points(const CapSpec& spec);

enum class MissingClass { None, BoundaryOnly, Interior };

struct MissingPoint {
  CyclotomicInt x;
  int depth = 0;  // 0 for seeds
  Region region = Region::Outside;
  bool heuristic = false;
};

struct MissingReport {
  std::string label;
  std::vector<MissingPoint> seed_missing;
  std::vector<MissingPoint> propagated_missing;
  std::vector<CyclotomicInt> suspects;  // undecided window membership, not counted
  MissingClass classification = MissingClass::None;
  bool propagation_available = true;  // false for non-unit bases
  std::size_t candidates = 0;
  int max_depth = 0;
};

/// Patch radius needed to propagate seeds `depth` times.
double propagation_radius(const BaseSpec& base, int depth);

/// Seeds are window points of the candidate grid missing from the patch;
/// they are pushed forward by x -> beta x + a for depth 1..max_depth (unit
/// bases only), keeping images that stay in the window and out of the
/// spectrum. Requires a complete ball patch of radius propagation_radius.
MissingReport missing_points(const CapSpec& spec, const Patch& patch, int max_depth);

/// Containment of the conjugated spectrum in K1 x K2 for a cubic base, and
/// missing points among small lattice points. Qualitative: the count is a
/// lower bound.
struct CubicCheck {
  std::size_t sampled = 0;
  std::size_t contained = 0;
  std::size_t box_candidates = 0;
  std::vector<CyclotomicInt> missing;  // lower bound
};

CubicCheck cubic_check(const BaseSpec& base, const Patch& patch, int box);

std::string to_string(MissingClass c);

}  // namespace pisot
