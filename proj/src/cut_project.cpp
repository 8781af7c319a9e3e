#include "pisot/cut_project.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "pisot/parallel.hpp"

namespace pisot {

namespace {

constexpr double kEndpointSlack = 1e-12;

void require_quadratic(const BaseSpec& base) {
  if (!base.is_quadratic()) throw InvalidInput("cut-and-project grid needs a quadratic base; got " + base.label());
}

// 4 sin(2 pi/n) cross(u, v), as a real element of Z[w].
CyclotomicInt scaled_cross(const CyclotomicInt& u, const CyclotomicInt& v) {
  const int n = u.order();
  const CyclotomicInt twist = CyclotomicInt::root_of_unity(n, -1) - CyclotomicInt::root_of_unity(n, 1);
  return (conjugate(u) * v - u * conjugate(v)) * twist;
}

}  // namespace

WindowSpec WindowSpec::attractor(const BaseSpec& base, int k, bool closed) {
  WindowSpec w;
  w.kind = Attractor;
  w.ifs = IFSSpec::conjugate(base, k);
  w.automorphism = k;
  w.closed = closed;
  return w;
}

WindowSpec WindowSpec::decagon(const BaseSpec& base, bool closed) {
  if (base.name != "tau" || base.order != 10) throw InvalidInput("the decagon window belongs to (tau, 10)");
  WindowSpec w;
  w.kind = Polygon;
  w.automorphism = base.conj_auts.at(0);
  w.closed = closed;
  // tau^2 = beta + 1 in the identity embedding of Z[w_10]
  const CyclotomicInt r = base.beta + CyclotomicInt::from_int(10, 1);
  for (int j = 0; j < 10; ++j) w.vertices.push_back(r * CyclotomicInt::root_of_unity(10, j));
  w.ifs = IFSSpec::conjugate(base, w.automorphism);
  return w;
}

RegionResult WindowSpec::locate(const CyclotomicInt& x, std::size_t budget) const {
  if (kind == Attractor) return classify(ifs, x, budget);
  RegionResult out;
  const CyclotomicInt z = galois(x, automorphism);
  bool on_edge = false;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const CyclotomicInt& a = vertices[i];
    const CyclotomicInt& b = vertices[(i + 1) % vertices.size()];
    const int s = real_sign(scaled_cross(b - a, z - a));
    if (s < 0) return out;
    if (s == 0) on_edge = true;
  }
  out.region = on_edge ? Region::Boundary : Region::Interior;
  out.membership.status = Membership::Inside;
  return out;
}

bool WindowSpec::accepts(const RegionResult& r) const {
  if (r.region == Region::Interior) return true;
  return closed && r.region == Region::Boundary;
}

CapSpec CapSpec::standard(const BaseSpec& base, double radius, bool closed) {
  require_quadratic(base);
  CapSpec c;
  c.base = base;
  c.sigma_omega_exponent = base.conj_auts.at(0);
  c.radius = radius > 0 ? radius : 1.0 / (base.value() - 1.0);
  c.window = (base.name == "tau" && base.order == 10) ? WindowSpec::decagon(base, closed)
                                                      : WindowSpec::attractor(base, c.sigma_omega_exponent, closed);
  const double R = 1.0 / (1.0 - std::abs(embed(galois(base.beta, c.sigma_omega_exponent))));
  const double theta_prime = std::arg(embed(CyclotomicInt::root_of_unity(base.order, c.sigma_omega_exponent)));
  c.prewindow.s = R / std::abs(std::sin(theta_prime));
  c.prewindow.t = c.radius / std::sin(2 * M_PI / base.order);
  return c;
}

std::vector<std::pair<std::int64_t, std::int64_t>> one_dim_points(const BaseSpec& base, OneDimWindow w) {
  require_quadratic(base);
  if (!(w.s > 0) || !(w.t > 0)) throw InvalidInput("interval half-widths must be positive");
  const double b1 = base.value();
  const double b2 = embed(galois(base.beta, base.conj_auts.at(0))).real();
  // b (beta - beta') lies in J - I
  const double gap = std::abs(b1 - b2);
  if (gap < 1e-12) throw std::logic_error("degenerate interval system");
  const auto bmax = static_cast<std::int64_t>(std::floor((w.s + w.t) / gap + kEndpointSlack));
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t b = -bmax; b <= bmax; ++b) {
    const double lo = std::max(-w.t - b * b1, -w.s - b * b2) - kEndpointSlack;
    const double hi = std::min(w.t - b * b1, w.s - b * b2) + kEndpointSlack;
    for (auto a = static_cast<std::int64_t>(std::ceil(lo)); a <= static_cast<std::int64_t>(std::floor(hi)); ++a)
      out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CyclotomicInt> candidate_grid(const CapSpec& spec) {
  const int n = spec.base.order;
  std::vector<CyclotomicInt> line;
  for (auto [a, b] : one_dim_points(spec.base, spec.prewindow))
    line.push_back(CyclotomicInt::from_int(n, a) + b * spec.base.beta);
  const CyclotomicInt w = CyclotomicInt::root_of_unity(n, 1);
  std::vector<CyclotomicInt> out;
  for (const auto& p : line)
    for (const auto& q : line) {
      CyclotomicInt x = p + w * q;
      if (std::abs(embed(x)) <= spec.radius + kBallSlack) out.push_back(std::move(x));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CyclotomicInt> window_points(const CapSpec& spec) {
  const auto grid = candidate_grid(spec);
  std::vector<char> keep(grid.size(), 0);
  parallel_for(grid.size(), [&](std::size_t i) {
    const WindowSpec& w = spec.window;
    if (w.kind == WindowSpec::Attractor && w.closed)
      keep[i] = membership(w.ifs, grid[i]).status == Membership::Inside;
    else
      keep[i] = w.accepts(w.locate(grid[i]));
  });
  std::vector<CyclotomicInt> out;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (keep[i]) out.push_back(grid[i]);
  return out;
}

double propagation_radius(const BaseSpec& base, int depth) {
  const double beta = base.value();
  double r = 1.0 / (beta - 1.0);
  for (int d = 0; d < depth; ++d) r = beta * r + 1.0;
  return r;
}

MissingReport missing_points(const CapSpec& spec, const Patch& patch, int max_depth) {
  if (max_depth < 0) throw InvalidInput("propagation depth must be non-negative");
  if (patch.kind != PatchKind::Ball || !patch.complete) throw InvalidInput("missing points need a complete ball patch");
  MissingReport rep;
  rep.label = spec.base.label() + "," + std::to_string(spec.base.order);
  rep.propagation_available = spec.base.is_unit;
  rep.max_depth = rep.propagation_available ? max_depth : 0;
  if (patch.radius + kBallSlack < std::max(spec.radius, propagation_radius(spec.base, rep.max_depth)))
    throw InvalidInput("patch radius too small for the requested propagation depth");

  const auto grid = candidate_grid(spec);
  rep.candidates = grid.size();
  std::vector<RegionResult> where(grid.size());
  std::vector<char> absent(grid.size(), 0);
  parallel_for(grid.size(), [&](std::size_t i) {
    absent[i] = !patch.contains(grid[i]);
    if (absent[i]) where[i] = spec.window.locate(grid[i]);
  });
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!absent[i]) continue;
    if (spec.window.accepts(where[i]))
      rep.seed_missing.push_back({grid[i], 0, where[i].region, where[i].heuristic});
    else if (where[i].region == Region::BoundarySuspect)
      rep.suspects.push_back(grid[i]);
  }

  std::unordered_set<CyclotomicInt, CyclotomicHash> seen;
  for (const auto& m : rep.seed_missing) seen.insert(m.x);
  std::vector<CyclotomicInt> frontier;
  for (const auto& m : rep.seed_missing) frontier.push_back(m.x);
  for (int d = 1; d <= rep.max_depth && !frontier.empty(); ++d) {
    std::vector<CyclotomicInt> next;
    for (const auto& x : frontier)
      for (const auto& a : patch.alphabet.digits) {
        CyclotomicInt y = spec.base.beta * x + a;
        if (patch.contains(y) || !seen.insert(y).second) continue;
        next.push_back(std::move(y));
      }
    std::vector<RegionResult> r(next.size());
    parallel_for(next.size(), [&](std::size_t i) { r[i] = spec.window.locate(next[i]); });
    frontier.clear();
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (!spec.window.accepts(r[i])) continue;
      rep.propagated_missing.push_back({next[i], d, r[i].region, r[i].heuristic});
      frontier.push_back(next[i]);
    }
  }

  bool any = false, interior = false;
  for (const auto* list : {&rep.seed_missing, &rep.propagated_missing})
    for (const auto& m : *list) {
      any = true;
      interior = interior || m.region == Region::Interior;
    }
  rep.classification = interior ? MissingClass::Interior : any ? MissingClass::BoundaryOnly : MissingClass::None;
  return rep;
}

CubicCheck cubic_check(const BaseSpec& base, const Patch& patch, int box) {
  if (base.degree() != 3 || base.conj_auts.size() != 2) throw InvalidInput("cubic check needs a cubic base");
  if (patch.kind != PatchKind::Ball || !patch.complete) throw InvalidInput("cubic check needs a complete ball patch");
  const double seed_radius = 1.0 / (base.value() - 1.0);
  if (patch.radius + kBallSlack < seed_radius) throw InvalidInput("patch must cover the ball of radius 1/(beta-1)");
  const IFSSpec k1 = IFSSpec::conjugate(base, base.conj_auts[0]);
  const IFSSpec k2 = IFSSpec::conjugate(base, base.conj_auts[1]);
  auto in_both = [&](const CyclotomicInt& x) {
    return membership(k1, x).status == Membership::Inside && membership(k2, x).status == Membership::Inside;
  };

  CubicCheck out;
  out.sampled = patch.size();
  std::vector<char> ok(patch.size(), 0);
  parallel_for(patch.size(), [&](std::size_t i) { ok[i] = in_both(patch.points[i]); });
  out.contained = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 1));

  const int n = base.order;
  const int d = base.beta.degree();
  std::vector<CyclotomicInt> box_points;
  std::vector<std::int64_t> c(d, -box);
  while (true) {
    const CyclotomicInt x(n, c);
    if (std::abs(embed(x)) <= seed_radius + kBallSlack &&
        std::abs(embed(galois(x, base.conj_auts[0]))) <= k1.bounding_radius + kPruneSlack &&
        std::abs(embed(galois(x, base.conj_auts[1]))) <= k2.bounding_radius + kPruneSlack)
      box_points.push_back(x);
    int i = 0;
    while (i < d && c[i] == box) c[i++] = -box;
    if (i == d) break;
    ++c[i];
  }
  out.box_candidates = box_points.size();
  std::vector<char> miss(box_points.size(), 0);
  parallel_for(box_points.size(), [&](std::size_t i) {
    miss[i] = !patch.contains(box_points[i]) && in_both(box_points[i]);
  });
  for (std::size_t i = 0; i < box_points.size(); ++i)
    if (miss[i]) out.missing.push_back(box_points[i]);
  return out;
}

std::string to_string(MissingClass c) {
  switch (c) {
    case MissingClass::None: return "none";
    case MissingClass::BoundaryOnly: return "boundary_only";
    case MissingClass::Interior: return "interior";
  }
  return "?";
}

}  // namespace pisot
