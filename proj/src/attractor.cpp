#include "pisot/attractor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "pisot/geometry.hpp"

namespace pisot {

namespace {

constexpr double kCertMargin = 1e-6;
constexpr int kMaxFloatDepth = 400;

struct Orbit {
  std::vector<CyclotomicInt> digits;
  std::vector<Complex> digit_pos;
  CyclotomicInt inverse;  // gamma^-1 (exact route only)
  Complex gamma;
  double prune;
};

Orbit make_orbit(const IFSSpec& spec, bool exact) {
  Orbit o;
  o.digits = spec.digits.digits;
  for (const auto& a : o.digits) o.digit_pos.push_back(embed(a));
  if (exact) o.inverse = unit_inverse(spec.contraction);
  o.gamma = embed(spec.contraction);
  o.prune = spec.bounding_radius + kPruneSlack;
  return o;
}

// Digit indices ordered by the modulus of the resulting state.
std::vector<int> digit_order(const Orbit& o, Complex z) {
  std::vector<int> idx(o.digits.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<double> m(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) m[i] = std::abs((z - o.digit_pos[i]) / o.gamma);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return m[a] < m[b]; });
  return idx;
}

MembershipResult exact_membership(const IFSSpec& spec, const CyclotomicInt& z0, std::size_t budget) {
  const Orbit o = make_orbit(spec, true);
  MembershipResult res;
  if (std::abs(embed(z0)) > o.prune) return res;

  struct Frame {
    CyclotomicInt z;
    std::vector<int> order;
    std::size_t next = 0;
    int chosen = -1;
  };
  // >= 0: depth on the current path; -1: exhausted without an infinite path
  std::unordered_map<CyclotomicInt, int, CyclotomicHash> mark;
  std::vector<Frame> stack;
  stack.push_back({z0, digit_order(o, embed(z0))});
  mark[z0] = 0;

  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == f.order.size()) {
      mark[f.z] = -1;
      stack.pop_back();
      continue;
    }
    const int a = f.order[f.next++];
    f.chosen = a;
    CyclotomicInt child = (f.z - o.digits[a]) * o.inverse;
    const Complex pos = embed(child);
    if (std::abs(pos) > o.prune) continue;
    auto it = mark.find(child);
    if (it != mark.end()) {
      if (it->second < 0) continue;
      Certificate c;
      c.kind = Certificate::Periodic;
      const auto j = static_cast<std::size_t>(it->second);
      for (std::size_t i = 0; i < j; ++i) c.preperiod.push_back(stack[i].chosen);
      for (std::size_t i = j; i < stack.size(); ++i) c.period.push_back(stack[i].chosen);
      res.status = Membership::Inside;
      res.certificate = std::move(c);
      res.states = mark.size();
      res.escape_depth = std::max(res.escape_depth, static_cast<int>(stack.size()));
      return res;
    }
    if (mark.size() >= budget)
      throw ResourceError("membership state budget " + std::to_string(budget) + " exceeded");
    mark.emplace(child, static_cast<int>(stack.size()));
    stack.push_back({std::move(child), digit_order(o, pos)});
    res.escape_depth = std::max(res.escape_depth, static_cast<int>(stack.size()) - 1);
  }
  res.states = mark.size();
  return res;
}

// Breadth-first search over exact states for one inside the interior disk.
std::optional<Certificate> exact_disk_tail(const IFSSpec& spec, const CyclotomicInt& z0, std::size_t budget,
                                           bool& finished) {
  const Orbit o = make_orbit(spec, true);
  const double target = spec.interior_radius * (1 - kCertMargin);
  finished = false;
  struct Node {
    CyclotomicInt z;
    std::int64_t parent;
    int digit;
  };
  std::vector<Node> nodes{{z0, -1, -1}};
  std::unordered_set<CyclotomicInt, CyclotomicHash> seen{z0};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const Complex pos = embed(nodes[head].z);
    if (std::abs(pos) < target) {
      Certificate c;
      c.kind = Certificate::DiskTail;
      c.tail = pos;
      for (auto i = static_cast<std::int64_t>(head); nodes[i].parent >= 0; i = nodes[i].parent)
        c.preperiod.push_back(nodes[i].digit);
      std::reverse(c.preperiod.begin(), c.preperiod.end());
      finished = true;
      return c;
    }
    for (std::size_t a = 0; a < o.digits.size(); ++a) {
      CyclotomicInt child = (nodes[head].z - o.digits[a]) * o.inverse;
      if (std::abs(embed(child)) > o.prune || !seen.insert(child).second) continue;
      if (seen.size() > budget) return std::nullopt;
      nodes.push_back({std::move(child), static_cast<std::int64_t>(head), static_cast<int>(a)});
    }
  }
  finished = true;
  return std::nullopt;
}

struct CellKey {
  int depth;
  std::int64_t x, y;
  bool operator==(const CellKey&) const = default;
};
struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(k.depth) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::uint64_t>(k.x) + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(k.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Depth-first search on floating states for a word leading into the
// interior disk. States closer than a tiny quantum are merged, which can
// only lose certificates, never invent one.
std::optional<Certificate> float_disk_tail(const IFSSpec& spec, Complex z0, std::size_t budget) {
  const Orbit o = make_orbit(spec, false);
  const double target = spec.interior_radius * (1 - kCertMargin);
  const double quantum = 1e-9 * spec.bounding_radius;
  std::unordered_set<CellKey, CellKeyHash> seen;
  struct Frame {
    Complex z;
    std::vector<int> order;
    std::size_t next = 0;
    int chosen = -1;
  };
  if (std::abs(z0) > o.prune) return std::nullopt;
  std::vector<Frame> stack{{z0, digit_order(o, z0)}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (std::abs(f.z) < target) {
      Certificate c;
      c.kind = Certificate::DiskTail;
      c.tail = f.z;
      for (std::size_t i = 0; i + 1 < stack.size(); ++i) c.preperiod.push_back(stack[i].chosen);
      return c;
    }
    if (f.next == f.order.size() || static_cast<int>(stack.size()) > kMaxFloatDepth) {
      stack.pop_back();
      continue;
    }
    const int a = f.order[f.next++];
    f.chosen = a;
    const Complex child = (f.z - o.digit_pos[a]) / o.gamma;
    if (std::abs(child) > o.prune) continue;
    const CellKey key{0, std::llround(child.real() / quantum), std::llround(child.imag() / quantum)};
    if (!seen.insert(key).second) continue;
    if (seen.size() > budget) return std::nullopt;
    stack.push_back({child, digit_order(o, child)});
  }
  return std::nullopt;
}

double default_tolerance(const IFSSpec& spec) {
  return 2 * spec.bounding_radius * std::pow(spec.contraction_modulus(), 24);
}

}  // namespace

IFSSpec IFSSpec::from_contraction(const CyclotomicInt& gamma, const Alphabet& digits, int automorphism) {
  if (gamma.order() != digits.order) throw InvalidInput("contraction and digits live in different rings");
  IFSSpec s;
  s.contraction = gamma;
  s.digits = digits;
  s.automorphism = automorphism;
  const double m = s.contraction_modulus();
  if (!(m < 1)) throw InvalidInput("IFS contraction must have modulus below 1");
  s.bounding_radius = 1.0 / (1.0 - m);
  s.interior_radius = interior_disk_radius(s);
  return s;
}

IFSSpec IFSSpec::conjugate(const BaseSpec& base, int k) {
  return from_contraction(galois(base.beta, k), make_alphabet(base.order), k);
}

IFSSpec IFSSpec::inverse(const BaseSpec& base) {
  if (!base.is_unit) throw InvalidInput("K(1/beta) needs a unit base; " + base.label() + " is not");
  return from_contraction(unit_inverse(base.beta), make_alphabet(base.order), 1);
}

double IFSSpec::contraction_modulus() const { return std::abs(embed(contraction)); }

bool IFSSpec::exact_orbits() const {
  if (std::abs(norm(contraction)) != 1) return false;
  const int n = contraction.order();
  for (int k = 2; k < n - 1; ++k) {
    if (std::gcd(k, n) != 1) continue;
    const CyclotomicInt g = galois(contraction, k);
    if (g == contraction || g == pisot::conjugate(contraction)) continue;
    if (std::abs(embed(g)) <= 1) return false;
  }
  return true;
}

AttractorApprox approximate(const IFSSpec& spec, int depth, std::size_t cap) {
  if (depth < 0) throw InvalidInput("approximation depth must be non-negative");
  const int n = spec.contraction.order();
  std::unordered_set<CyclotomicInt, CyclotomicHash> level{CyclotomicInt(n)};
  CyclotomicInt power = CyclotomicInt::from_int(n, 1);
  for (int d = 0; d < depth; ++d) {
    std::unordered_set<CyclotomicInt, CyclotomicHash> next;
    next.reserve(std::min(level.size() * spec.digits.size(), cap + 1));
    for (const auto& a : spec.digits.digits) {
      const CyclotomicInt shift = a * power;
      for (const auto& z : level) {
        next.insert(z + shift);
        if (next.size() > cap)
          throw ResourceError("attractor approximation exceeds point cap " + std::to_string(cap));
      }
    }
    level.swap(next);
    power = power * spec.contraction;
  }
  AttractorApprox out;
  out.spec = spec;
  out.depth = depth;
  out.points.assign(level.begin(), level.end());
  std::sort(out.points.begin(), out.points.end());
  out.embedded.reserve(out.points.size());
  for (const auto& z : out.points) out.embedded.push_back(embed(z));
  out.resolution = spec.bounding_radius * std::pow(spec.contraction_modulus(), depth);
  return out;
}

MembershipResult membership(const IFSSpec& spec, const CyclotomicInt& x, std::size_t budget, double tolerance) {
  if (x.order() != spec.contraction.order()) throw InvalidInput("query lives in a different ring");
  const CyclotomicInt z0 = galois(x, spec.automorphism);
  if (spec.exact_orbits()) return exact_membership(spec, z0, budget);

  MembershipResult res;
  res.exact = false;
  const Complex z = embed(z0);
  if (std::abs(z) > spec.bounding_radius + kPruneSlack) return res;
  if (auto c = float_disk_tail(spec, z, budget)) {
    res.status = Membership::Inside;
    res.escape_depth = static_cast<int>(c->preperiod.size());
    res.certificate = std::move(c);
    return res;
  }
  const double tol = tolerance > 0 ? tolerance : default_tolerance(spec);
  res.status = within_distance(spec, z, tol, budget) ? Membership::BoundarySuspect : Membership::Outside;
  return res;
}

Complex certificate_value(const IFSSpec& spec, const Certificate& c) {
  const Complex g = embed(spec.contraction);
  Complex value = 0, power = 1;
  for (int d : c.preperiod) {
    value += embed(spec.digits.digits.at(d)) * power;
    power *= g;
  }
  if (c.kind == Certificate::DiskTail) return value + power * c.tail;
  Complex cycle = 0, cp = 1;
  for (int d : c.period) {
    cycle += embed(spec.digits.digits.at(d)) * cp;
    cp *= g;
  }
  return value + power * cycle / (1.0 - cp);
}

bool disk_covered(std::span<const Complex> centers, double r, double scale, int grid) {
  if (r <= 0) return true;
  const double h = 2 * r / grid;
  const double half_diag = h / std::sqrt(2.0);
  const double reach = scale * r - half_diag;
  if (reach <= 0) return false;
  const PointGrid index(centers, std::max(reach, 0.02));
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      const Complex p(-r + (i + 0.5) * h, -r + (j + 0.5) * h);
      if (std::abs(p) - half_diag > r) continue;
      bool ok = false;
      index.for_each_within(p, reach, [&](std::uint32_t) { ok = true; });
      if (!ok) return false;
    }
  return true;
}

double interior_disk_radius(const IFSSpec& spec, int max_level) {
  const double g = spec.contraction_modulus();
  double best = 0;
  // B_r inside the union of p + gamma^m B_r over the level-m partial sums p
  // gives B_r inside K, since F^m has the same attractor.
  for (int m = 1; m <= max_level; ++m) {
    const AttractorApprox level = approximate(spec, m, 200'000);
    const double scale = std::pow(g, m);
    double lo = best, hi = spec.bounding_radius;
    if (lo > 0 && !disk_covered(level.embedded, lo, scale)) lo = 0;
    for (int it = 0; it < 30; ++it) {
      const double mid = 0.5 * (lo + hi);
      (disk_covered(level.embedded, mid, scale) ? lo : hi) = mid;
    }
    best = std::max(best, lo);
  }
  return best;
}

RegionResult classify(const IFSSpec& spec, const CyclotomicInt& x, std::size_t budget) {
  RegionResult out;
  out.membership = membership(spec, x, budget);
  if (out.membership.status == Membership::Outside) return out;
  const CyclotomicInt z0 = galois(x, spec.automorphism);
  bool finished = false;
  if (!out.membership.exact) {
    if (out.membership.status == Membership::Inside) out.interior_certificate = out.membership.certificate;
  } else if (spec.interior_radius > 0) {
    out.interior_certificate = exact_disk_tail(spec, z0, budget, finished);
  } else {
    finished = true;
  }
  if (out.interior_certificate) {
    out.region = Region::Interior;
    return out;
  }

  out.heuristic = true;
  const Complex z = embed(z0);
  const double rho = kHeuristicDiskFraction * spec.bounding_radius;
  const std::size_t sample_budget = std::min<std::size_t>(budget, 200'000);
  bool all_near = true;
  for (int i = 0; i < 32 && all_near; ++i) {
    const Complex p = z + std::polar(rho, 2 * M_PI * i / 32);
    try {
      all_near = within_distance(spec, p, rho / 8, sample_budget);
    } catch (const ResourceError&) {
      all_near = false;
    }
  }
  if (all_near)
    out.region = Region::Interior;
  else
    out.region = (out.membership.exact && finished) ? Region::Boundary : Region::BoundarySuspect;
  return out;
}

bool within_distance(const IFSSpec& spec, Complex z0, double tol, std::size_t budget) {
  if (!(tol > 0)) throw InvalidInput("distance tolerance must be positive");
  const Orbit o = make_orbit(spec, false);
  const double g = spec.contraction_modulus();
  const double R = spec.bounding_radius;
  std::unordered_set<CellKey, CellKeyHash> seen;
  struct Node {
    Complex z;
    int depth;
    double scale;  // |gamma|^depth
  };
  std::vector<Node> stack{{z0, 0, 1.0}};
  while (!stack.empty()) {
    const Node n = stack.back();
    stack.pop_back();
    // z0 = p + gamma^d z with p a partial sum, and 0 lies in K
    if (n.scale * std::abs(n.z) <= 2 * tol) return true;
    if (n.scale * R <= tol) return true;
    if (std::abs(n.z) > R + tol / n.scale) continue;
    const double quantum = tol / (8 * n.scale);
    const CellKey key{n.depth, std::llround(n.z.real() / quantum), std::llround(n.z.imag() / quantum)};
    if (!seen.insert(key).second) continue;
    if (seen.size() > budget) throw ResourceError("distance search budget " + std::to_string(budget) + " exceeded");
    const auto order = digit_order(o, n.z);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      stack.push_back({(n.z - o.digit_pos[*it]) / o.gamma, n.depth + 1, n.scale * g});
  }
  return false;
}

std::vector<CyclotomicInt> conjugate_patch(const Patch& p, int k) {
  std::vector<CyclotomicInt> out;
  out.reserve(p.size());
  for (const auto& z : p.points) out.push_back(galois(z, k));
  return out;
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Inside: return "inside";
    case Membership::Outside: return "outside";
    case Membership::BoundarySuspect: return "boundary_suspect";
  }
  return "?";
}

std::string to_string(Region r) {
  switch (r) {
    case Region::Interior: return "interior";
    case Region::Boundary: return "boundary";
    case Region::BoundarySuspect: return "boundary_suspect";
    case Region::Outside: return "outside";
  }
  return "?";
}

}  // namespace pisot
