#include "pisot/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pisot/geometry.hpp"

namespace pisot {

namespace {

using PointSet = std::unordered_set<CyclotomicInt, CyclotomicHash>;

void require_compatible(const BaseSpec& base, const Alphabet& alphabet) {
  if (base.order != alphabet.order)
    throw InvalidInput("alphabet order " + std::to_string(alphabet.order) + " does not match base order " +
                       std::to_string(base.order));
}

double max_digit_modulus(const Alphabet& alphabet) {
  double m = 0;
  for (const auto& a : alphabet.digits) m = std::max(m, std::abs(embed(a)));
  return m;
}

void finalize(Patch& p, std::vector<CyclotomicInt> pts) {
  std::sort(pts.begin(), pts.end());
  p.points = std::move(pts);
  p.embedded.resize(p.points.size());
  for (std::size_t i = 0; i < p.points.size(); ++i) p.embedded[i] = embed(p.points[i]);
}

bool is_polygon_alphabet(const Alphabet& alphabet) {
  const Alphabet ref = make_alphabet(alphabet.order);
  auto a = alphabet.digits;
  auto b = ref.digits;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

bool Patch::contains(const CyclotomicInt& x) const { return std::binary_search(points.begin(), points.end(), x); }

std::optional<std::size_t> Patch::index_of(const CyclotomicInt& x) const {
  auto it = std::lower_bound(points.begin(), points.end(), x);
  if (it == points.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - points.begin());
}

Patch generate_ball(const BaseSpec& base, const Alphabet& alphabet, double radius) {
  require_compatible(base, alphabet);
  if (!(radius > 0)) throw InvalidInput("ball radius must be positive");
  const double beta = base.value();
  const double limit = std::max(radius, max_digit_modulus(alphabet) / (beta - 1.0)) + kBallSlack;

  PointSet seen;
  std::vector<CyclotomicInt> frontier;
  for (const auto& a : alphabet.digits)
    if (std::abs(embed(a)) <= limit && seen.insert(a).second) frontier.push_back(a);

  // Breadth-first by generation: X_n = (X_{n-1} u U_a beta X_{n-1} + a) n B_M.
  std::vector<CyclotomicInt> next;
  while (!frontier.empty()) {
    next.clear();
    for (const auto& z : frontier) {
      const CyclotomicInt bz = base.beta * z;
      for (const auto& a : alphabet.digits) {
        CyclotomicInt w = bz + a;
        if (std::abs(embed(w)) > limit) continue;
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    }
    frontier.swap(next);
  }

  std::vector<CyclotomicInt> pts;
  pts.reserve(seen.size());
  for (const auto& z : seen)
    if (std::abs(embed(z)) <= radius + kBallSlack) pts.push_back(z);

  Patch p;
  p.base = base;
  p.alphabet = alphabet;
  p.kind = PatchKind::Ball;
  p.radius = radius;
  p.complete = true;
  finalize(p, std::move(pts));
  return p;
}

Patch generate_degree(const BaseSpec& base, const Alphabet& alphabet, int nmax, std::size_t cap) {
  require_compatible(base, alphabet);
  if (nmax < 0) throw InvalidInput("degree bound must be non-negative");
  PointSet level(alphabet.digits.begin(), alphabet.digits.end());
  CyclotomicInt power = CyclotomicInt::from_int(base.order, 1);
  for (int k = 1; k <= nmax; ++k) {
    power = power * base.beta;
    if (level.size() * alphabet.size() > cap * 8 && level.size() > cap)
      throw ResourceError("degree patch exceeds point cap " + std::to_string(cap));
    PointSet next;
    next.reserve(std::min(level.size() * alphabet.size(), cap + 1));
    for (const auto& a : alphabet.digits) {
      const CyclotomicInt shift = a * power;
      for (const auto& z : level) {
        next.insert(z + shift);
        if (next.size() > cap)
          throw ResourceError("degree patch X_" + std::to_string(k) + " exceeds point cap " + std::to_string(cap));
      }
    }
    level.swap(next);
  }
  Patch p;
  p.base = base;
  p.alphabet = alphabet;
  p.kind = PatchKind::Degree;
  p.degree_bound = nmax;
  p.complete = true;
  finalize(p, std::vector<CyclotomicInt>(level.begin(), level.end()));
  return p;
}

double min_pairwise_distance(const Patch& patch) {
  const auto& pts = patch.embedded;
  if (pts.size() < 2) throw InvalidInput("minimum distance is undefined for fewer than two points");
  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x, min_y = min_x, max_y = -min_x;
  for (const auto& p : pts) {
    min_x = std::min(min_x, p.real());
    max_x = std::max(max_x, p.real());
    min_y = std::min(min_y, p.imag());
    max_y = std::max(max_y, p.imag());
  }
  const double area = std::max((max_x - min_x) * (max_y - min_y), 1e-12);
  double cell = std::sqrt(area / static_cast<double>(pts.size()));
  while (true) {
    const PointGrid grid(pts, cell);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
      grid.for_each_within(pts[i], cell, [&](std::uint32_t j) {
        if (j != i) best = std::min(best, std::abs(pts[i] - pts[j]));
      });
    // Any pair closer than `cell` is found from either endpoint.
    if (best <= cell) return best;
    cell *= 2;
  }
}

DensityVerdict cardinality_verdict(double beta, std::size_t alphabet_size) {
  if (static_cast<double>(alphabet_size) < beta * beta)
    return {DensityAnswer::No, DensityReason::CardinalityBound, beta * beta};
  throw UndecidedError("undecided by paper criteria: cardinality bound satisfied and no further criterion applies");
}

DensityVerdict density_verdict(const BaseSpec& base, const Alphabet& alphabet) {
  const double beta = base.value();
  if (static_cast<double>(alphabet.size()) < beta * beta)
    return {DensityAnswer::No, DensityReason::CardinalityBound, beta * beta};
  if (base.order != alphabet.order || !is_polygon_alphabet(alphabet)) return cardinality_verdict(beta, alphabet.size());

  const int n = base.order;
  const CyclotomicInt one = CyclotomicInt::from_int(n, 1);
  const CyclotomicInt two_cos = CyclotomicInt::root_of_unity(n, 1) + CyclotomicInt::root_of_unity(n, -1);

  // beta <= 1 + 2cos(2 pi / n), decided exactly (equality occurs).
  const CyclotomicInt lower = one + two_cos;
  if (real_sign(lower - base.beta) >= 0)
    return {DensityAnswer::Yes, DensityReason::HerrerosLower, embed(lower).real()};

  if (n % 2 == 0) {
    // beta > 2 + cos(2 pi / n)  <=>  2 beta - 4 - 2cos(2 pi / n) > 0
    const CyclotomicInt diff = 2 * base.beta - 4 * one - two_cos;
    if (real_sign(diff) > 0)
      return {DensityAnswer::No, DensityReason::HerrerosUpper, 2.0 + std::cos(2.0 * M_PI / n)};
  } else {
    const unsigned d10 = 45;
    const BigFloat pi = boost::multiprecision::acos(BigFloat(-1, d10));
    const BigFloat c = boost::multiprecision::cos(pi / n);
    const BigFloat threshold = 1 + c + c * c;
    const BigFloat b = embed(base.beta, 128).re;
    if (b > threshold)
      return {DensityAnswer::No, DensityReason::HerrerosUpper, static_cast<double>(threshold)};
  }
  throw UndecidedError("undecided by paper criteria: beta lies between the representability bounds");
}

std::string to_string(DensityAnswer a) { return a == DensityAnswer::Yes ? "YES" : "NO"; }

std::string to_string(DensityReason r) {
  switch (r) {
    case DensityReason::CardinalityBound: return "cardinality_bound";
    case DensityReason::HerrerosLower: return "herreros_lower";
    case DensityReason::HerrerosUpper: return "herreros_upper";
    case DensityReason::TableLookup: return "table_lookup";
  }
  return "unknown";
}

}  // namespace pisot
