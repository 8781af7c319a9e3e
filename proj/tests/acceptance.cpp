// End-to-end acceptance run: one PASS/FAIL line per criterion, followed by
// INFO lines with the measured values. Exit status is nonzero when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pisot/attractor.hpp"
#include "pisot/catalog.hpp"
#include "pisot/cut_project.hpp"
#include "pisot/localconfig.hpp"
#include "pisot/reference.hpp"
#include "pisot/spectrum.hpp"
#include "pisot/voronoi.hpp"

using namespace pisot;

namespace {

// Tolerances, pinned.
constexpr double kPolyTol = 1e-9;
constexpr double kApproxTol = 1e-8;
constexpr double kThresholdTol = 1e-8;
constexpr double kIntervalTol = 1e-5;
constexpr double kCoveringTol = 1e-6;
constexpr double kRegionTol = 1e-8;
constexpr double kReplayTol = 1e-10;
constexpr double kTileTol = 1e-9;
constexpr unsigned kPrecisionBits = kDefaultPrecision;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::string> g_info;

void info(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  g_info.emplace_back(buf);
}

struct Outcome {
  bool ok = true;
  std::string detail;
};

void report(int id, const char* what, const Outcome& o, double secs, double limit) {
  const bool ok = o.ok && secs < limit;
  std::printf("%s criterion %d: %s [%s; %.1f s, limit %.0f s]\n", ok ? "PASS" : "FAIL", id, what, o.detail.c_str(),
              secs, limit);
  for (const auto& line : g_info) std::printf("  INFO %s\n", line.c_str());
  g_info.clear();
  std::fflush(stdout);
}

std::string label(const BaseSpec& b) { return b.label() + "/" + std::to_string(b.order); }

// ---- 1 ----------------------------------------------------------------------

Outcome catalog_fidelity() {
  Outcome o;
  int rows = 0;
  for (const auto& b : base_catalog()) {
    ++rows;
    const PreciseComplex z = embed(b.beta, kPrecisionBits);
    BigFloat acc(0, kPrecisionBits);
    for (auto c : b.min_poly) acc = acc * z.re + BigFloat(c, kPrecisionBits);
    const double residual = std::abs(acc.convert_to<double>());
    const double approx_err = std::abs(b.value() - std::atof(b.approx_text.c_str()));
    const bool exact_zero = evaluate_polynomial(std::vector<std::int64_t>(b.min_poly.rbegin(), b.min_poly.rend()), b.beta).is_zero();
    const bool ok = residual < kPolyTol && approx_err < kApproxTol && std::abs(z.im.convert_to<double>()) < kPolyTol;
    o.ok = o.ok && ok;
    if (!ok || !exact_zero)
      info("%s: residual %.3g, |beta - %s| = %.3g, exact zero %s", label(b).c_str(), residual, b.approx_text.c_str(),
           approx_err, exact_zero ? "yes" : "no");
  }
  o.ok = o.ok && rows == 14;
  o.detail = std::to_string(rows) + " rows, polynomial tol 1e-9, value tol 1e-8, " + std::to_string(kPrecisionBits) +
             "-bit embedding";
  return o;
}

// ---- 2 ----------------------------------------------------------------------

Outcome density() {
  Outcome o;
  for (const auto& row : reference::kDensity) {
    const BaseSpec b = lookup(row.name, row.order);
    const DensityVerdict v = density_verdict(b, make_alphabet(b.order));
    bool ok = (v.relatively_dense == DensityAnswer::Yes) == row.relatively_dense;
    if (row.name == "kappa" && row.order == 9) {
      ok = ok && std::abs(v.compared_value - reference::kKappa9Threshold) < kThresholdTol;
      info("kappa/9 compared against %.10f (reference %.9f)", v.compared_value, reference::kKappa9Threshold);
    }
    if (!ok) info("%s: got %s", label(b).c_str(), to_string(v.relatively_dense).c_str());
    o.ok = o.ok && ok;
  }
  o.detail = "9 verdicts exact, threshold tol 1e-8";
  return o;
}

// ---- 3 ----------------------------------------------------------------------

Outcome intervals() {
  Outcome o;
  for (const auto& row : reference::kIntervals) {
    const CapSpec c = CapSpec::standard(lookup(row.name, row.order));
    const double ds = std::abs(c.prewindow.s - row.s), dt = std::abs(c.prewindow.t - row.t);
    o.ok = o.ok && ds < kIntervalTol && dt < kIntervalTol;
    info("%s/%d: s = %.7f (ref %.5f, diff %.1e), t = %.7f (ref %.5f, diff %.1e)", std::string(row.name).c_str(),
         row.order, c.prewindow.s, row.s, ds, c.prewindow.t, row.t, dt);
  }
  o.detail = "5 rows, tol 1e-5";
  return o;
}

// ---- 4 ----------------------------------------------------------------------

Outcome missing() {
  Outcome o;
  constexpr int kDepth = 3;
  for (const auto& row : reference::kIntervals) {
    const BaseSpec b = lookup(row.name, row.order);
    const int depth = b.is_unit ? kDepth : 0;
    const CapSpec spec = CapSpec::standard(b);
    const Patch patch = generate_ball(b, make_alphabet(b.order), propagation_radius(b, depth) + 1e-6);
    const MissingReport r = missing_points(spec, patch, depth);
    bool ok = to_string(r.classification) == row.missing;
    if (row.missing == "none") {
      // exact set equality on the seed ball
      std::vector<CyclotomicInt> x;
      for (std::size_t i = 0; i < patch.size(); ++i)
        if (std::abs(patch.embedded[i]) <= spec.radius + kBallSlack) x.push_back(patch.points[i]);
      ok = ok && window_points(spec) == x && r.seed_missing.empty() && r.propagated_missing.empty();
    }
    if (row.missing == "interior") {
      std::size_t interior = 0;
      for (const auto* list : {&r.seed_missing, &r.propagated_missing})
        for (const auto& m : *list) interior += m.region == Region::Interior;
      ok = ok && interior > 0;
    }
    if (!b.is_unit) ok = ok && !r.propagation_available && !r.seed_missing.empty();
    o.ok = o.ok && ok;
    info("%s: %s (expected %s), seeds %zu, propagated %zu to depth %d, undecided %zu, propagation %s",
         label(b).c_str(), to_string(r.classification).c_str(), std::string(row.missing).c_str(),
         r.seed_missing.size(), r.propagated_missing.size(), depth, r.suspects.size(),
         r.propagation_available ? "available" : "unavailable (non-unit)");
  }
  o.detail = "5 classifications, delta exact on the seed ball";
  return o;
}

// ---- 5 ----------------------------------------------------------------------

std::map<std::string, CoveringRadiusResult> g_covering;

Outcome covering() {
  Outcome o;
  int r_ok = 0, n_ok = 0, R_ok = 0;
  for (const auto& row : reference::kCovering) {
    const BaseSpec b = lookup(row.name, row.order);
    const CoveringRadiusResult res = covering_radius(b, make_alphabet(b.order));
    g_covering[label(b)] = res;
    const bool rc = std::abs(res.r_c - row.r_c) < kCoveringTol;
    const bool n = res.achieved_at_n == row.n;
    const bool R = std::abs(res.region_R - row.region_R) < kRegionTol;
    r_ok += rc;
    n_ok += n;
    R_ok += R;
    o.ok = o.ok && rc && n && R;
    info("%s: R %.10f (ref %.10f), r_c %.10f (ref %.9f; 2 r_c = %.10f), n %d (ref %d)", label(b).c_str(),
         res.region_R, row.region_R, res.r_c, row.r_c, 2 * res.r_c, res.achieved_at_n, row.n);
  }
  o.detail = "r_c " + std::to_string(r_ok) + "/8 within 1e-6, n " + std::to_string(n_ok) + "/8, R " +
             std::to_string(R_ok) + "/8 within 1e-8";
  return o;
}

// ---- 6 ----------------------------------------------------------------------

Outcome configurations() {
  Outcome o;
  int good = 0;
  for (const auto& row : reference::kConfigs) {
    const BaseSpec b = lookup(row.name, row.order);
    const auto t0 = Clock::now();
    const ConfigEnumeration e = enumerate_configs(b, make_alphabet(b.order));
    const auto nc = static_cast<long>(e.configs.size());
    const auto nt = static_cast<long>(tile_inventory(e).size());
    const bool ok = row.exact ? (e.complete && nc == row.configs && nt == row.tiles)
                              : (nc >= row.configs && nt >= row.tiles);
    good += ok;
    o.ok = o.ok && ok;
    info("%s: configs %s%ld (ref %s%ld), tiles %s%ld (ref %s%ld), %.1f s", label(b).c_str(), e.complete ? "" : ">=",
         nc, row.exact ? "" : ">=", row.configs, e.complete ? "" : ">=", nt, row.exact ? "" : ">=", row.tiles,
         seconds_since(t0));
  }
  o.detail = std::to_string(good) + "/8 rows, budget " + std::to_string(kDefaultConfigBudget);
  return o;
}

// ---- 7 ----------------------------------------------------------------------

Outcome windows() {
  Outcome o;
  constexpr double kRadius = 10;
  const auto check = [&](const BaseSpec& b, bool closed, const char* name) {
    const CapSpec spec = CapSpec::standard(b, kRadius, closed);
    const auto w = window_points(spec);
    const Patch p = generate_ball(b, make_alphabet(b.order), kRadius);
    const bool ok = w == p.points;
    o.ok = o.ok && ok;
    info("%s, %s, ball radius %.0f: window %zu points, spectrum %zu points, %s", label(b).c_str(), name, kRadius,
         w.size(), p.size(), ok ? "equal" : "differ");
  };
  check(lookup("tau", 10), false, "open decagon of circumradius tau^2");
  check(lookup("delta", 8), true, "closed K");
  check(lookup("delta", 8), false, "interior of K");
  o.detail = "exact set equality";
  return o;
}

// ---- 8 ----------------------------------------------------------------------

// Ball patch by plain closure: every prefix of a word landing in B_R lies in
// B_M with M = max(R, 1/(beta-1)).
std::set<CyclotomicInt> ball_oracle(const BaseSpec& b, double R) {
  const double M = std::max(R, 1 / (b.value() - 1));
  const Alphabet A = make_alphabet(b.order);
  std::set<CyclotomicInt> known{CyclotomicInt(b.order)};
  std::vector<CyclotomicInt> frontier{CyclotomicInt(b.order)};
  while (!frontier.empty()) {
    std::vector<CyclotomicInt> next;
    for (const auto& z : frontier)
      for (const auto& a : A.digits) {
        const CyclotomicInt y = b.beta * z + a;
        if (std::abs(embed(y)) <= M + 1e-9 && known.insert(y).second) next.push_back(y);
      }
    frontier.swap(next);
  }
  std::set<CyclotomicInt> out;
  for (const auto& z : known)
    if (std::abs(embed(z)) <= R + 1e-9) out.insert(z);
  return out;
}

std::set<CyclotomicInt> recursion(const IFSSpec& s, int depth) {
  std::set<CyclotomicInt> level{CyclotomicInt(s.contraction.order())};
  for (int d = 0; d < depth; ++d) {
    std::set<CyclotomicInt> next;
    for (const auto& a : s.digits.digits)
      for (const auto& z : level) next.insert(s.contraction * z + a);
    level.swap(next);
  }
  return level;
}

Outcome properties() {
  Outcome o;
  std::map<std::string, bool> suite{{"rotation", true},  {"dilation", true}, {"oracle", true}, {"self-similarity", true},
                                    {"replay", true},    {"monotone", true}, {"origin tile", true}};
  for (const auto& b : delone_cases()) {
    const Alphabet A = make_alphabet(b.order);
    const std::string name = label(b);

    for (double R : {1.0, 2.5, 4.0}) {
      const Patch p = generate_ball(b, A, R);
      const auto oracle = ball_oracle(b, R);
      if (std::vector<CyclotomicInt>(oracle.begin(), oracle.end()) != p.points) {
        suite["oracle"] = false;
        info("%s: generate_ball(%.1f) differs from the closure oracle", name.c_str(), R);
      }
      const CyclotomicInt w = CyclotomicInt::root_of_unity(b.order, 1);
      std::set<CyclotomicInt> rotated;
      for (const auto& z : p.points) rotated.insert(w * z);
      if (std::vector<CyclotomicInt>(rotated.begin(), rotated.end()) != p.points) {
        suite["rotation"] = false;
        info("%s: rotation by w is not a bijection of the ball of radius %.1f", name.c_str(), R);
      }
    }

    const int nmax = A.size() > 10 ? 3 : 4;
    Patch prev = generate_degree(b, A, 0);
    for (int n = 1; n <= nmax; ++n) {
      const Patch cur = generate_degree(b, A, n);
      bool ok = std::includes(cur.points.begin(), cur.points.end(), prev.points.begin(), prev.points.end());
      for (const auto& z : prev.points) ok = ok && cur.contains(b.beta * z);
      if (!ok) {
        suite["dilation"] = false;
        info("%s: X_%d is not contained in X_%d", name.c_str(), n - 1, n);
      }
      prev = cur;
    }

    const IFSSpec s = IFSSpec::conjugate(b, b.conj_auts.at(0));
    // 15 and 19 digits make depth 6 a 10^7..10^8-word set recursion
    const int depth = A.size() > 13 ? 5 : 6;
    for (int d = 0; d <= depth; ++d) {
      const auto want = recursion(s, d);
      if (std::vector<CyclotomicInt>(want.begin(), want.end()) != approximate(s, d).points) {
        suite["self-similarity"] = false;
        info("%s: approximation at depth %d differs from the set recursion", name.c_str(), d);
      }
    }
    info("%s: self-similarity checked to depth %d", name.c_str(), depth);

    const Patch p = generate_ball(b, A, 4);
    double worst = 0;
    for (int k : b.conj_auts) {
      const IFSSpec sk = IFSSpec::conjugate(b, k);
      for (const auto& x : p.points) {
        const MembershipResult m = membership(sk, x);
        if (m.status != Membership::Inside || !m.certificate) {
          worst = INFINITY;
          continue;
        }
        worst = std::max(worst, std::abs(certificate_value(sk, *m.certificate) - embed(galois(x, k))));
      }
    }
    if (!(worst < kReplayTol)) {
      suite["replay"] = false;
      info("%s: certificate replay error %.3g", name.c_str(), worst);
    }

    const auto& cov = g_covering.count(name) ? g_covering[name] : (g_covering[name] = covering_radius(b, A));
    for (std::size_t i = 1; i < cov.delta_sequence.size(); ++i)
      if (cov.delta_sequence[i].second > cov.delta_sequence[i - 1].second + kTileTol) {
        suite["monotone"] = false;
        info("%s: Delta_%d = %.9f > Delta_%d = %.9f", name.c_str(), cov.delta_sequence[i].first,
             cov.delta_sequence[i].second, cov.delta_sequence[i - 1].first, cov.delta_sequence[i - 1].second);
      }
    const double origin = origin_tile_radius(b, A);
    if (std::abs(origin - cov.r_c) > kTileTol) {
      suite["origin tile"] = false;
      info("%s: origin tile radius %.10f, r_c %.10f", name.c_str(), origin, cov.r_c);
    }
  }
  int passed = 0;
  for (const auto& [k, v] : suite) {
    passed += v;
    o.ok = o.ok && v;
    if (!v) info("suite %s failed", k.c_str());
  }
  o.detail = std::to_string(passed) + "/7 suites, replay tol 1e-10, tile tol 1e-9";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    Outcome (*run)();
    double limit;  // seconds
  };
  const Criterion all[] = {
      {1, "catalog fidelity", catalog_fidelity, 1},
      {2, "density verdicts", density, 1},
      {3, "interval half-widths", intervals, 1},
      {4, "missing-point classifications", missing, 300},
      {5, "covering radii", covering, 1800},
      {6, "local configurations and tiles", configurations, 3600},
      {7, "window identities", windows, 300},
      {8, "property suites", properties, 600},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = seconds_since(t0);
    report(c.id, c.what, o, secs, c.limit);
    failed += !(o.ok && secs < c.limit);
  }
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed ? 1 : 0;
}
