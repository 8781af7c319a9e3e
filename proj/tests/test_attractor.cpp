#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "pisot/attractor.hpp"

using namespace pisot;

namespace {

// Set recursion P_{d+1} = U_a (gamma P_d + a), with plain std::set.
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

double distance_to(const AttractorApprox& a, Complex z) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : a.embedded) best = std::min(best, std::abs(p - z));
  return best;
}

IFSSpec window(const char* name, int order) {
  const BaseSpec b = lookup(name, order);
  return IFSSpec::conjugate(b, b.conj_auts.at(0));
}

using Case = std::pair<const char*, int>;

int inverse_mod(int k, int n) {
  for (int j = 1; j < n; ++j)
    if (k * j % n == 1) return j;
  return -1;
}

}  // namespace

TEST_CASE("approximation at depth 0 and 1") {
  const IFSSpec s = window("delta", 8);
  CHECK(approximate(s, 0).points == std::vector<CyclotomicInt>{CyclotomicInt(8)});
  auto digits = s.digits.digits;
  std::sort(digits.begin(), digits.end());
  CHECK(approximate(s, 1).points == digits);
  CHECK_THROWS_AS(approximate(s, -1), InvalidInput);
  CHECK_THROWS_AS(approximate(s, 6, 100), ResourceError);
}

TEST_CASE("self-similarity and nesting of approximations") {
  for (const auto& [name, order] : std::vector<Case>{{"delta", 8}, {"tau", 5}, {"mu", 12}}) {
    const IFSSpec s = window(name, order);
    std::vector<CyclotomicInt> prev;
    for (int d = 0; d <= 6; ++d) {
      const AttractorApprox a = approximate(s, d);
      const auto oracle = recursion(s, d);
      CHECK(std::vector<CyclotomicInt>(oracle.begin(), oracle.end()) == a.points);
      CHECK(std::includes(a.points.begin(), a.points.end(), prev.begin(), prev.end()));
      for (const auto& z : a.embedded) CHECK(std::abs(z) <= s.bounding_radius + 1e-9);
      prev = a.points;
    }
  }
}

TEST_CASE("membership examples") {
  const IFSSpec s = window("tau", 10);
  const auto zero = membership(s, CyclotomicInt(10));
  REQUIRE(zero.status == Membership::Inside);
  CHECK(zero.certificate->preperiod.empty());
  CHECK(zero.certificate->period == std::vector<int>{0});

  const BaseSpec tau = lookup("tau", 10);
  const auto m = membership(s, tau.beta);
  REQUIRE(m.status == Membership::Inside);
  CHECK(std::abs(certificate_value(s, *m.certificate) - embed(galois(tau.beta, 3))) < 1e-10);

  // |sigma(x)| beyond the bounding radius
  const CyclotomicInt far = galois(CyclotomicInt::from_int(10, 3), inverse_mod(3, 10));
  const auto out = membership(s, far);
  CHECK(out.status == Membership::Outside);
  CHECK(out.escape_depth == 0);
}

TEST_CASE("exact orbit route applies to unit quadratic windows and inverse contractions") {
  CHECK(window("tau", 5).exact_orbits());
  CHECK(window("tau", 10).exact_orbits());
  CHECK(window("tau2", 10).exact_orbits());
  CHECK(window("delta", 8).exact_orbits());
  CHECK_FALSE(window("mu", 12).exact_orbits());
  CHECK_FALSE(window("lambda", 7).exact_orbits());
  CHECK_FALSE(window("kappa", 18).exact_orbits());
  for (const auto& b : delone_cases())
    if (b.is_unit) CHECK(IFSSpec::inverse(b).exact_orbits());
  CHECK_THROWS_AS(IFSSpec::inverse(lookup("mu", 12)), InvalidInput);
}

TEST_CASE("certificates replay for conjugated spectrum points") {
  for (const auto& b : delone_cases()) {
    const Patch p = generate_ball(b, make_alphabet(b.order), 4);
    for (int k : b.conj_auts) {
      const IFSSpec s = IFSSpec::conjugate(b, k);
      for (const auto& x : p.points) {
        const auto m = membership(s, x);
        REQUIRE(m.status == Membership::Inside);
        CHECK(std::abs(certificate_value(s, *m.certificate) - embed(galois(x, k))) < 1e-10);
      }
    }
  }
}

TEST_CASE("membership agrees with distance to approximations") {
  // inside => within resolution of every approximation; farther than the
  // resolution from an approximation => outside.
  for (const auto& [name, order] : std::vector<Case>{{"tau", 5}, {"delta", 8}, {"tau2", 10}}) {
    const IFSSpec s = window(name, order);
    const AttractorApprox a = approximate(s, 6);
    const int inv = inverse_mod(s.automorphism, order);
    int inside = 0, outside = 0;
    const int d = s.contraction.degree();
    std::vector<std::int64_t> c(d, -2);
    while (true) {
      const CyclotomicInt z(order, c);
      if (std::abs(embed(z)) <= s.bounding_radius + 0.5) {
        const CyclotomicInt x = galois(z, inv);
        const auto m = membership(s, x);
        const double dist = distance_to(a, embed(z));
        if (m.status == Membership::Inside) {
          ++inside;
          CHECK(dist <= a.resolution + 1e-9);
        }
        if (dist > a.resolution + 1e-9) {
          ++outside;
          CHECK(m.status == Membership::Outside);
        }
      }
      int i = 0;
      while (i < d && c[i] == 2) c[i++] = -2;
      if (i == d) break;
      ++c[i];
    }
    CHECK(inside > 0);
    CHECK(outside > 0);
  }
}

TEST_CASE("delta window: the real extreme is never certified") {
  const BaseSpec b = lookup("delta", 8);
  const IFSSpec s = window("delta", 8);
  const double extreme = 1.0 / (1.0 + embed(s.contraction).real());
  const Patch p = generate_ball(b, make_alphabet(8), 8);
  for (const auto& x : p.points) {
    const auto m = membership(s, x);
    REQUIRE(m.certificate);
    CHECK(std::abs(certificate_value(s, *m.certificate) - extreme) > 1e-9);
  }
}

TEST_CASE("tau10 conjugated spectrum stays off the decagon boundary") {
  const BaseSpec b = lookup("tau", 10);
  const IFSSpec s = window("tau", 10);
  const double rr = embed(b.beta).real() + 1;  // circumradius tau^2
  std::vector<Complex> v;
  for (int j = 0; j < 10; ++j) v.push_back(std::polar(rr, 2 * M_PI * j / 10));
  const Patch p = generate_ball(b, make_alphabet(10), 6);
  for (const auto& z : conjugate_patch(p, 3)) {
    const Complex q = embed(z);
    CHECK(std::abs(q) <= s.bounding_radius + 1e-9);
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 10; ++j) {
      const Complex a = v[j], e = v[(j + 1) % 10] - v[j];
      const double t = std::clamp(std::real((q - a) * std::conj(e)) / std::norm(e), 0.0, 1.0);
      best = std::min(best, std::abs(q - (a + t * e)));
    }
    CHECK(best > 1e-9);
  }
  CHECK(conjugate_patch(generate_ball(b, make_alphabet(10), 0.5), 3) == std::vector<CyclotomicInt>{CyclotomicInt(10)});
}

TEST_CASE("state budget is enforced") {
  const IFSSpec s = window("tau", 5);
  const BaseSpec b = lookup("tau", 5);
  // a conjugated point near the boundary needs more than two states
  const Patch p = generate_ball(b, make_alphabet(5), 4);
  bool thrown = false;
  for (const auto& x : p.points) {
    try {
      membership(s, x, 2);
    } catch (const ResourceError& e) {
      thrown = true;
      CHECK(std::string(e.what()).find("budget 2") != std::string::npos);
      break;
    }
  }
  CHECK(thrown);
}

TEST_CASE("membership terminates for coefficient height up to 1000") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> coef(-1000, 1000);
  for (const auto& [name, order] : std::vector<Case>{{"tau", 5}, {"delta", 8}, {"tau2", 10}}) {
    const IFSSpec s = window(name, order);
    for (int i = 0; i < 100; ++i) {
      std::vector<std::int64_t> c(s.contraction.degree());
      for (auto& v : c) v = coef(rng);
      CHECK_NOTHROW(membership(s, CyclotomicInt(order, c)));
    }
  }
}

TEST_CASE("certified interior disks lie in K") {
  for (const auto& [name, order] : std::vector<Case>{{"tau", 5}, {"tau", 10}, {"mu", 12}, {"lambda", 7}}) {
    const IFSSpec s = window(name, order);
    REQUIRE(s.interior_radius > 0);
    bool certified = false;
    for (int m = 1; m <= 3 && !certified; ++m)
      certified = disk_covered(approximate(s, m).embedded, s.interior_radius, std::pow(s.contraction_modulus(), m));
    CHECK(certified);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < 40; ++i) {
      Complex z(u(rng), u(rng));
      if (std::abs(z) > 1) continue;
      CHECK(within_distance(s, z * s.interior_radius, 1e-3));
    }
  }
  CHECK_FALSE(within_distance(window("tau", 5), Complex(10, 0), 1e-3));
}

TEST_CASE("classification on the decagon window") {
  const BaseSpec b = lookup("tau", 10);
  const IFSSpec s = window("tau", 10);
  CHECK(classify(s, CyclotomicInt(10)).region == Region::Interior);
  // preimage of the vertex tau^2 of the decagon
  const CyclotomicInt vertex = galois(b.beta + CyclotomicInt::from_int(10, 1), inverse_mod(3, 10));
  const auto r = classify(s, vertex);
  CHECK(r.membership.status == Membership::Inside);
  CHECK(r.region == Region::Boundary);
}

TEST_CASE("representability witness: small lattice points lie in K(1/beta)") {
  for (const auto& b : delone_cases()) {
    if (!b.is_unit) continue;
    const IFSSpec s = IFSSpec::inverse(b);
    const CyclotomicInt small = pow(unit_inverse(b.beta), 3);
    for (int j = 0; j < b.order; ++j)
      CHECK(membership(s, small * CyclotomicInt::root_of_unity(b.order, j)).status == Membership::Inside);
  }
}
