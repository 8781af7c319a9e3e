#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "pisot/catalog.hpp"
#include "pisot/cyclotomic.hpp"

using namespace pisot;

namespace {

// Horner evaluation of the coefficient polynomial at exp(2 pi i/n) in long
// double complex; independent of the table-driven embed().
std::complex<long double> horner(const CyclotomicInt& x) {
  const long double a = 2.0L * 3.14159265358979323846264338327950288L / x.order();
  const std::complex<long double> w(std::cos(a), std::sin(a));
  std::complex<long double> acc = 0;
  for (int i = x.degree() - 1; i >= 0; --i) acc = acc * w + static_cast<long double>(x.coeff(i));
  return acc;
}

CyclotomicInt random_element(int n, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<std::int64_t> c(euler_totient(n));
  for (auto& v : c) v = d(rng);
  return CyclotomicInt(n, c);
}

const int kOrders[] = {5, 7, 8, 9, 10, 12, 14, 18};

}  // namespace

TEST_CASE("ring basics") {
  const auto w8 = CyclotomicInt::root_of_unity(8, 1);
  CHECK(w8 + w8 == 2 * w8);
  CHECK(w8 * CyclotomicInt::root_of_unity(8, 3) == CyclotomicInt::from_int(8, -1));
  CHECK(CyclotomicInt::root_of_unity(5, 2) * CyclotomicInt::root_of_unity(5, 3) == CyclotomicInt::from_int(5, 1));
  const auto w5 = CyclotomicInt::root_of_unity(5, 1);
  CHECK(embed(w5 + CyclotomicInt::root_of_unity(5, 4)).real() == doctest::Approx(0.6180339887).epsilon(1e-10));
  CHECK(w5 + CyclotomicInt(5) == w5);
  CHECK(std::abs(embed(w8) - Complex(0.7071067812, 0.7071067812)) < 1e-10);
  CHECK_THROWS_AS(w5 + w8, InvalidInput);
  CHECK_THROWS_AS(ring(11), InvalidInput);
}

TEST_CASE("tau squared is tau plus one") {
  const auto tau = lookup("tau", 5).beta;
  CHECK(tau * tau == tau + CyclotomicInt::from_int(5, 1));
}

TEST_CASE("embedding agrees with Horner evaluation") {
  std::mt19937_64 rng(7);
  for (int n : kOrders)
    for (int t = 0; t < 50; ++t) {
      const auto x = random_element(n, rng, 1000000);
      const auto h = horner(x);
      const Complex e = embed(x);
      const double scale = std::max(1.0, static_cast<double>(std::abs(h)));
      CHECK(std::abs(e.real() - static_cast<double>(h.real())) / scale < 1e-12);
      CHECK(std::abs(e.imag() - static_cast<double>(h.imag())) / scale < 1e-12);
      const auto p = embed(x, 128);
      CHECK(std::abs(static_cast<double>(p.re) - e.real()) / scale < 1e-12);
    }
  CHECK_THROWS_AS(embed(CyclotomicInt(5), 40), InvalidInput);
}

TEST_CASE("galois is a ring homomorphism and composes") {
  std::mt19937_64 rng(11);
  for (int n : kOrders) {
    for (int t = 0; t < 20; ++t) {
      const auto x = random_element(n, rng, 50), y = random_element(n, rng, 50);
      for (int k = 1; k < n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        CHECK(galois(x * y, k) == galois(x, k) * galois(y, k));
        CHECK(galois(x + y, k) == galois(x, k) + galois(y, k));
        for (int k2 = 1; k2 < n; ++k2)
          if (std::gcd(k2, n) == 1) CHECK(galois(galois(x, k), k2) == galois(x, (k * k2) % n));
      }
    }
    if (n % 2 == 0) CHECK_THROWS_AS(galois(CyclotomicInt::root_of_unity(n, 1), 2), InvalidInput);
  }
  CHECK(galois(CyclotomicInt::root_of_unity(5, 1), 2) == CyclotomicInt::root_of_unity(5, 2));
  CHECK(galois(CyclotomicInt::root_of_unity(10, 1), 3) == CyclotomicInt::root_of_unity(10, 3));
  CHECK(embed(galois(lookup("tau", 5).beta, 2)).real() == doctest::Approx(-0.6180339887).epsilon(1e-10));
}

TEST_CASE("multiplication by a digit permutes the roots of unity") {
  for (int n : kOrders) {
    const Alphabet A = make_alphabet(n);
    std::set<CyclotomicInt> roots(A.digits.begin() + 1, A.digits.end());
    CHECK(roots.size() == static_cast<std::size_t>(n));
    for (std::size_t i = 1; i < A.size(); ++i) {
      std::set<CyclotomicInt> image;
      for (std::size_t j = 1; j < A.size(); ++j) image.insert(A.digits[i] * A.digits[j]);
      CHECK(image == roots);
      CHECK(std::abs(std::abs(embed(A.digits[i])) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("checked arithmetic refuses to overflow") {
  const auto big = CyclotomicInt::from_int(8, std::int64_t{1} << 62);
  CHECK_THROWS_AS(big + big, std::overflow_error);
}

TEST_CASE("norm and unit inverse") {
  const auto delta = lookup("delta", 8).beta;
  CHECK(norm(delta) == 1);
  CHECK(delta * unit_inverse(delta) == CyclotomicInt::from_int(8, 1));
  CHECK_THROWS_AS(unit_inverse(lookup("mu", 12).beta), InvalidInput);
  CHECK(real_sign(lookup("tau", 10).beta - CyclotomicInt::from_int(10, 2)) == -1);
  CHECK(real_sign(CyclotomicInt(10)) == 0);
  CHECK_THROWS_AS(real_sign(CyclotomicInt::root_of_unity(10, 1)), InvalidInput);
}

TEST_CASE("catalog") {
  const auto& cat = base_catalog();
  REQUIRE(cat.size() == 14);
  for (const auto& b : cat) {
    const double v = b.value();
    CHECK(std::abs(evaluate_real(b.min_poly, v)) < 1e-9);
    CHECK(std::abs(v - std::stod(b.approx_text)) < 1e-8);
    CHECK(b.conj_auts.size() == static_cast<std::size_t>(b.degree() - 1));
    for (int k : b.conj_auts) CHECK(std::abs(embed(galois(b.beta, k))) < 1.0);
    CHECK(std::abs(embed(b.beta).imag()) < 1e-12);
  }
  const auto delta = lookup("delta", 8);
  CHECK(delta.min_poly == std::vector<std::int64_t>{1, -2, -1});
  CHECK(delta.is_unit);
  const auto mu = lookup("mu", 12);
  CHECK(mu.min_poly == std::vector<std::int64_t>{1, -2, -2});
  CHECK_FALSE(mu.is_unit);
  CHECK(lookup("lambda", 7).conj_auts == std::vector<int>{2, 3});
  CHECK(lookup("tau", 5).conj_auts == std::vector<int>{2});
  CHECK(lookup("tau", 10).conj_auts == std::vector<int>{3});
  CHECK(lookup("tau2", 10).conj_auts == std::vector<int>{3});
  CHECK(lookup("delta", 8).conj_auts == std::vector<int>{3});
  CHECK(lookup("mu", 12).conj_auts == std::vector<int>{5});
  CHECK(std::abs(lookup("kappa", 9).value() - 2.879385242) < 1e-8);
  CHECK_THROWS_AS(lookup("delta", 7), InvalidInput);
  CHECK_THROWS_AS(lookup("phi", 5), InvalidInput);
  for (const auto& b : delone_cases()) CHECK(b.expression_from_catalog);
  int derived = 0;
  for (const auto& b : cat) derived += b.expression_from_catalog ? 0 : 1;
  // tau2 and kappa at their smallest orders 5 and 9 plus the five anonymous rows
  CHECK(derived == 10);
}
