#include "pisot/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include <mpfr.h>

namespace pisot {

namespace {

constexpr int kMaxOrder = 18;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

using Poly = std::vector<std::int64_t>;

// Exact division by a monic polynomial; the remainder must vanish.
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly q(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const std::int64_t t = num[k];
    q[k - dn] = t;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= t * den[j];
  }
  return q;
}

Poly cyclotomic_polynomial(int n, const std::array<Poly, kMaxOrder + 1>& smaller) {
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, smaller[d]);
  return p;
}

CyclotomicRing build_ring(int n, const Poly& phi_poly) {
  CyclotomicRing r;
  r.order = n;
  r.degree = static_cast<int>(phi_poly.size()) - 1;
  r.cyclotomic = phi_poly;
  std::vector<std::int64_t> cur(r.degree, 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    r.powers.push_back(cur);
    // multiply by w and reduce x^degree = -sum phi_j x^j
    std::int64_t top = cur[r.degree - 1];
    for (int j = r.degree - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    for (int j = 0; j < r.degree; ++j) cur[j] -= top * phi_poly[j];
  }
  const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
  for (int j = 0; j < r.degree; ++j) {
    r.basis_re.push_back(std::cos(two_pi * j / n));
    r.basis_im.push_back(std::sin(two_pi * j / n));
  }
  return r;
}

struct RingTable {
  std::array<CyclotomicRing, kMaxOrder + 1> rings;
  RingTable() {
    std::array<Poly, kMaxOrder + 1> polys;
    for (int n = 1; n <= kMaxOrder; ++n) {
      polys[n] = cyclotomic_polynomial(n, polys);
      if (polys[n].size() - 1 <= kMaxDegree) rings[n] = build_ring(n, polys[n]);
    }
  }
};

const RingTable& ring_table() {
  static const RingTable table;
  return table;
}

void require_same_order(const CyclotomicInt& x, const CyclotomicInt& y) {
  if (x.order() != y.order())
    throw InvalidInput("cyclotomic order mismatch: " + std::to_string(x.order()) + " vs " +
                       std::to_string(y.order()));
}

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 2;
}

}  // namespace

int euler_totient(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

bool is_supported_order(int n) {
  return n >= 1 && n <= kMaxOrder && euler_totient(n) <= static_cast<int>(kMaxDegree);
}

const CyclotomicRing& ring(int n) {
  if (!is_supported_order(n))
    throw InvalidInput("unsupported cyclotomic order " + std::to_string(n));
  return ring_table().rings[n];
}

CyclotomicInt::CyclotomicInt(int order) {
  const auto& r = ring(order);
  order_ = static_cast<std::uint8_t>(order);
  degree_ = static_cast<std::uint8_t>(r.degree);
}

CyclotomicInt::CyclotomicInt(int order, std::span<const std::int64_t> coeffs) : CyclotomicInt(order) {
  if (coeffs.size() != degree_)
    throw InvalidInput("coefficient vector length " + std::to_string(coeffs.size()) +
                       " does not match phi(" + std::to_string(order) + ") = " + std::to_string(degree_));
  std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

CyclotomicInt CyclotomicInt::from_int(int order, std::int64_t value) {
  CyclotomicInt x(order);
  x.coeffs_[0] = value;
  return x;
}

CyclotomicInt CyclotomicInt::root_of_unity(int order, long long k) {
  const auto& r = ring(order);
  long long e = k % order;
  if (e < 0) e += order;
  return CyclotomicInt(order, r.powers[static_cast<std::size_t>(e)]);
}

bool CyclotomicInt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t CyclotomicInt::height() const {
  std::int64_t h = 0;
  for (auto c : coeffs_) h = std::max(h, c < 0 ? -c : c);
  return h;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt r = *this;
  for (int i = 0; i < degree_; ++i) r.coeffs_[i] = checked_sub(0, coeffs_[i]);
  return r;
}

CyclotomicInt operator+(const CyclotomicInt& x, const CyclotomicInt& y) {
  require_same_order(x, y);
  CyclotomicInt r = x;
  for (int i = 0; i < x.degree_; ++i) r.coeffs_[i] = checked_add(x.coeffs_[i], y.coeffs_[i]);
  return r;
}

CyclotomicInt operator-(const CyclotomicInt& x, const CyclotomicInt& y) {
  require_same_order(x, y);
  CyclotomicInt r = x;
  for (int i = 0; i < x.degree_; ++i) r.coeffs_[i] = checked_sub(x.coeffs_[i], y.coeffs_[i]);
  return r;
}

CyclotomicInt operator*(std::int64_t k, const CyclotomicInt& x) {
  CyclotomicInt r = x;
  for (int i = 0; i < x.degree_; ++i) r.coeffs_[i] = checked_mul(k, x.coeffs_[i]);
  return r;
}

CyclotomicInt operator*(const CyclotomicInt& x, const CyclotomicInt& y) {
  require_same_order(x, y);
  const int d = x.degree_;
  std::array<std::int64_t, 2 * kMaxDegree - 1> prod{};
  for (int i = 0; i < d; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      prod[i + j] = checked_add(prod[i + j], checked_mul(x.coeffs_[i], y.coeffs_[j]));
  }
  const auto& phi = ring(x.order_).cyclotomic;
  for (int k = 2 * d - 2; k >= d; --k) {
    const std::int64_t t = prod[k];
    if (t == 0) continue;
    prod[k] = 0;
    for (int j = 0; j < d; ++j)
      if (phi[j] != 0) prod[k - d + j] = checked_sub(prod[k - d + j], checked_mul(t, phi[j]));
  }
  CyclotomicInt r = x;
  std::copy(prod.begin(), prod.begin() + d, r.coeffs_.begin());
  return r;
}

std::strong_ordering operator<=>(const CyclotomicInt& x, const CyclotomicInt& y) {
  if (auto c = x.order_ <=> y.order_; c != 0) return c;
  return x.coeffs_ <=> y.coeffs_;
}

std::string CyclotomicInt::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicInt& x) {
  os << '[';
  for (int i = 0; i < x.degree(); ++i) os << (i ? "," : "") << x.coeff(i);
  return os << ']';
}

CyclotomicInt add(const CyclotomicInt& x, const CyclotomicInt& y) { return x + y; }
CyclotomicInt mul(const CyclotomicInt& x, const CyclotomicInt& y) { return x * y; }

CyclotomicInt pow(const CyclotomicInt& x, unsigned e) {
  CyclotomicInt result = CyclotomicInt::from_int(x.order(), 1);
  CyclotomicInt base = x;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

CyclotomicInt galois(const CyclotomicInt& x, int k) {
  const int n = x.order();
  if (std::gcd(k, n) != 1)
    throw InvalidInput("automorphism exponent " + std::to_string(k) + " is not coprime to " + std::to_string(n));
  const auto& r = ring(n);
  int kk = k % n;
  if (kk < 0) kk += n;
  std::array<std::int64_t, kMaxDegree> acc{};
  for (int i = 0; i < x.degree(); ++i) {
    const std::int64_t c = x.coeff(i);
    if (c == 0) continue;
    const auto& p = r.powers[(static_cast<long long>(i) * kk) % n];
    for (int j = 0; j < x.degree(); ++j)
      if (p[j] != 0) acc[j] = checked_add(acc[j], checked_mul(c, p[j]));
  }
  return CyclotomicInt(n, std::span<const std::int64_t>(acc.data(), x.degree()));
}

CyclotomicInt conjugate(const CyclotomicInt& x) { return galois(x, x.order() - 1); }

namespace {

CyclotomicInt other_conjugates_product(const CyclotomicInt& x) {
  const int n = x.order();
  CyclotomicInt prod = CyclotomicInt::from_int(n, 1);
  for (int k = 2; k < n; ++k)
    if (std::gcd(k, n) == 1) prod = prod * galois(x, k);
  return prod;
}

}  // namespace

std::int64_t norm(const CyclotomicInt& x) {
  if (x.order() <= 2) return x.coeff(0);
  const CyclotomicInt full = x * other_conjugates_product(x);
  for (int i = 1; i < full.degree(); ++i)
    if (full.coeff(i) != 0) throw std::logic_error("norm is not rational");
  return full.coeff(0);
}

CyclotomicInt unit_inverse(const CyclotomicInt& x) {
  if (x.order() <= 2) {
    if (x.coeff(0) == 1 || x.coeff(0) == -1) return x;
    throw InvalidInput("element is not a unit");
  }
  const CyclotomicInt rest = other_conjugates_product(x);
  const CyclotomicInt full = x * rest;
  const std::int64_t nrm = full.coeff(0);
  if (nrm == 1) return rest;
  if (nrm == -1) return -rest;
  throw InvalidInput("element " + x.to_string() + " is not a unit (norm " + std::to_string(nrm) + ")");
}

CyclotomicInt evaluate_polynomial(std::span<const std::int64_t> poly, const CyclotomicInt& x) {
  CyclotomicInt acc(x.order());
  for (std::size_t k = poly.size(); k-- > 0;)
    acc = acc * x + CyclotomicInt::from_int(x.order(), poly[k]);
  return acc;
}

Complex embed(const CyclotomicInt& x) {
  const auto& r = ring(x.order());
  long double re = 0, im = 0;
  for (int j = 0; j < x.degree(); ++j) {
    const long double c = static_cast<long double>(x.coeff(j));
    re += c * r.basis_re[j];
    im += c * r.basis_im[j];
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

PreciseComplex embed(const CyclotomicInt& x, unsigned precision_bits) {
  if (precision_bits < 53) throw InvalidInput("embedding precision must be at least 53 bits");
  // Evaluate with MPFR directly so the bit precision is exact, then hand
  // the values over in boost wrappers of matching precision.
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits) + 16;
  mpfr_t angle, c, s, re, im, term;
  mpfr_inits2(prec, angle, c, s, re, im, term, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(re, 1);
  mpfr_set_zero(im, 1);
  for (int j = 0; j < x.degree(); ++j) {
    if (x.coeff(j) == 0) continue;
    mpfr_const_pi(angle, MPFR_RNDN);
    mpfr_mul_si(angle, angle, 2L * j, MPFR_RNDN);
    mpfr_div_si(angle, angle, x.order(), MPFR_RNDN);
    mpfr_sin_cos(s, c, angle, MPFR_RNDN);
    mpfr_mul_si(term, c, static_cast<long>(x.coeff(j)), MPFR_RNDN);
    mpfr_add(re, re, term, MPFR_RNDN);
    mpfr_mul_si(term, s, static_cast<long>(x.coeff(j)), MPFR_RNDN);
    mpfr_add(im, im, term, MPFR_RNDN);
  }
  const unsigned d10 = digits10_for_bits(precision_bits);
  PreciseComplex out{BigFloat(0, d10), BigFloat(0, d10)};
  mpfr_set_prec(out.re.backend().data(), static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set_prec(out.im.backend().data(), static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set(out.re.backend().data(), re, MPFR_RNDN);
  mpfr_set(out.im.backend().data(), im, MPFR_RNDN);
  mpfr_clears(angle, c, s, re, im, term, static_cast<mpfr_ptr>(nullptr));
  return out;
}

int real_sign(const CyclotomicInt& x) {
  if (x.is_zero()) return 0;
  if (conjugate(x) != x) throw InvalidInput("real_sign called on a non-real element");
  const PreciseComplex v = embed(x, 128);
  return v.re > 0 ? 1 : (v.re < 0 ? -1 : 0);
}

std::size_t CyclotomicHash::operator()(const CyclotomicInt& x) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(x.order());
  for (auto c : x.raw()) {
    h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

}  // namespace pisot
