#pragma once

#include <array>
#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

namespace pisot {

/// Raised when an operation receives arguments outside its contract
/// (order mismatch, non-coprime automorphism exponent, unsupported order).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a configured cap or budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Complex = std::complex<double>;
using BigFloat = boost::multiprecision::mpfr_float;

struct PreciseComplex {
  BigFloat re;
  BigFloat im;
};

/// Default embedding precision in bits.
inline constexpr unsigned kDefaultPrecision = 64;

/// Tables describing Z[w_n]: cyclotomic polynomial, reduced powers of w,
/// and the complex embedding of the power basis.
struct CyclotomicRing {
  int order = 0;
  int degree = 0;                          // Euler totient
  std::vector<std::int64_t> cyclotomic;    // low-to-high, monic, size degree+1
  std::vector<std::vector<std::int64_t>> powers;  // w^k reduced, k = 0..order-1
  std::vector<long double> basis_re;       // Re w^j, j < degree
  std::vector<long double> basis_im;
};

/// Largest supported totient; orders with phi(n) <= 6 are accepted.
inline constexpr std::size_t kMaxDegree = 6;

int euler_totient(int n);
bool is_supported_order(int n);

/// Ring tables for order n. Throws InvalidInput for unsupported orders.
const CyclotomicRing& ring(int n);

/// Exact element of Z[w_n] in the power basis 1, w, ..., w^{phi(n)-1}.
///
/// Coefficients are 64-bit with checked arithmetic: any overflow raises
/// std::overflow_error instead of wrapping. Values are immutable in practice;
/// all operations return new elements.
class CyclotomicInt {
 public:
  using Coeffs = std::array<std::int64_t, kMaxDegree>;

  CyclotomicInt() = default;
  explicit CyclotomicInt(int order);
  CyclotomicInt(int order, std::span<const std::int64_t> coeffs);

  static CyclotomicInt from_int(int order, std::int64_t value);
  /// w^k for any integer k (negative exponents allowed).
  static CyclotomicInt root_of_unity(int order, long long k);

  int order() const { return order_; }
  int degree() const { return degree_; }
  std::span<const std::int64_t> coeffs() const {
    return {coeffs_.data(), static_cast<std::size_t>(degree_)};
  }
  const Coeffs& raw() const { return coeffs_; }
  std::int64_t coeff(std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  /// Largest absolute coefficient.
  std::int64_t height() const;

  CyclotomicInt operator-() const;
  friend CyclotomicInt operator+(const CyclotomicInt& x, const CyclotomicInt& y);
  friend CyclotomicInt operator-(const CyclotomicInt& x, const CyclotomicInt& y);
  friend CyclotomicInt operator*(const CyclotomicInt& x, const CyclotomicInt& y);
  friend CyclotomicInt operator*(std::int64_t k, const CyclotomicInt& x);
  CyclotomicInt& operator+=(const CyclotomicInt& y) { return *this = *this + y; }
  CyclotomicInt& operator-=(const CyclotomicInt& y) { return *this = *this - y; }
  CyclotomicInt& operator*=(const CyclotomicInt& y) { return *this = *this * y; }

  friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;
  /// Lexicographic order on (order, coefficient vector).
  friend std::strong_ordering operator<=>(const CyclotomicInt& x, const CyclotomicInt& y);

  std::string to_string() const;

 private:
  std::uint8_t order_ = 0;
  std::uint8_t degree_ = 0;
  Coeffs coeffs_{};
};

std::ostream& operator<<(std::ostream& os, const CyclotomicInt& x);

CyclotomicInt add(const CyclotomicInt& x, const CyclotomicInt& y);
CyclotomicInt mul(const CyclotomicInt& x, const CyclotomicInt& y);
CyclotomicInt pow(const CyclotomicInt& x, unsigned e);

/// Image under the automorphism w -> w^k. Requires gcd(k, n) = 1.
CyclotomicInt galois(const CyclotomicInt& x, int k);

/// Complex conjugation, i.e. galois(x, n - 1).
CyclotomicInt conjugate(const CyclotomicInt& x);

/// Exact norm N(x) = product of all Galois conjugates (an integer).
std::int64_t norm(const CyclotomicInt& x);

/// Exact inverse when x is a unit of Z[w]; throws InvalidInput otherwise.
CyclotomicInt unit_inverse(const CyclotomicInt& x);

/// Evaluate an integer polynomial (low-to-high coefficients) at x exactly.
CyclotomicInt evaluate_polynomial(std::span<const std::int64_t> poly, const CyclotomicInt& x);

/// Fast embedding at w = exp(2 pi i / n); accumulates in long double.
Complex embed(const CyclotomicInt& x);

/// Embedding evaluated with the requested number of mantissa bits (>= 53).
PreciseComplex embed(const CyclotomicInt& x, unsigned precision_bits);

/// Sign (-1, 0, +1) of a real element; exact zero test, then a 128-bit
/// evaluation. Throws InvalidInput if x is not fixed by complex conjugation.
int real_sign(const CyclotomicInt& x);

struct CyclotomicHash {
  std::size_t operator()(const CyclotomicInt& x) const noexcept;
};

}  // namespace pisot
