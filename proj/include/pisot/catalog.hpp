#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pisot/cyclotomic.hpp"

namespace pisot {

/// A quadratic or cubic Pisot-cyclotomic base expressed inside Z[w_n].
struct BaseSpec {
  int order = 0;
  std::string name;                    // tau, tau2, lambda, delta, kappa, mu; empty if anonymous
  CyclotomicInt beta;
  std::vector<std::int64_t> min_poly;  // leading coefficient first, e.g. {1,-2,-1} = x^2-2x-1
  std::vector<int> conj_auts;          // canonical k with |sigma_k(beta)| < 1
  bool is_unit = false;
  std::string approx_text;             // catalog approximation, as tabulated
  bool expression_from_catalog = true; // false when found by the lattice search

  int degree() const { return static_cast<int>(min_poly.size()) - 1; }
  bool is_quadratic() const { return degree() == 2; }
  double value() const { return embed(beta).real(); }
  /// name if present, otherwise the minimal polynomial text.
  std::string label() const;
};

/// The digit set {0} u {w^j : j = 0..n-1}; digits[0] is zero and
/// digits[1 + j] is w^j.
struct Alphabet {
  int order = 0;
  std::vector<CyclotomicInt> digits;

  std::size_t size() const { return digits.size(); }
};

Alphabet make_alphabet(int order);

/// The 14 catalog rows (quadratic and cubic Pisot-cyclotomic numbers), each
/// at its smallest admissible order.
const std::vector<BaseSpec>& base_catalog();

/// Base by name at a given order (e.g. "tau", 10). Accepts unicode-free
/// aliases: tau, tau2, lambda, delta, kappa, mu. Throws InvalidInput.
BaseSpec lookup(std::string_view name, int order);

/// Base from its catalog row index (0..13) realized at a compatible order.
BaseSpec catalog_row_at_order(std::size_t row, int order);

/// The eight (base, order) cases whose spectrum is a Delone set.
std::vector<BaseSpec> delone_cases();

/// Canonical automorphism exponents with |sigma_k(beta)| < 1, one per
/// distinct conjugate value, smallest k first.
std::vector<int> contracting_automorphisms(const CyclotomicInt& beta);

/// "x^2-2x-1" style rendering of a leading-first coefficient list.
std::string polynomial_text(const std::vector<std::int64_t>& leading_first);

/// Evaluate a leading-first integer polynomial at a real double.
double evaluate_real(const std::vector<std::int64_t>& leading_first, double x);

}  // namespace pisot
