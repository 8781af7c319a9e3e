#include "pisot/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace pisot {

namespace {

struct Row {
  const char* name;
  std::vector<std::int64_t> poly;  // leading first
  const char* approx;
  std::vector<int> orders;         // admissible orders, smallest first
};

const std::vector<Row>& rows() {
  static const std::vector<Row> table = {
      {"tau", {1, -1, -1}, "1.618033989", {5, 10}},
      {"tau2", {1, -3, 1}, "2.618033989", {5, 10}},
      {"lambda", {1, -2, -1, 1}, "2.246979604", {7, 14}},
      {"", {1, -3, -4, -1}, "4.048917340", {7, 14}},
      {"", {1, -6, 5, -1}, "5.048917340", {7, 14}},
      {"", {1, -20, -9, -1}, "20.44264896", {7, 14}},
      {"", {1, -23, 34, -13}, "21.44264896", {7, 14}},
      {"delta", {1, -2, -1}, "2.414213562", {8}},
      {"", {1, -4, 2}, "3.414213562", {8}},
      {"kappa", {1, -3, 0, 1}, "2.879385242", {9, 18}},
      {"", {1, -6, -9, -3}, "7.290859369", {9, 18}},
      {"", {1, -9, 6, -1}, "8.290859369", {9, 18}},
      {"mu", {1, -2, -2}, "2.732050808", {12}},
      {"", {1, -4, 1}, "3.732050808", {12}},
  };
  return table;
}

// 1 + w^j + w^-j (or w^j + w^-j when with_one is false).
CyclotomicInt cosine_form(int n, int j, bool with_one) {
  CyclotomicInt x = CyclotomicInt::root_of_unity(n, j) + CyclotomicInt::root_of_unity(n, -j);
  if (with_one) x = x + CyclotomicInt::from_int(n, 1);
  return x;
}

// Expressions quoted with the catalog for the Delone cases.
std::optional<CyclotomicInt> catalog_expression(std::string_view name, int n) {
  if (name == "tau" && n == 5) return cosine_form(5, 1, true);
  if (name == "tau" && n == 10) return cosine_form(10, 1, false);
  if (name == "tau2" && n == 10) return cosine_form(10, 1, true);
  if (name == "lambda" && n == 7) return cosine_form(7, 1, true);
  if (name == "lambda" && n == 14) return cosine_form(14, 2, true);
  if (name == "delta" && n == 8) return cosine_form(8, 1, true);
  if (name == "kappa" && n == 18) return cosine_form(18, 1, true);
  if (name == "mu" && n == 12) return cosine_form(12, 1, true);
  return std::nullopt;
}

std::vector<std::int64_t> low_first(const std::vector<std::int64_t>& leading_first) {
  return {leading_first.rbegin(), leading_first.rend()};
}

double pisot_root(const std::vector<std::int64_t>& poly, double guess) {
  double x = guess;
  for (int it = 0; it < 100; ++it) {
    double p = 0, dp = 0;
    for (auto c : poly) {
      dp = dp * x + p;
      p = p * x + static_cast<double>(c);
    }
    const double step = p / dp;
    x -= step;
    if (std::abs(step) < 1e-15 * std::abs(x)) break;
  }
  return x;
}

// Smallest-L1 vector (c_0, ..., c_{d-1}) with
//   beta = c_0 + sum_j c_j (w^j + w^-j)
// that is an exact root of the minimal polynomial.
CyclotomicInt search_expression(const std::vector<std::int64_t>& poly, double root, int n) {
  const int d = euler_totient(n) / 2;
  const int bound = 40;
  std::vector<CyclotomicInt> basis;
  std::vector<double> basis_val;
  for (int j = 1; j < d; ++j) {
    basis.push_back(cosine_form(n, j, false));
    basis_val.push_back(2.0 * std::cos(2.0 * M_PI * j / n));
  }
  const auto lf = low_first(poly);
  std::optional<CyclotomicInt> best;
  long best_l1 = 0;
  std::vector<int> c(basis.size(), -bound);
  while (true) {
    double s = 0;
    long l1 = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      s += c[i] * basis_val[i];
      l1 += std::labs(c[i]);
    }
    const long c0 = std::lround(root - s);
    l1 += std::labs(c0);
    if (std::abs(c0 + s - root) < 1e-8 && (!best || l1 < best_l1)) {
      CyclotomicInt x = CyclotomicInt::from_int(n, c0);
      for (std::size_t i = 0; i < c.size(); ++i) x = x + static_cast<std::int64_t>(c[i]) * basis[i];
      if (evaluate_polynomial(lf, x).is_zero()) {
        best = x;
        best_l1 = l1;
      }
    }
    std::size_t i = 0;
    while (i < c.size() && c[i] == bound) c[i++] = -bound;
    if (i == c.size()) break;
    ++c[i];
  }
  if (!best) throw std::logic_error("no cyclotomic expression found for catalog row");
  return *best;
}

BaseSpec build(const Row& row, int order) {
  if (std::find(row.orders.begin(), row.orders.end(), order) == row.orders.end())
    throw InvalidInput("catalog row " + std::string(row.approx) + " is not Pisot-cyclotomic of order " +
                       std::to_string(order));
  BaseSpec b;
  b.order = order;
  b.name = row.name;
  b.min_poly = row.poly;
  b.approx_text = row.approx;
  if (auto e = catalog_expression(row.name, order)) {
    b.beta = *e;
    b.expression_from_catalog = true;
  } else {
    b.beta = search_expression(row.poly, pisot_root(row.poly, std::atof(row.approx)), order);
    b.expression_from_catalog = false;
  }
  if (!evaluate_polynomial(low_first(row.poly), b.beta).is_zero())
    throw std::logic_error("catalog expression is not a root of its minimal polynomial");
  b.conj_auts = contracting_automorphisms(b.beta);
  const std::int64_t constant = row.poly.back();
  b.is_unit = constant == 1 || constant == -1;
  return b;
}

}  // namespace

std::string BaseSpec::label() const { return name.empty() ? polynomial_text(min_poly) : name; }

Alphabet make_alphabet(int order) {
  Alphabet a;
  a.order = order;
  a.digits.push_back(CyclotomicInt(order));
  for (int j = 0; j < order; ++j) a.digits.push_back(CyclotomicInt::root_of_unity(order, j));
  return a;
}

std::vector<int> contracting_automorphisms(const CyclotomicInt& beta) {
  const int n = beta.order();
  std::vector<int> out;
  std::vector<CyclotomicInt> seen;
  for (int k = 1; k < n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    const CyclotomicInt img = galois(beta, k);
    if (std::abs(embed(img)) >= 1.0) continue;
    if (std::find(seen.begin(), seen.end(), img) != seen.end()) continue;
    seen.push_back(img);
    out.push_back(k);
  }
  return out;
}

const std::vector<BaseSpec>& base_catalog() {
  static const std::vector<BaseSpec> catalog = [] {
    std::vector<BaseSpec> out;
    for (const auto& row : rows()) out.push_back(build(row, row.orders.front()));
    return out;
  }();
  return catalog;
}

BaseSpec catalog_row_at_order(std::size_t row, int order) {
  if (row >= rows().size()) throw InvalidInput("catalog row out of range");
  return build(rows()[row], order);
}

BaseSpec lookup(std::string_view name, int order) {
  static const std::map<std::string, std::string, std::less<>> aliases = {
      {"tau", "tau"},     {"τ", "tau"},       {"tau2", "tau2"}, {"tau^2", "tau2"}, {"τ²", "tau2"},
      {"lambda", "lambda"}, {"λ", "lambda"}, {"delta", "delta"}, {"δ", "delta"},
      {"kappa", "kappa"}, {"κ", "kappa"},     {"mu", "mu"},     {"μ", "mu"}};
  const auto it = aliases.find(name);
  if (it == aliases.end()) throw InvalidInput("unknown base name '" + std::string(name) + "'");
  for (const auto& row : rows())
    if (it->second == row.name) return build(row, order);
  throw InvalidInput("unknown base name '" + std::string(name) + "'");
}

std::vector<BaseSpec> delone_cases() {
  return {lookup("tau", 5),    lookup("tau", 10),   lookup("tau2", 10), lookup("lambda", 7),
          lookup("lambda", 14), lookup("delta", 8), lookup("kappa", 18), lookup("mu", 12)};
}

std::string polynomial_text(const std::vector<std::int64_t>& p) {
  std::ostringstream os;
  const int deg = static_cast<int>(p.size()) - 1;
  bool first = true;
  for (int i = 0; i <= deg; ++i) {
    const std::int64_t c = p[i];
    const int e = deg - i;
    if (c == 0) continue;
    if (!first) os << (c < 0 ? "-" : "+");
    else if (c < 0) os << "-";
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || e == 0) os << a;
    if (e >= 1) os << "x";
    if (e >= 2) os << "^" << e;
    first = false;
  }
  return os.str();
}

double evaluate_real(const std::vector<std::int64_t>& p, double x) {
  double acc = 0;
  for (auto c : p) acc = acc * x + static_cast<double>(c);
  return acc;
}

}  // namespace pisot
