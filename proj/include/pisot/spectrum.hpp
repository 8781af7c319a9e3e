#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "pisot/catalog.hpp"
#include "pisot/cyclotomic.hpp"

namespace pisot {

/// Slack applied when testing closed balls with embedded moduli.
inline constexpr double kBallSlack = 1e-9;

/// Default cap on the number of points a degree-bounded patch may hold.
inline constexpr std::size_t kDefaultPointCap = 6'000'000;

enum class PatchKind { Ball, Degree };

/// A finite piece of the spectrum X^A(beta).
///
/// Points are unique and sorted by coefficient vector; `embedded[i]` is the
/// complex embedding of `points[i]`. For ball patches, `complete` means the
/// points are exactly X^A(beta) intersected with the closed ball.
struct Patch {
  BaseSpec base;
  Alphabet alphabet;
  std::vector<CyclotomicInt> points;
  std::vector<Complex> embedded;
  PatchKind kind = PatchKind::Ball;
  double radius = 0;     // ball radius (Ball) or 0
  int degree_bound = 0;  // nmax (Degree) or 0
  bool complete = false;

  std::size_t size() const { return points.size(); }
  bool contains(const CyclotomicInt& x) const;
  std::optional<std::size_t> index_of(const CyclotomicInt& x) const;
};

/// Closed-ball patch X^A(beta) within |z| <= radius, by the growth-and-prune
/// fixed point. Always complete.
Patch generate_ball(const BaseSpec& base, const Alphabet& alphabet, double radius);

/// X_nmax = { sum_{j<=nmax} a_j beta^j }. Throws ResourceError when the
/// point count would exceed `cap`.
Patch generate_degree(const BaseSpec& base, const Alphabet& alphabet, int nmax,
                      std::size_t cap = kDefaultPointCap);

/// Minimum distance between distinct patch points, via a bucket grid.
/// Throws InvalidInput for patches with fewer than two points.
double min_pairwise_distance(const Patch& patch);

enum class DensityAnswer { Yes, No };
enum class DensityReason { CardinalityBound, HerrerosLower, HerrerosUpper, TableLookup };

struct DensityVerdict {
  DensityAnswer relatively_dense = DensityAnswer::No;
  DensityReason reason = DensityReason::CardinalityBound;
  double compared_value = 0;  // the threshold the base was compared against
};

/// Thrown when neither the cardinality bound nor the polygon-alphabet
/// representability bounds decide relative density.
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relative-density verdict for the polygonal alphabet A_n.
DensityVerdict density_verdict(const BaseSpec& base, const Alphabet& alphabet);

/// Cardinality-only verdict for an arbitrary real base and alphabet size.
DensityVerdict cardinality_verdict(double beta, std::size_t alphabet_size);

std::string to_string(DensityAnswer a);
std::string to_string(DensityReason r);

}  // namespace pisot
