#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pisot/catalog.hpp"
#include "pisot/cyclotomic.hpp"
#include "pisot/spectrum.hpp"

namespace pisot {

inline constexpr std::size_t kDefaultStateBudget = 1'000'000;
inline constexpr double kPruneSlack = 1e-9;

/// The IFS {z -> gamma z + a : a in digits} with attractor K(gamma, A).
/// Queries x are mapped by w -> w^automorphism before testing, so that
/// membership(x) decides sigma(x) in K.
struct IFSSpec {
  CyclotomicInt contraction;
  Alphabet digits;
  double bounding_radius = 0;  // 1/(1-|gamma|)
  int automorphism = 1;
  double interior_radius = 0;  // certified B_r(0) inside K; set by the factories

  /// K(sigma_k(beta), A_n); k must give |sigma_k(beta)| < 1.
  static IFSSpec conjugate(const BaseSpec& base, int k);
  /// K(1/beta, A_n); requires a unit.
  static IFSSpec inverse(const BaseSpec& base);

  double contraction_modulus() const;
  /// True when the digit orbits of lattice points take finitely many exact
  /// values: gamma is a unit and its only conjugates inside the unit disk
  /// are gamma and conj(gamma).
  bool exact_orbits() const;
  /// Builds an IFS from an explicit contraction and fills the radii.
  static IFSSpec from_contraction(const CyclotomicInt& gamma, const Alphabet& digits, int automorphism = 1);
};

struct AttractorApprox {
  IFSSpec spec;
  int depth = 0;
  std::vector<CyclotomicInt> points;  // sorted
  std::vector<Complex> embedded;
  double resolution = 0;  // bounding_radius |gamma|^depth
};

/// All sums sum_{i<depth} a_i gamma^i, deduplicated exactly.
AttractorApprox approximate(const IFSSpec& spec, int depth, std::size_t cap = kDefaultPointCap);

enum class Membership { Inside, Outside, BoundarySuspect };

/// Witness for sigma(x) in K. Periodic: x = sum of the eventually periodic
/// digit expansion. Disk tail: x = sum_{i<|word|} a_i gamma^i + gamma^|word| t
/// with |t| below the certified interior radius (so x lies in int K).
struct Certificate {
  enum Kind { Periodic, DiskTail } kind = Periodic;
  std::vector<int> preperiod;  // alphabet indices; for DiskTail the word
  std::vector<int> period;
  Complex tail{0, 0};  // DiskTail only
};

struct MembershipResult {
  Membership status = Membership::Outside;
  std::optional<Certificate> certificate;
  int escape_depth = 0;        // deepest level reached before all branches left B_R
  std::size_t states = 0;      // distinct states visited
  bool exact = true;           // false when decided by the approximation fallback
};

/// Decides sigma(x) in K. Exact orbit search when spec.exact_orbits(),
/// otherwise an interior certificate search followed by a distance test
/// against K with tolerance `tolerance`. Throws ResourceError when the
/// exact search exceeds `budget` states.
MembershipResult membership(const IFSSpec& spec, const CyclotomicInt& x, std::size_t budget = kDefaultStateBudget,
                            double tolerance = -1);

/// Value encoded by a certificate, for replay.
Complex certificate_value(const IFSSpec& spec, const Certificate& c);

/// Largest radius r (found by bisection) for which B_r(0) is covered by the
/// disks p + B_{|gamma|^m r} over the level-m partial sums p, for some
/// m <= max_level; checked on a grid with the cell diameter as margin.
/// Such a disk lies inside K.
double interior_disk_radius(const IFSSpec& spec, int max_level = 3);

/// Rigorous grid check that B_r(0) is covered by the union of
/// B_{scale r}(c) over the centers.
bool disk_covered(std::span<const Complex> centers, double r, double scale, int grid = 200);

enum class Region { Interior, Boundary, BoundarySuspect, Outside };

struct RegionResult {
  Region region = Region::Outside;
  MembershipResult membership;
  std::optional<Certificate> interior_certificate;
  bool heuristic = false;  // interior/boundary decided by the sampled-disk test
};

/// Radius of the sampled disk used by the heuristic interior test.
inline constexpr double kHeuristicDiskFraction = 1e-4;

/// Interior/boundary label for sigma(x). Interior is certified when a digit
/// path leads into the certified interior disk. Otherwise a heuristic is
/// used: 32 points on the circle of radius kHeuristicDiskFraction * R around
/// sigma(x) must all lie within an eighth of that radius of K. Points failing
/// both get Boundary after a finished exact search, BoundarySuspect
/// otherwise.
RegionResult classify(const IFSSpec& spec, const CyclotomicInt& x, std::size_t budget = kDefaultStateBudget);

/// True if z is within 2*tol of K, false if farther than tol; undecided
/// cases in between may go either way. Throws ResourceError past `budget`.
bool within_distance(const IFSSpec& spec, Complex z, double tol, std::size_t budget = kDefaultStateBudget);

/// Galois image of every patch point.
std::vector<CyclotomicInt> conjugate_patch(const Patch& p, int k);

std::string to_string(Membership m);
std::string to_string(Region r);

}  // namespace pisot
