#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pisot/catalog.hpp"
#include "pisot/cyclotomic.hpp"
#include "pisot/geometry.hpp"

namespace pisot {

inline constexpr std::size_t kDefaultConfigBudget = 100'000;

/// Flattened coefficient vectors of the sorted point list; comparable and
/// hashable.
using ConfigKey = std::vector<std::int64_t>;

struct ConfigKeyHash {
  std::size_t operator()(const ConfigKey& k) const noexcept;
};

/// Smallest sorted serialization over the 2n maps z -> w^k z and
/// z -> w^k conj(z).
ConfigKey canonicalize(const std::vector<CyclotomicInt>& points, int order);

/// Sorted point list of the dihedral image w^k z (reflect: w^k conj(z)).
std::vector<CyclotomicInt> dihedral_image(const std::vector<CyclotomicInt>& points, int order, int k, bool reflect);

/// Configuration radius D/(beta-1) with D = max |a_i - a_j| over the
/// alphabet (D = 2 for even orders). Membership uses the closed ball by
/// default; it is decided in double precision away from the threshold and
/// exactly (y conj(y) (beta-1)^2 against D^2) near it.
class ConfigRadius {
 public:
  ConfigRadius(const BaseSpec& base, const Alphabet& alphabet, bool closed = true);
  bool contains(const CyclotomicInt& y) const;
  bool contains(const CyclotomicInt& y, Complex embedded) const;
  double value() const { return radius_; }
  bool closed() const { return closed_; }

 private:
  CyclotomicInt beta_minus_one_sq_;
  CyclotomicInt diameter_sq_;
  double radius_;
  bool closed_;
};

struct LocalConfig {
  std::vector<CyclotomicInt> points;  // canonical image, sorted, contains 0
  ConfigKey key;
  std::optional<std::size_t> parent;  // index into the enumeration
  int parent_digit = -1;              // alphabet index of the generating digit
  std::vector<std::int32_t> children; // per alphabet index; -1 if not expanded
};

struct ConfigEnumeration {
  BaseSpec base;
  Alphabet alphabet;
  std::vector<LocalConfig> configs;  // BFS order; configs[0] is lc(0)
  bool complete = false;
  std::size_t budget = 0;
  double radius = 0;
  bool closed = true;

  std::optional<std::size_t> find(const ConfigKey& key) const;
};

/// lc(0) from a ball patch.
std::vector<CyclotomicInt> origin_config(const BaseSpec& base, const Alphabet& alphabet, const ConfigRadius& radius);

/// lc(beta z + a) relative to beta z + a, from lc(z) relative to z.
std::vector<CyclotomicInt> child_config(const BaseSpec& base, const Alphabet& alphabet,
                                        const std::vector<CyclotomicInt>& parent, std::size_t digit,
                                        const ConfigRadius& radius);

/// Breadth-first closure of the descendant relation from lc(0). Stops once
/// `budget` distinct classes are known; complete=false then means the count
/// is a lower bound.
ConfigEnumeration enumerate_configs(const BaseSpec& base, const Alphabet& alphabet,
                                    std::size_t budget = kDefaultConfigBudget, bool closed = true);

struct TileClass {
  std::size_t representative = 0;  // config index
  std::vector<Complex> vertices;   // cell of 0 in the representative config
  std::vector<std::size_t> members;
  std::vector<std::int64_t> signature;
};

/// Shape quantum used for tile signatures.
inline constexpr double kShapeQuantum = 1e-7;

/// The cell of 0 inside a configuration of the given radius. Throws
/// std::logic_error if the cell is not determined by the configuration
/// (twice its radius reaches past the configuration radius).
ClippedCell config_cell(const std::vector<CyclotomicInt>& points, double config_radius);

/// Groups configurations by the congruence class of the cell of 0.
std::vector<TileClass> tile_inventory(const ConfigEnumeration& e);

struct ConfigEdge {
  std::size_t from;
  int digit;
  std::size_t to;
};

/// All descendant edges. Throws InvalidInput on an incomplete enumeration.
std::vector<ConfigEdge> config_graph(const ConfigEnumeration& e);

}  // namespace pisot
