#pragma once

// Published reference values for the eight Delone cases and (kappa, 9),
// used by `repro` and the acceptance checks. Values are copied as printed,
// so their last digit is truncated rather than rounded.

#include <array>
#include <string_view>

namespace pisot::reference {

struct DensityRow {
  std::string_view name;
  int order;
  bool relatively_dense;
};

inline constexpr std::array<DensityRow, 9> kDensity{{
    {"tau", 5, true},     {"tau", 10, true},   {"tau2", 10, true},
    {"lambda", 7, true},  {"lambda", 14, true}, {"delta", 8, true},
    {"kappa", 9, false},  {"kappa", 18, true},  {"mu", 12, true},
}};

/// 1 + cos(pi/9) + cos(pi/9)^2, the threshold that (kappa, 9) misses.
inline constexpr double kKappa9Threshold = 2.822714843;

struct IntervalRow {
  std::string_view name;
  int order;
  double s;
  double t;
  std::string_view missing;  // none, boundary_only, interior
};

inline constexpr std::array<IntervalRow, 5> kIntervals{{
    {"tau", 5, 4.45406, 1.70130, "interior"},
    {"tau", 10, 2.75276, 2.75276, "boundary_only"},
    {"tau2", 10, 1.70130, 1.05146, "boundary_only"},
    {"delta", 8, 2.41421, 1.0, "none"},
    {"mu", 12, 7.46410, 1.15470, "interior"},
}};

struct CoveringRow {
  std::string_view name;
  int order;
  double region_R;
  double r_c;
  int n;
};

inline constexpr std::array<CoveringRow, 8> kCovering{{
    {"tau", 5, 1.6180339895, 0.7639320250, 6},
    {"tau", 10, 1.6180339895, 0.6498393940, 3},
    {"tau2", 10, 1.3763819202, 1.051462225, 1},
    {"lambda", 7, 1.2469796034, 1.109916265, 1},
    {"lambda", 14, 1.2469796034, 1.025716864, 1},
    {"delta", 8, 1.3065629649, 1.082392201, 1},
    {"kappa", 18, 1.4619022000, 1.015426612, 1},
    {"mu", 12, 1.4142135622, 1.035276182, 1},
}};

struct ConfigRow {
  std::string_view name;
  int order;
  long configs;
  long tiles;
  bool exact;  // false: the counts are lower bounds
};

inline constexpr std::array<ConfigRow, 8> kConfigs{{
    {"tau", 5, 7823, 12, true},
    {"tau", 10, 3818, 5, true},
    {"tau2", 10, 20, 5, true},
    {"lambda", 7, 279, 201, false},
    {"lambda", 14, 815, 189, false},
    {"delta", 8, 26, 5, true},
    {"kappa", 18, 881, 154, false},
    {"mu", 12, 1002, 104, false},
}};

}  // namespace pisot::reference
