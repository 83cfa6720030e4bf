#pragma once

// Slope lengths on the crossing-circle cusps and the two-sided volume bound
// for knots and links with many crossings in every twist region.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistvol/diagram.hpp"

namespace twistvol {

// Rectangle sides on a crossing-circle torus and the region's crossing count.
// The torus is two w-by-s rectangles.
struct SlopeGeometry {
  double white = 1;   // w
  double shaded = 1;  // s
  int crossings = 1;  // c
};

// Length of one white step plus c shaded steps over sqrt(area).
// Throws DomainError for non-positive sides or c < 1.
double normalized_length(const SlopeGeometry& g);

// sqrt(c), the minimum of normalized_length over all w and s.
double min_normalized_length(int c);

// Filling slopes at least this long (normalized) admit the cone deformation.
inline constexpr double kFillingLengthConstant = 56.4696;
double normalized_length_requirement();  // sqrt(2 * kFillingLengthConstant)
int crossing_threshold();                // smallest c with sqrt(c) above the requirement

inline constexpr double kV3 = 1.0149416064096536;

// Rounded constants as usually quoted next to what this library recomputes.
struct BoundConstants {
  double quoted_density = 0.853276;
  double quoted_augmented_coefficient = 3.51586;
  double quoted_per_cusp = 0.16436;
  double quoted_coefficient = 3.3515;

  double density = 0;                // sqrt(3) / (2 v3)
  double augmented_coefficient = 0;  // 3 / density
  double per_cusp = 0;               // the worst-case integral
  double per_cusp_error = 0;
  double coefficient = 0;            // augmented_coefficient - per_cusp

  friend bool operator==(const BoundConstants&, const BoundConstants&) = default;
};

BoundConstants bound_constants();

struct GateSummary {
  std::size_t twist_count = 0;
  bool prime = false;
  bool twist_reduced = false;
  std::size_t min_crossings_per_region = 0;
  int threshold = 0;
  bool threshold_overridden = false;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
  friend bool operator==(const GateSummary&, const GateSummary&) = default;
};

struct RegionBound {
  std::size_t crossings = 0;
  double normalized_length_floor = 0;  // sqrt(c)
  bool long_enough = false;            // floor >= normalized_length_requirement()

  friend bool operator==(const RegionBound&, const RegionBound&) = default;
};

struct VolumeBoundReport {
  std::string name;
  std::size_t crossing_count = 0;
  std::size_t component_count = 0;
  std::size_t twist_count = 0;
  GateSummary gate;
  std::vector<RegionBound> regions;
  // The lower bound holds for this diagram.
  bool applicable = false;
  // Only filled in when applicable.
  std::optional<double> cusp_volume;
  std::optional<double> augmented_lower;
  std::optional<double> delta_v;
  std::optional<double> lower;
  std::optional<double> lower_from_quoted;  // quoted_coefficient * tw
  std::vector<int> half_twists;             // orientation-convention relative
  // 10 v3 (tw - 1), reported whenever tw >= 1.
  std::optional<double> upper;
  BoundConstants constants;

  friend bool operator==(const VolumeBoundReport&, const VolumeBoundReport&) = default;
};

// Gate against crossing_threshold() unless another threshold is given.
VolumeBoundReport volume_bounds(const PlanarDiagram& d, std::optional<int> threshold = std::nullopt);

std::string report_to_json(const VolumeBoundReport& r, int indent = 2);
// Throws ParseError on malformed input.
VolumeBoundReport report_from_json(std::string_view text);
std::string report_table(const VolumeBoundReport& r);

}  // namespace twistvol
