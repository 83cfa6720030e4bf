#include "twistvol/bounds.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "twistvol/augmentation.hpp"
#include "twistvol/cone_engine.hpp"
#include "twistvol/errors.hpp"
#include "twistvol/twist_analysis.hpp"

namespace twistvol {

using nlohmann::json;

double normalized_length(const SlopeGeometry& g) {
  if (!(g.white > 0 && g.shaded > 0)) throw DomainError("rectangle sides must be positive");
  if (g.crossings < 1) throw DomainError("a twist region has at least one crossing");
  const double c = g.crossings;
  return std::sqrt(g.white / (2 * g.shaded) + c * c * g.shaded / (2 * g.white));
}

double min_normalized_length(int c) {
  if (c < 1) throw DomainError("a twist region has at least one crossing, got " + std::to_string(c));
  return std::sqrt(static_cast<double>(c));
}

double normalized_length_requirement() { return std::sqrt(2 * kFillingLengthConstant); }

int crossing_threshold() { return static_cast<int>(std::ceil(2 * kFillingLengthConstant)); }

BoundConstants bound_constants() {
  BoundConstants k;
  k.density = boroczky_density();
  k.augmented_coefficient = 3 / k.density;
  const auto integral = cone::delta_v_per_cusp(cone::min_z());
  k.per_cusp = integral.value;
  k.per_cusp_error = integral.error_estimate;
  k.coefficient = k.augmented_coefficient - k.per_cusp;
  return k;
}

VolumeBoundReport volume_bounds(const PlanarDiagram& d, std::optional<int> threshold) {
  VolumeBoundReport r;
  r.name = d.name();
  r.crossing_count = d.crossing_count();
  r.component_count = d.component_count();
  r.constants = bound_constants();

  const int c_min = threshold.value_or(crossing_threshold());
  const DiagramGate g = gate(d, c_min);
  r.twist_count = g.twist_count;
  r.gate = GateSummary{g.twist_count,      g.is_prime, g.is_twist_reduced, g.min_crossings_per_region,
                       c_min,              threshold.has_value() && *threshold != crossing_threshold(),
                       g.failures};

  const auto regions = twist_regions(d);
  for (const TwistRegion& t : regions) {
    const double floor = min_normalized_length(static_cast<int>(t.crossing_count()));
    r.regions.push_back({t.crossing_count(), floor, floor >= normalized_length_requirement()});
  }

  const double tw = static_cast<double>(r.twist_count);
  if (r.twist_count >= 1) r.upper = 10 * kV3 * (tw - 1);

  // The lower bound also needs every filling slope long enough, which the
  // crossing threshold only guarantees at its default value or above.
  bool slopes_ok = true;
  for (const RegionBound& b : r.regions) slopes_ok = slopes_ok && b.long_enough;
  r.applicable = g.passed() && slopes_ok;
  if (r.applicable) {
    const AugmentedLink a = augment(d, regions);
    r.cusp_volume = cusp_volume_lower(a);
    r.augmented_lower = volume_lower_boroczky(a);
    r.delta_v = cone::delta_v_bound(r.twist_count);
    r.lower = *r.augmented_lower - *r.delta_v;
    r.lower_from_quoted = r.constants.quoted_coefficient * tw;
    for (const CrossingCircle& c : a.crossing_circles) r.half_twists.push_back(c.half_twist);
  }
  return r;
}

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> read_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

}  // namespace

std::string report_to_json(const VolumeBoundReport& r, int indent) {
  json regions = json::array();
  for (const RegionBound& b : r.regions)
    regions.push_back({{"crossings", b.crossings},
                       {"normalized_length_floor", b.normalized_length_floor},
                       {"long_enough", b.long_enough}});
  const BoundConstants& k = r.constants;
  json j = {
      {"name", r.name},
      {"crossing_count", r.crossing_count},
      {"component_count", r.component_count},
      {"twist_count", r.twist_count},
      {"gate",
       {{"twist_count", r.gate.twist_count},
        {"prime", r.gate.prime},
        {"twist_reduced", r.gate.twist_reduced},
        {"min_crossings_per_region", r.gate.min_crossings_per_region},
        {"threshold", r.gate.threshold},
        {"threshold_overridden", r.gate.threshold_overridden},
        {"failures", r.gate.failures},
        {"passed", r.gate.passed()}}},
      {"regions", regions},
      {"applicable", r.applicable},
      {"cusp_volume", optional_number(r.cusp_volume)},
      {"augmented_lower", optional_number(r.augmented_lower)},
      {"delta_v", optional_number(r.delta_v)},
      {"lower", optional_number(r.lower)},
      {"lower_from_quoted", optional_number(r.lower_from_quoted)},
      {"half_twists", r.half_twists},
      {"upper", optional_number(r.upper)},
      {"constants",
       {{"quoted_density", k.quoted_density},
        {"quoted_augmented_coefficient", k.quoted_augmented_coefficient},
        {"quoted_per_cusp", k.quoted_per_cusp},
        {"quoted_coefficient", k.quoted_coefficient},
        {"density", k.density},
        {"augmented_coefficient", k.augmented_coefficient},
        {"per_cusp", k.per_cusp},
        {"per_cusp_error", k.per_cusp_error},
        {"coefficient", k.coefficient}}},
  };
  return j.dump(indent);
}

VolumeBoundReport report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 1, e.byte);
  }
  try {
    VolumeBoundReport r;
    r.name = j.at("name").get<std::string>();
    r.crossing_count = j.at("crossing_count").get<std::size_t>();
    r.component_count = j.at("component_count").get<std::size_t>();
    r.twist_count = j.at("twist_count").get<std::size_t>();
    const json& g = j.at("gate");
    r.gate.twist_count = g.at("twist_count").get<std::size_t>();
    r.gate.prime = g.at("prime").get<bool>();
    r.gate.twist_reduced = g.at("twist_reduced").get<bool>();
    r.gate.min_crossings_per_region = g.at("min_crossings_per_region").get<std::size_t>();
    r.gate.threshold = g.at("threshold").get<int>();
    r.gate.threshold_overridden = g.at("threshold_overridden").get<bool>();
    r.gate.failures = g.at("failures").get<std::vector<std::string>>();
    for (const json& b : j.at("regions"))
      r.regions.push_back({b.at("crossings").get<std::size_t>(), b.at("normalized_length_floor").get<double>(),
                           b.at("long_enough").get<bool>()});
    r.applicable = j.at("applicable").get<bool>();
    r.cusp_volume = read_optional(j, "cusp_volume");
    r.augmented_lower = read_optional(j, "augmented_lower");
    r.delta_v = read_optional(j, "delta_v");
    r.lower = read_optional(j, "lower");
    r.lower_from_quoted = read_optional(j, "lower_from_quoted");
    r.half_twists = j.at("half_twists").get<std::vector<int>>();
    r.upper = read_optional(j, "upper");
    const json& k = j.at("constants");
    r.constants.quoted_density = k.at("quoted_density").get<double>();
    r.constants.quoted_augmented_coefficient = k.at("quoted_augmented_coefficient").get<double>();
    r.constants.quoted_per_cusp = k.at("quoted_per_cusp").get<double>();
    r.constants.quoted_coefficient = k.at("quoted_coefficient").get<double>();
    r.constants.density = k.at("density").get<double>();
    r.constants.augmented_coefficient = k.at("augmented_coefficient").get<double>();
    r.constants.per_cusp = k.at("per_cusp").get<double>();
    r.constants.per_cusp_error = k.at("per_cusp_error").get<double>();
    r.constants.coefficient = k.at("coefficient").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::string report_table(const VolumeBoundReport& r) {
  std::ostringstream out;
  out << std::setprecision(6);
  auto row = [&out](const std::string& label) -> std::ostream& {
    return out << std::left << std::setw(28) << label;
  };
  auto value = [](const std::optional<double>& v) {
    if (!v) return std::string("n/a");
    std::ostringstream s;
    s << std::setprecision(6) << *v;
    return s.str();
  };

  row("diagram") << (r.name.empty() ? "(unnamed)" : r.name) << '\n';
  row("crossings") << r.crossing_count << '\n';
  row("components") << r.component_count << '\n';
  row("twist regions") << r.twist_count << '\n';
  std::string counts;
  for (const RegionBound& b : r.regions) counts += (counts.empty() ? "" : ",") + std::to_string(b.crossings);
  row("crossings per region") << '[' << counts << "]\n";
  row("threshold") << r.gate.threshold << (r.gate.threshold_overridden ? " (overridden)" : "") << '\n';
  row("prime") << (r.gate.prime ? "yes" : "no") << '\n';
  row("twist-reduced") << (r.gate.twist_reduced ? "yes" : "no") << '\n';
  for (const std::string& f : r.gate.failures) row("gate failure") << f << '\n';
  row("lower bound applies") << (r.applicable ? "yes" : "no") << '\n';
  row("cusp volume >=") << value(r.cusp_volume) << '\n';
  row("augmented link volume >=") << value(r.augmented_lower) << '\n';
  row("filling volume change <=") << value(r.delta_v) << '\n';
  row("volume >=") << value(r.lower) << '\n';
  row("volume >= (quoted coeff.)") << value(r.lower_from_quoted) << '\n';
  row("volume <=") << value(r.upper) << '\n';
  const BoundConstants& k = r.constants;
  row("packing density") << k.density << "  (quoted " << k.quoted_density << ")\n";
  row("per-cusp integral") << k.per_cusp << " +- " << std::setprecision(2) << k.per_cusp_error << std::setprecision(6)
                           << "  (quoted " << k.quoted_per_cusp << ")\n";
  row("coefficient") << k.coefficient << "  (quoted " << k.quoted_coefficient << ")\n";
  if (!r.half_twists.empty()) {
    std::string signs;
    for (int e : r.half_twists) signs += (signs.empty() ? "" : ",") + std::to_string(e);
    row("half twists") << '[' << signs << "]  (signs depend on orientation convention)\n";
  }
  return out.str();
}

}  // namespace twistvol
