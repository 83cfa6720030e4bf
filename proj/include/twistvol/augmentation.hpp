#pragma once

// The augmented link L of a diagram: one crossing circle around each twist
// region, with full twists removed so that every region keeps 0 or 1
// crossings. Filling crossing circle i along slope 1/n_i restores the n_i
// full twists. S^3 - L splits into two identical right-angled ideal
// polyhedra whose cusp cross sections are tiled by rectangles; counting
// those rectangles bounds the cusp volume from below.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twistvol/diagram.hpp"
#include "twistvol/twist_analysis.hpp"

namespace twistvol {

// Volume of the regular ideal tetrahedron, 3 * Lobachevsky(pi/3).
inline constexpr double kRegularIdealTetrahedronVolume = 1.0149416064096536;

struct CrossingCircle {
  std::size_t index = 0;
  std::size_t crossing_count = 0;  // c_i in the original diagram
  int half_twist = 0;              // epsilon in {-1, 0, +1}; sign is orientation-convention relative
  int full_twists = 0;             // n_i, with c_i = 2 n_i + |epsilon|
  std::array<int, 2> strand_components{};  // plane components of the two encircled strands

  friend bool operator==(const CrossingCircle&, const CrossingCircle&) = default;
};

struct PlaneComponent {
  int component = 0;
  std::size_t circle_passages = 0;  // C(L_j), with multiplicity

  friend bool operator==(const PlaneComponent&, const PlaneComponent&) = default;
};

struct AugmentedLink {
  // Projection-plane part of L.
  PlanarDiagram base;
  std::vector<CrossingCircle> crossing_circles;
  std::vector<PlaneComponent> plane_components;
  // Faces of the original diagram that are not bigons inside a twist region.
  std::size_t projection_regions = 0;
  // The original diagram is prime and twist-reduced.
  bool diagram_reduced = false;

  std::size_t twist_count() const noexcept { return crossing_circles.size(); }
};

// Throws InapplicableError when there are fewer than two twist regions.
AugmentedLink augment(const PlanarDiagram& d, const std::vector<TwistRegion>& regions);

// A curve on a cusp torus in units of rectangle sides.
struct Steps {
  int white = 0;
  int shaded = 0;

  friend bool operator==(const Steps&, const Steps&) = default;
};

struct FillingSlope {
  std::size_t circle = 0;
  int numerator = 1;    // the slope is numerator / denominator = 1 / n_i
  int denominator = 0;
  Steps sigma;          // the filling curve mu + n_i lambda
};

// Throws DomainError if a circle records zero crossings.
std::vector<FillingSlope> filling_slopes(const AugmentedLink& a);

struct PolyhedralDecomposition {
  static constexpr std::size_t polyhedron_count = 2;  // identical copies

  // Counts for one polyhedron.
  std::size_t ideal_vertices = 0;
  std::size_t edges = 0;
  std::size_t white_faces = 0;
  std::size_t shaded_faces = 0;
  // Per crossing circle: shaded triangles glue to the opposite polyhedron's
  // opposite face (a single crossing remains in the region).
  std::vector<bool> half_twist_gluing;

  long euler_characteristic() const noexcept {
    return static_cast<long>(ideal_vertices) - static_cast<long>(edges) +
           static_cast<long>(white_faces + shaded_faces);
  }
};

PolyhedralDecomposition decomposition(const AugmentedLink& a);

struct CuspTiling {
  enum class Kind { CrossingCircle, PlaneComponent };

  Kind kind = Kind::CrossingCircle;
  std::size_t id = 0;  // circle index or plane component number
  std::size_t rectangle_count = 0;
  // Only recorded for crossing-circle cusps.
  std::optional<Steps> meridian;
  std::optional<Steps> longitude;
};

std::vector<CuspTiling> cusp_tilings(const AugmentedLink& a);

// Each rectangle has shaded side 1 and white side >= 1 after expanding the
// horospheres, and the region over a unit square has volume 1/2.
// Throws InapplicableError unless tw >= 2 and the diagram is prime and twist-reduced.
double cusp_volume_lower(const AugmentedLink& a);

// sqrt(3) / (2 v0): the largest fraction of a hyperbolic 3-manifold's volume
// a horoball packing can fill.
double boroczky_density();

// Cusp volume divided by the packing density.
double volume_lower_boroczky(const AugmentedLink& a);

}  // namespace twistvol
