#pragma once

// Twist regions and the diagram hypotheses of the volume bound: the diagram
// must be prime and twist-reduced, with at least two twist regions and at
// least C crossings in each.
//
// Simple closed curves meeting the diagram transversely in k edges are
// identified with k-cycles of the dual graph. A set of edges forms such a
// cycle exactly when removing it splits the diagram graph into two connected
// pieces (a bond), which is how curves are detected here. Curves that meet the
// same edge twice are not considered.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "twistvol/diagram.hpp"

namespace twistvol {

struct TwistRegion {
  // Crossings in chain order; consecutive crossings share a bigon.
  std::vector<CrossingId> crossings;
  // Bigon faces joining crossings of the region.
  std::vector<FaceId> bigons;
  // Edges where the region meets the rest of the diagram (four for a chain).
  std::vector<EdgeId> boundary_edges;
  // The chain closes up on itself, as in a (2, n) torus diagram.
  bool cyclic = false;

  std::size_t crossing_count() const noexcept { return crossings.size(); }
};

// Every crossing lies in exactly one region; regions are sorted by their
// smallest crossing id.
std::vector<TwistRegion> twist_regions(const PlanarDiagram& d);

struct PrimeCheck {
  bool prime = true;
  // Two edges cut by a curve with crossings on both sides.
  std::optional<std::array<EdgeId, 2>> witness;
};

// Throws InapplicableError for split diagrams or diagrams without crossings.
PrimeCheck is_prime(const PlanarDiagram& d);

struct TwistReducedWitness {
  CrossingId x = 0;
  CrossingId y = 0;
  std::array<EdgeId, 4> curve{};  // edges crossed by the curve
};

struct TwistReducedCheck {
  bool twist_reduced = true;
  std::optional<TwistReducedWitness> witness;
};

// For every curve meeting four edges, two adjacent to a crossing x and two to
// a crossing y, one side together with x and y must be a bigon chain of a
// single twist region. Same preconditions as is_prime.
TwistReducedCheck is_twist_reduced(const PlanarDiagram& d);

struct DiagramGate {
  std::size_t twist_count = 0;
  bool is_prime = false;
  bool is_twist_reduced = false;
  std::size_t min_crossings_per_region = 0;
  int threshold = 0;
  std::vector<std::string> failures;
  std::optional<PrimeCheck> prime_check;
  std::optional<TwistReducedCheck> twist_reduced_check;

  bool passed() const noexcept { return failures.empty(); }
};

// Evaluates all four hypotheses; failures are reported, never thrown.
DiagramGate gate(const PlanarDiagram& d, int threshold);

}  // namespace twistvol
