#pragma once

// Programmatic construction of diagrams: Conway-style tangles and their
// closures, connected sums, curls, and reflections.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "twistvol/diagram.hpp"

namespace twistvol {

// An unoriented tangle diagram with boundary points NW, NE, SE, SW.
class Tangle {
 public:
  static Tangle zero();      // arcs NW-NE and SW-SE
  static Tangle infinity();  // arcs NW-SW and NE-SE

  // Adds |count| crossings to the right of the tangle, twisting NE around SE.
  // The sign of count selects the over-strand: positive puts the SW-NE
  // diagonal of each new crossing on top.
  Tangle& twist_horizontal(int count);
  // Adds |count| crossings below the tangle, twisting SW around SE.
  Tangle& twist_vertical(int count);

  // Places rhs to the right of lhs: lhs.NE-rhs.NW and lhs.SE-rhs.SW.
  friend Tangle operator+(const Tangle& lhs, const Tangle& rhs);

  // Joins NW-NE and SW-SE.
  PlanarDiagram numerator(std::string name = {}) const;
  // Joins NW-SW and NE-SE.
  PlanarDiagram denominator(std::string name = {}) const;

  std::size_t crossing_count() const noexcept { return crossings_.size(); }

 private:
  enum Corner { kNW = 0, kNE = 1, kSE = 2, kSW = 3 };

  struct Crossing {
    std::array<int, 4> slots;  // counterclockwise: SW, SE, NE, NW
    bool under_sw_ne;          // true when slots 0 and 2 carry the under-strand
  };

  Tangle() = default;
  int fresh() { return next_label_++; }
  void join(int keep, int drop);
  PlanarDiagram close(std::string name, Corner a1, Corner b1, Corner a2, Corner b2) const;

  std::vector<Crossing> crossings_;
  std::array<int, 4> ends_{};
  std::vector<int> closed_loops_;
  int next_label_ = 1;
};

// Rational (two-bridge) diagram from a Conway continued fraction a1 a2 ... ak.
// Terms alternate between horizontal and vertical twisting, ending with a
// horizontal twist, and the result is closed with the numerator closure.
// Positive terms give an alternating diagram.
PlanarDiagram rational_diagram(std::span<const int> terms, std::string name = {});

// Pretzel diagram P(c1, ..., ck): vertical twist columns side by side,
// numerator closure.
PlanarDiagram pretzel_diagram(std::span<const int> columns, std::string name = {});

struct ConnectedSum {
  PlanarDiagram diagram;
  // The two edges of the band joining the summands (labels in `diagram`).
  std::array<EdgeLabel, 2> band;
};

// Cuts edge `edge_a` of a and `edge_b` of b and reconnects them. Labels of b
// are shifted above those of a.
ConnectedSum connected_sum(const PlanarDiagram& a, EdgeLabel edge_a, const PlanarDiagram& b, EdgeLabel edge_b,
                           std::string name = {});

// Inserts a Reidemeister-I curl on the given edge.
PlanarDiagram add_kink(const PlanarDiagram& d, EdgeLabel edge, std::string name = {});

// Mirror image of the diagram in a line of the projection plane.
PlanarDiagram reflected(const PlanarDiagram& d);

}  // namespace twistvol
