#pragma once

// Planar diagrams of knots and links.
//
// A diagram is stored as PD code: each crossing is a 4-tuple of edge labels
// listed counterclockwise, starting at the incoming under-strand. Strands
// continue straight through a crossing, so position p is joined to p + 2.
// Closed components without crossings are stored as loops ("O[k]").
//
// Construction validates everything: every label occurs exactly twice, the
// under-strand orientations are consistent along each component, and the
// rotation system passes the Euler check V - E + F = 2 on each connected
// piece. A PlanarDiagram is immutable afterwards.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twistvol/errors.hpp"

namespace twistvol {

using EdgeLabel = int;
using CrossingId = std::size_t;
using EdgeId = std::size_t;
using FaceId = std::size_t;

struct PdCrossing {
  std::array<EdgeLabel, 4> labels{};

  friend bool operator==(const PdCrossing&, const PdCrossing&) = default;
};

// One slot of a crossing tuple.
struct Endpoint {
  CrossingId crossing = 0;
  int position = 0;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Edge {
  EdgeLabel label = 0;
  // Oriented along its component: the strand leaves `tail` and enters `head`.
  // Both are empty for a crossing-free loop.
  std::optional<Endpoint> tail;
  std::optional<Endpoint> head;
  int component = 0;

  bool is_loop() const noexcept { return !tail.has_value(); }
};

// side 0 is the face to the left of the edge traversed tail -> head,
// side 1 the face to its right.
struct FaceSide {
  EdgeId edge = 0;
  int side = 0;

  friend bool operator==(const FaceSide&, const FaceSide&) = default;
};

struct Face {
  std::vector<FaceSide> boundary;    // cyclic order
  std::vector<CrossingId> corners;   // crossing at the start of each boundary edge; empty for loop faces

  std::size_t degree() const noexcept { return boundary.size(); }
  bool is_bigon() const noexcept { return boundary.size() == 2; }
};

class PlanarDiagram {
 public:
  // Validates and builds. Throws ValidityError or EmbeddingError.
  static PlanarDiagram from_pd(std::string name, std::vector<PdCrossing> crossings,
                               std::vector<EdgeLabel> loops = {});

  const std::string& name() const noexcept { return name_; }
  std::span<const PdCrossing> crossings() const noexcept { return crossings_; }
  std::span<const EdgeLabel> loops() const noexcept { return loops_; }

  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  // Includes loop edges.
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t component_count() const noexcept { return component_count_; }
  std::size_t face_count() const noexcept { return faces_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Face>& faces() const noexcept { return faces_; }

  EdgeId edge_at(CrossingId c, int position) const { return slot_edge_.at(4 * c + static_cast<std::size_t>(position)); }
  // The other end of the edge occupying this slot.
  Endpoint mate(Endpoint slot) const;
  // Faces on side 0 and side 1 of an edge.
  std::array<FaceId, 2> faces_of_edge(EdgeId e) const { return edge_faces_.at(e); }
  std::optional<EdgeId> edge_by_label(EdgeLabel label) const;

  // +1 or -1 from the PD tuple and strand orientations; +1 when the
  // over-strand runs from position 3 to position 1. The sign of a crossing
  // depends on this orientation convention.
  int crossing_sign(CrossingId c) const { return signs_.at(c); }
  int under_component(CrossingId c) const { return edges_[edge_at(c, 0)].component; }
  int over_component(CrossingId c) const { return edges_[edge_at(c, 1)].component; }

  // Number of connected pieces of the underlying graph; each loop is its own piece.
  std::size_t connected_piece_count() const noexcept { return piece_count_; }
  bool is_connected() const noexcept { return piece_count_ <= 1; }

 private:
  PlanarDiagram() = default;

  std::string name_;
  std::vector<PdCrossing> crossings_;
  std::vector<EdgeLabel> loops_;
  std::vector<Edge> edges_;
  std::vector<EdgeId> slot_edge_;
  std::vector<Face> faces_;
  std::vector<std::array<FaceId, 2>> edge_faces_;
  std::vector<int> signs_;
  std::size_t component_count_ = 0;
  std::size_t piece_count_ = 0;
};

// Parses the plain-text PD format:
//   name: <string>          (optional header line)
//   X[a,b,c,d] ... O[k]     (whitespace separated, '#' starts a comment)
// Throws ParseError with line/column for malformed tokens.
PlanarDiagram parse_pd(std::string_view text);

// Canonical text form; parse_pd(to_pd_text(d)) reproduces d.
std::string to_pd_text(const PlanarDiagram& d);

// JSON mirror: {"name": str, "crossings": [[a,b,c,d], ...], "loops": [k, ...]}.
PlanarDiagram parse_pd_json(std::string_view text);
std::string to_pd_json(const PlanarDiagram& d);

// Reads a diagram file; ".json" files use the JSON mirror, everything else PD text.
// "-" reads standard input, which may hold either form.
PlanarDiagram load_diagram(const std::string& path);

inline const std::vector<Face>& face_structure(const PlanarDiagram& d) { return d.faces(); }

}  // namespace twistvol
