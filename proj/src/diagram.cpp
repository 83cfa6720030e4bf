#include "twistvol/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "disjoint_sets.hpp"

namespace twistvol {

namespace {

using detail::DisjointSets;

std::size_t slot_index(Endpoint e) { return 4 * e.crossing + static_cast<std::size_t>(e.position); }

std::string label_list(const std::vector<EdgeLabel>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(labels[i]);
  }
  return out;
}

}  // namespace

Endpoint PlanarDiagram::mate(Endpoint slot) const {
  const Edge& e = edges_[slot_edge_.at(slot_index(slot))];
  return *e.tail == slot ? *e.head : *e.tail;
}

std::optional<EdgeId> PlanarDiagram::edge_by_label(EdgeLabel label) const {
  auto it = std::find_if(edges_.begin(), edges_.end(), [label](const Edge& e) { return e.label == label; });
  if (it == edges_.end()) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

PlanarDiagram PlanarDiagram::from_pd(std::string name, std::vector<PdCrossing> crossings,
                                     std::vector<EdgeLabel> loops) {
  PlanarDiagram d;
  d.name_ = std::move(name);
  d.crossings_ = std::move(crossings);
  d.loops_ = std::move(loops);

  const std::size_t n = d.crossings_.size();

  std::map<EdgeLabel, std::vector<Endpoint>> occurrences;
  for (CrossingId c = 0; c < n; ++c) {
    for (int p = 0; p < 4; ++p) {
      const EdgeLabel label = d.crossings_[c].labels[static_cast<std::size_t>(p)];
      if (label <= 0)
        throw ValidityError("crossing " + std::to_string(c) + " has non-positive label " + std::to_string(label));
      occurrences[label].push_back({c, p});
    }
  }
  std::vector<EdgeLabel> bad;
  for (const auto& [label, ends] : occurrences)
    if (ends.size() != 2) bad.push_back(label);
  if (!bad.empty())
    throw ValidityError("edge labels must appear exactly twice; offending labels: " + label_list(bad));

  std::set<EdgeLabel> loop_set;
  for (EdgeLabel k : d.loops_) {
    if (k <= 0) throw ValidityError("loop label " + std::to_string(k) + " is not positive");
    if (occurrences.count(k)) throw ValidityError("loop label " + std::to_string(k) + " is also used by a crossing");
    if (!loop_set.insert(k).second) throw ValidityError("loop label " + std::to_string(k) + " repeated");
  }

  // Crossing edges sorted by label, then loops in input order.
  d.slot_edge_.assign(4 * n, 0);
  for (const auto& [label, ends] : occurrences) {
    Edge e;
    e.label = label;
    e.tail = ends[0];
    e.head = ends[1];
    const EdgeId id = d.edges_.size();
    d.slot_edge_[slot_index(ends[0])] = id;
    d.slot_edge_[slot_index(ends[1])] = id;
    d.edges_.push_back(e);
  }
  const std::size_t crossing_edge_count = d.edges_.size();

  // Orient components by following strands straight through crossings. The
  // under-strand must enter at position 0 and leave at position 2.
  std::vector<bool> seen(crossing_edge_count, false);
  int component = 0;
  for (EdgeId start = 0; start < crossing_edge_count; ++start) {
    if (seen[start]) continue;
    std::vector<std::pair<EdgeId, Endpoint>> walk;  // edge with the slot it runs into
    EdgeId e = start;
    Endpoint entry = *d.edges_[e].head;
    while (!seen[e]) {
      seen[e] = true;
      walk.emplace_back(e, entry);
      const Endpoint exit{entry.crossing, (entry.position + 2) % 4};
      e = d.slot_edge_[slot_index(exit)];
      const Edge& next = d.edges_[e];
      entry = (*next.tail == exit) ? *next.head : *next.tail;
    }
    bool forward = false;
    bool backward = false;
    for (const auto& [edge, slot] : walk) {
      if (slot.position == 0) forward = true;
      if (slot.position == 2) backward = true;
    }
    if (forward && backward)
      throw ValidityError("component through edge " + std::to_string(d.edges_[start].label) +
                          " passes under crossings in both directions; tuples must start at the incoming under-strand");
    for (const auto& [edge, slot] : walk) {
      Edge& ed = d.edges_[edge];
      const Endpoint other = (*ed.tail == slot) ? *ed.head : *ed.tail;
      ed.head = backward ? other : slot;
      ed.tail = backward ? slot : other;
      ed.component = component;
    }
    ++component;
  }
  for (EdgeLabel k : d.loops_) {
    Edge e;
    e.label = k;
    e.component = component++;
    d.edges_.push_back(e);
  }
  d.component_count_ = static_cast<std::size_t>(component);

  d.signs_.resize(n);
  for (CrossingId c = 0; c < n; ++c) {
    const Edge& over = d.edges_[d.slot_edge_[4 * c + 1]];
    d.signs_[c] = (*over.head == Endpoint{c, 1}) ? -1 : +1;
  }

  // Faces: follow an edge to its far end, then turn to the clockwise-next
  // slot. This traces the face on the left of each outgoing half-edge.
  d.edge_faces_.assign(d.edges_.size(), {0, 0});
  std::vector<bool> dart_used(4 * n, false);
  for (std::size_t start = 0; start < 4 * n; ++start) {
    if (dart_used[start]) continue;
    Face face;
    const FaceId id = d.faces_.size();
    std::size_t dart = start;
    while (!dart_used[dart]) {
      dart_used[dart] = true;
      const Endpoint slot{dart / 4, static_cast<int>(dart % 4)};
      const EdgeId e = d.slot_edge_[dart];
      const int side = (*d.edges_[e].tail == slot) ? 0 : 1;
      face.boundary.push_back({e, side});
      face.corners.push_back(slot.crossing);
      d.edge_faces_[e][static_cast<std::size_t>(side)] = id;
      const Endpoint far = d.mate(slot);
      dart = 4 * far.crossing + static_cast<std::size_t>((far.position + 3) % 4);
    }
    d.faces_.push_back(std::move(face));
  }
  for (EdgeId e = crossing_edge_count; e < d.edges_.size(); ++e) {
    for (int side = 0; side < 2; ++side) {
      d.edge_faces_[e][static_cast<std::size_t>(side)] = d.faces_.size();
      d.faces_.push_back(Face{{FaceSide{e, side}}, {}});
    }
  }

  // Euler check on each connected piece.
  DisjointSets pieces(n);
  for (EdgeId e = 0; e < crossing_edge_count; ++e) pieces.unite(d.edges_[e].tail->crossing, d.edges_[e].head->crossing);
  std::map<std::size_t, long> euler;
  for (CrossingId c = 0; c < n; ++c) euler[pieces.find(c)] += 1;
  for (EdgeId e = 0; e < crossing_edge_count; ++e) euler[pieces.find(d.edges_[e].tail->crossing)] -= 1;
  for (const Face& f : d.faces_)
    if (!f.corners.empty()) euler[pieces.find(f.corners.front())] += 1;
  for (const auto& [root, chi] : euler) {
    if (chi != 2)
      throw EmbeddingError("rotation system is not planar: V - E + F = " + std::to_string(chi) +
                           " on the piece containing crossing " + std::to_string(root));
  }
  d.piece_count_ = euler.size() + d.loops_.size();
  return d;
}

}  // namespace twistvol
