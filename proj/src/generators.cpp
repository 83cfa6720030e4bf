#include "twistvol/generators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace twistvol {

namespace {

struct UnorientedCrossing {
  std::array<int, 4> slots;
  bool under_on_even;  // slots 0 and 2 carry the under-strand
};

// Orients every component, rotates each tuple to start at its incoming
// under-strand, and renumbers edges 1, 2, ... along the components.
PlanarDiagram orient(std::string name, const std::vector<UnorientedCrossing>& crossings, std::size_t loop_count) {
  struct Slot {
    std::size_t crossing;
    int position;
  };
  std::map<int, std::vector<Slot>> where;
  for (std::size_t c = 0; c < crossings.size(); ++c)
    for (int p = 0; p < 4; ++p) where[crossings[c].slots[static_cast<std::size_t>(p)]].push_back({c, p});
  for (const auto& [label, slots] : where)
    if (slots.size() != 2) throw std::logic_error("tangle edge " + std::to_string(label) + " is not closed");

  std::map<int, int> renumber;
  std::vector<int> entry_slot(4 * crossings.size(), 0);  // 1 where a strand enters the crossing
  int next = 1;
  for (const auto& [start_label, start_slots] : where) {
    if (renumber.count(start_label)) continue;
    int label = start_label;
    Slot entry = start_slots[1];
    while (!renumber.count(label)) {
      renumber[label] = next++;
      entry_slot[4 * entry.crossing + static_cast<std::size_t>(entry.position)] = 1;
      const Slot exit{entry.crossing, (entry.position + 2) % 4};
      label = crossings[exit.crossing].slots[static_cast<std::size_t>(exit.position)];
      const auto& ends = where[label];
      const bool first_is_exit = ends[0].crossing == exit.crossing && ends[0].position == exit.position;
      entry = first_is_exit ? ends[1] : ends[0];
    }
  }

  std::vector<PdCrossing> pd;
  pd.reserve(crossings.size());
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    const int a = crossings[c].under_on_even ? 0 : 1;
    const int start = entry_slot[4 * c + static_cast<std::size_t>(a)] ? a : a + 2;
    PdCrossing x;
    for (int i = 0; i < 4; ++i)
      x.labels[static_cast<std::size_t>(i)] = renumber[crossings[c].slots[static_cast<std::size_t>((start + i) % 4)]];
    pd.push_back(x);
  }
  std::vector<EdgeLabel> loops;
  for (std::size_t i = 0; i < loop_count; ++i) loops.push_back(next++);
  return PlanarDiagram::from_pd(std::move(name), std::move(pd), std::move(loops));
}

EdgeLabel max_label(const PlanarDiagram& d) {
  EdgeLabel m = 0;
  for (const Edge& e : d.edges()) m = std::max(m, e.label);
  return m;
}

void set_slot(std::vector<PdCrossing>& pd, Endpoint slot, EdgeLabel label) {
  pd.at(slot.crossing).labels[static_cast<std::size_t>(slot.position)] = label;
}

const Edge& crossing_edge(const PlanarDiagram& d, EdgeLabel label) {
  auto id = d.edge_by_label(label);
  if (!id) throw std::invalid_argument("no edge labelled " + std::to_string(label));
  const Edge& e = d.edge(*id);
  if (e.is_loop()) throw std::invalid_argument("edge " + std::to_string(label) + " has no crossings");
  return e;
}

}  // namespace

Tangle Tangle::zero() {
  Tangle t;
  const int top = t.fresh();
  const int bottom = t.fresh();
  t.ends_ = {top, top, bottom, bottom};
  return t;
}

Tangle Tangle::infinity() {
  Tangle t;
  const int left = t.fresh();
  const int right = t.fresh();
  t.ends_ = {left, right, right, left};
  return t;
}

Tangle& Tangle::twist_horizontal(int count) {
  for (int i = 0; i < std::abs(count); ++i) {
    const int se = fresh();
    const int ne = fresh();
    crossings_.push_back({{ends_[kSE], se, ne, ends_[kNE]}, count < 0});
    ends_[kSE] = se;
    ends_[kNE] = ne;
  }
  return *this;
}

Tangle& Tangle::twist_vertical(int count) {
  for (int i = 0; i < std::abs(count); ++i) {
    const int sw = fresh();
    const int se = fresh();
    crossings_.push_back({{sw, se, ends_[kSE], ends_[kSW]}, count < 0});
    ends_[kSW] = sw;
    ends_[kSE] = se;
  }
  return *this;
}

void Tangle::join(int keep, int drop) {
  if (keep == drop) {
    closed_loops_.push_back(keep);
    return;
  }
  for (Crossing& c : crossings_)
    for (int& s : c.slots)
      if (s == drop) s = keep;
  for (int& e : ends_)
    if (e == drop) e = keep;
}

Tangle operator+(const Tangle& lhs, const Tangle& rhs) {
  Tangle out = lhs;
  const int shift = lhs.next_label_ - 1;
  for (Tangle::Crossing c : rhs.crossings_) {
    for (int& s : c.slots) s += shift;
    out.crossings_.push_back(c);
  }
  for (int loop : rhs.closed_loops_) out.closed_loops_.push_back(loop + shift);
  out.next_label_ = lhs.next_label_ + rhs.next_label_ - 1;
  out.ends_ = {lhs.ends_[Tangle::kNW], rhs.ends_[Tangle::kNE] + shift, rhs.ends_[Tangle::kSE] + shift,
               lhs.ends_[Tangle::kSW]};
  const int right_nw = rhs.ends_[Tangle::kNW] + shift;
  const int right_sw = rhs.ends_[Tangle::kSW] + shift;
  // Join NE first, then look SE up again in case it was relabelled.
  const int left_se = lhs.ends_[Tangle::kSE];
  out.join(lhs.ends_[Tangle::kNE], right_nw);
  int se = left_se;
  int sw = right_sw;
  if (se == right_nw) se = lhs.ends_[Tangle::kNE];
  if (sw == right_nw) sw = lhs.ends_[Tangle::kNE];
  out.join(se, sw);
  return out;
}

PlanarDiagram Tangle::close(std::string name, Corner a1, Corner b1, Corner a2, Corner b2) const {
  Tangle t = *this;
  t.join(t.ends_[a1], t.ends_[b1]);
  t.join(t.ends_[a2], t.ends_[b2]);
  std::vector<UnorientedCrossing> raw;
  raw.reserve(t.crossings_.size());
  for (const Crossing& c : t.crossings_) raw.push_back({c.slots, c.under_sw_ne});
  return orient(std::move(name), raw, t.closed_loops_.size());
}

PlanarDiagram Tangle::numerator(std::string name) const { return close(std::move(name), kNW, kNE, kSW, kSE); }

PlanarDiagram Tangle::denominator(std::string name) const { return close(std::move(name), kNW, kSW, kNE, kSE); }

PlanarDiagram rational_diagram(std::span<const int> terms, std::string name) {
  if (terms.empty()) throw std::invalid_argument("rational diagram needs at least one term");
  if (std::find(terms.begin(), terms.end(), 0) != terms.end())
    throw std::invalid_argument("rational diagram terms must be nonzero");
  const std::size_t k = terms.size();
  const bool first_horizontal = (k - 1) % 2 == 0;
  Tangle t = first_horizontal ? Tangle::zero() : Tangle::infinity();
  for (std::size_t i = 0; i < k; ++i) {
    if ((k - 1 - i) % 2 == 0)
      t.twist_horizontal(terms[i]);
    else
      t.twist_vertical(terms[i]);
  }
  return t.numerator(std::move(name));
}

PlanarDiagram pretzel_diagram(std::span<const int> columns, std::string name) {
  if (columns.empty()) throw std::invalid_argument("pretzel diagram needs at least one column");
  Tangle t = Tangle::infinity().twist_vertical(columns[0]);
  for (std::size_t i = 1; i < columns.size(); ++i) t = t + Tangle::infinity().twist_vertical(columns[i]);
  return t.numerator(std::move(name));
}

ConnectedSum connected_sum(const PlanarDiagram& a, EdgeLabel edge_a, const PlanarDiagram& b, EdgeLabel edge_b,
                           std::string name) {
  const Edge& ea = crossing_edge(a, edge_a);
  const Edge& eb = crossing_edge(b, edge_b);
  const EdgeLabel shift = max_label(a);
  const CrossingId offset = a.crossing_count();

  std::vector<PdCrossing> pd(a.crossings().begin(), a.crossings().end());
  for (PdCrossing c : b.crossings()) {
    for (EdgeLabel& l : c.labels) l += shift;
    pd.push_back(c);
  }
  const EdgeLabel bridge = shift + max_label(b) + 1;
  const Endpoint b_tail{eb.tail->crossing + offset, eb.tail->position};
  const Endpoint b_head{eb.head->crossing + offset, eb.head->position};
  // a's tail now runs into b's head, and b's tail into a's head.
  set_slot(pd, b_head, edge_a);
  set_slot(pd, b_tail, bridge);
  set_slot(pd, *ea.head, bridge);

  std::vector<EdgeLabel> loops(a.loops().begin(), a.loops().end());
  for (EdgeLabel k : b.loops()) loops.push_back(k + shift);
  return {PlanarDiagram::from_pd(std::move(name), std::move(pd), std::move(loops)), {edge_a, bridge}};
}

PlanarDiagram add_kink(const PlanarDiagram& d, EdgeLabel edge, std::string name) {
  const Edge& e = crossing_edge(d, edge);
  const EdgeLabel out = max_label(d) + 1;
  const EdgeLabel curl = out + 1;
  std::vector<PdCrossing> pd(d.crossings().begin(), d.crossings().end());
  set_slot(pd, *e.head, out);
  pd.push_back(PdCrossing{{edge, out, curl, curl}});
  std::vector<EdgeLabel> loops(d.loops().begin(), d.loops().end());
  return PlanarDiagram::from_pd(name.empty() ? d.name() : std::move(name), std::move(pd), std::move(loops));
}

PlanarDiagram reflected(const PlanarDiagram& d) {
  std::vector<PdCrossing> pd;
  for (const PdCrossing& c : d.crossings()) pd.push_back(PdCrossing{{c.labels[0], c.labels[3], c.labels[2], c.labels[1]}});
  return PlanarDiagram::from_pd(d.name(), std::move(pd), std::vector<EdgeLabel>(d.loops().begin(), d.loops().end()));
}

}  // namespace twistvol
