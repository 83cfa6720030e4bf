#include "twistvol/twist_analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "disjoint_sets.hpp"

namespace twistvol {

namespace {

bool is_true_bigon(const Face& f) { return f.is_bigon() && f.corners[0] != f.corners[1]; }

std::vector<EdgeId> incident_edges(const PlanarDiagram& d, CrossingId c) {
  std::vector<EdgeId> out;
  for (int p = 0; p < 4; ++p) {
    const EdgeId e = d.edge_at(c, p);
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  return out;
}

bool touches(const PlanarDiagram& d, EdgeId e, CrossingId c) {
  const Edge& edge = d.edge(e);
  return edge.tail->crossing == c || edge.head->crossing == c;
}

// Connected pieces of the diagram graph after deleting `removed`.
struct Split {
  std::vector<int> piece;  // per crossing
  int count = 0;
};

Split split_without(const PlanarDiagram& d, const std::vector<EdgeId>& removed) {
  const std::size_t n = d.crossing_count();
  Split s;
  s.piece.assign(n, -1);
  for (CrossingId start = 0; start < n; ++start) {
    if (s.piece[start] >= 0) continue;
    std::deque<CrossingId> queue{start};
    s.piece[start] = s.count;
    while (!queue.empty()) {
      const CrossingId c = queue.front();
      queue.pop_front();
      for (int p = 0; p < 4; ++p) {
        const EdgeId e = d.edge_at(c, p);
        if (std::find(removed.begin(), removed.end(), e) != removed.end()) continue;
        const CrossingId next = d.mate({c, p}).crossing;
        if (s.piece[next] < 0) {
          s.piece[next] = s.count;
          queue.push_back(next);
        }
      }
    }
    ++s.count;
  }
  return s;
}

void require_connected_with_crossings(const PlanarDiagram& d) {
  if (d.crossing_count() == 0) throw InapplicableError("diagram has no crossings");
  if (!d.is_connected())
    throw InapplicableError("diagram is split into " + std::to_string(d.connected_piece_count()) +
                            " pieces; analyze them separately");
}

// Crossings joined through bigon faces, as an adjacency list.
std::vector<std::vector<CrossingId>> bigon_neighbors(const PlanarDiagram& d) {
  std::vector<std::vector<CrossingId>> adj(d.crossing_count());
  for (const Face& f : d.faces()) {
    if (!is_true_bigon(f)) continue;
    adj[f.corners[0]].push_back(f.corners[1]);
    adj[f.corners[1]].push_back(f.corners[0]);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

}  // namespace

std::vector<TwistRegion> twist_regions(const PlanarDiagram& d) {
  const std::size_t n = d.crossing_count();
  detail::DisjointSets sets(n);
  for (const Face& f : d.faces())
    if (is_true_bigon(f)) sets.unite(f.corners[0], f.corners[1]);

  std::map<std::size_t, std::vector<CrossingId>> groups;
  for (CrossingId c = 0; c < n; ++c) groups[sets.find(c)].push_back(c);

  const auto adj = bigon_neighbors(d);
  std::vector<TwistRegion> regions;
  for (const auto& [root, members] : groups) {
    TwistRegion r;
    // Walk the chain from an end, or from the smallest crossing if it is a cycle.
    CrossingId start = members.front();
    for (CrossingId c : members) {
      if (adj[c].size() <= 1) {
        start = c;
        break;
      }
    }
    std::set<CrossingId> visited;
    std::deque<CrossingId> queue{start};
    visited.insert(start);
    while (!queue.empty()) {
      const CrossingId c = queue.front();
      queue.pop_front();
      r.crossings.push_back(c);
      for (CrossingId next : adj[c]) {
        if (visited.insert(next).second) queue.push_back(next);
      }
    }

    std::set<EdgeId> bigon_edges;
    for (FaceId f = 0; f < d.face_count(); ++f) {
      const Face& face = d.faces()[f];
      if (is_true_bigon(face) && sets.find(face.corners[0]) == root) {
        r.bigons.push_back(f);
        for (const FaceSide& s : face.boundary) bigon_edges.insert(s.edge);
      }
    }
    std::set<EdgeId> boundary;
    for (CrossingId c : members)
      for (EdgeId e : incident_edges(d, c))
        if (!bigon_edges.count(e)) boundary.insert(e);
    r.boundary_edges.assign(boundary.begin(), boundary.end());
    r.cyclic = r.crossings.size() >= 2 && r.bigons.size() >= r.crossings.size();
    regions.push_back(std::move(r));
  }
  std::sort(regions.begin(), regions.end(), [](const TwistRegion& a, const TwistRegion& b) {
    return *std::min_element(a.crossings.begin(), a.crossings.end()) <
           *std::min_element(b.crossings.begin(), b.crossings.end());
  });
  return regions;
}

PrimeCheck is_prime(const PlanarDiagram& d) {
  require_connected_with_crossings(d);
  // A curve meeting two edges passes through the two faces both edges border.
  std::map<std::pair<FaceId, FaceId>, std::vector<EdgeId>> by_faces;
  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    auto [f0, f1] = d.faces_of_edge(e);
    if (f0 == f1) continue;
    by_faces[{std::min(f0, f1), std::max(f0, f1)}].push_back(e);
  }
  PrimeCheck result;
  for (const auto& [faces, edges] : by_faces) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        const Split s = split_without(d, {edges[i], edges[j]});
        if (s.count < 2) continue;
        const std::array<EdgeId, 2> w{edges[i], edges[j]};
        if (!result.witness || w < *result.witness) result.witness = w;
        result.prime = false;
      }
    }
  }
  return result;
}

TwistReducedCheck is_twist_reduced(const PlanarDiagram& d) {
  require_connected_with_crossings(d);
  const std::size_t n = d.crossing_count();
  const auto regions = twist_regions(d);
  std::vector<std::size_t> region_of(n, 0);
  for (std::size_t r = 0; r < regions.size(); ++r)
    for (CrossingId c : regions[r].crossings) region_of[c] = r;
  const auto adj = bigon_neighbors(d);

  // Two edges can be charged to x and the other two to y.
  auto splits_two_two = [&](const std::array<EdgeId, 4>& curve, CrossingId x, CrossingId y) {
    int only_x = 0;
    int only_y = 0;
    for (EdgeId e : curve) {
      const bool tx = touches(d, e, x);
      const bool ty = touches(d, e, y);
      if (!tx && !ty) return false;
      if (tx && !ty) ++only_x;
      if (ty && !tx) ++only_y;
    }
    return only_x <= 2 && only_y <= 2;
  };

  // The crossings form a bigon-connected piece of one twist region.
  auto is_chain = [&](const std::set<CrossingId>& q) {
    const std::size_t r = region_of[*q.begin()];
    for (CrossingId c : q)
      if (region_of[c] != r) return false;
    std::set<CrossingId> reached{*q.begin()};
    std::deque<CrossingId> queue{*q.begin()};
    while (!queue.empty()) {
      const CrossingId c = queue.front();
      queue.pop_front();
      for (CrossingId next : adj[c])
        if (q.count(next) && reached.insert(next).second) queue.push_back(next);
    }
    return reached.size() == q.size();
  };

  std::vector<std::vector<EdgeId>> incident(n);
  for (CrossingId c = 0; c < n; ++c) incident[c] = incident_edges(d, c);
  std::set<std::array<EdgeId, 4>> curves;
  std::vector<EdgeId> pool;
  for (CrossingId x = 0; x < n; ++x) {
    for (CrossingId y = x + 1; y < n; ++y) {
      pool = incident[x];
      for (EdgeId e : incident[y])
        if (std::find(pool.begin(), pool.end(), e) == pool.end()) pool.push_back(e);
      const std::size_t m = pool.size();
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
          for (std::size_t c = b + 1; c < m; ++c)
            for (std::size_t e = c + 1; e < m; ++e) {
              std::array<EdgeId, 4> curve{pool[a], pool[b], pool[c], pool[e]};
              if (!splits_two_two(curve, x, y)) continue;
              std::sort(curve.begin(), curve.end());
              if (curves.count(curve)) continue;
              // Every face must be entered and left the same number of times.
              std::array<FaceId, 8> visits{};
              for (std::size_t i = 0; i < 4; ++i) {
                const auto [f0, f1] = d.faces_of_edge(curve[i]);
                visits[2 * i] = f0;
                visits[2 * i + 1] = f1;
              }
              std::sort(visits.begin(), visits.end());
              bool even = true;
              for (std::size_t i = 0, j = 0; i < 8; i = j) {
                while (j < 8 && visits[j] == visits[i]) ++j;
                if ((j - i) % 2 != 0) even = false;
              }
              if (!even) continue;
              curves.insert(curve);
            }
    }
  }

  TwistReducedCheck result;
  for (const auto& curve : curves) {
    const std::vector<EdgeId> removed(curve.begin(), curve.end());
    const Split s = split_without(d, removed);
    if (s.count != 2) continue;
    bool bond = true;
    for (EdgeId e : curve) {
      const Edge& edge = d.edge(e);
      if (s.piece[edge.tail->crossing] == s.piece[edge.head->crossing]) bond = false;
    }
    if (!bond) continue;

    std::set<CrossingId> touched;
    for (EdgeId e : curve) {
      touched.insert(d.edge(e).tail->crossing);
      touched.insert(d.edge(e).head->crossing);
    }
    std::array<std::size_t, 2> side_size{};
    for (CrossingId c = 0; c < n; ++c) ++side_size[static_cast<std::size_t>(s.piece[c])];
    std::optional<std::pair<CrossingId, CrossingId>> first_pair;
    bool accepted = false;
    for (auto ix = touched.begin(); ix != touched.end() && !accepted; ++ix) {
      for (auto iy = std::next(ix); iy != touched.end() && !accepted; ++iy) {
        if (!splits_two_two(curve, *ix, *iy)) continue;
        if (!first_pair) first_pair = {*ix, *iy};
        const std::size_t room = regions[region_of[*ix]].crossing_count();
        for (int side = 0; side < 2 && !accepted; ++side) {
          const std::size_t extra = (s.piece[*ix] != side) + (s.piece[*iy] != side);
          if (side_size[static_cast<std::size_t>(side)] + extra > room) continue;
          std::set<CrossingId> q{*ix, *iy};
          for (CrossingId c = 0; c < n; ++c)
            if (s.piece[c] == side) q.insert(c);
          accepted = is_chain(q);
        }
      }
    }
    if (first_pair && !accepted) {
      result.twist_reduced = false;
      result.witness = TwistReducedWitness{first_pair->first, first_pair->second, curve};
      return result;
    }
  }
  return result;
}

DiagramGate gate(const PlanarDiagram& d, int threshold) {
  DiagramGate g;
  g.threshold = threshold;
  const auto regions = twist_regions(d);
  g.twist_count = regions.size();
  if (!regions.empty()) {
    g.min_crossings_per_region = regions.front().crossing_count();
    for (const auto& r : regions) g.min_crossings_per_region = std::min(g.min_crossings_per_region, r.crossing_count());
  }

  if (d.crossing_count() == 0) {
    g.failures.push_back("diagram has no crossings");
  } else if (!d.is_connected()) {
    g.failures.push_back("diagram is split into " + std::to_string(d.connected_piece_count()) + " pieces");
  } else {
    g.prime_check = is_prime(d);
    g.is_prime = g.prime_check->prime;
    if (!g.is_prime) {
      const auto& w = *g.prime_check->witness;
      g.failures.push_back("not prime: a curve through edges " + std::to_string(d.edge(w[0]).label) + " and " +
                           std::to_string(d.edge(w[1]).label) + " has crossings on both sides");
    }
    g.twist_reduced_check = is_twist_reduced(d);
    g.is_twist_reduced = g.twist_reduced_check->twist_reduced;
    if (!g.is_twist_reduced) {
      const auto& w = *g.twist_reduced_check->witness;
      std::string edges;
      for (EdgeId e : w.curve) edges += (edges.empty() ? "" : ",") + std::to_string(d.edge(e).label);
      g.failures.push_back("not twist-reduced: the curve through edges " + edges + " near crossings " +
                           std::to_string(w.x) + " and " + std::to_string(w.y) + " does not bound a twist");
    }
  }
  if (g.twist_count < 2) g.failures.push_back("tw = " + std::to_string(g.twist_count) + " < 2");
  if (g.min_crossings_per_region < static_cast<std::size_t>(std::max(threshold, 0)) || g.twist_count == 0)
    g.failures.push_back("min crossings " + std::to_string(g.min_crossings_per_region) + " < " +
                         std::to_string(threshold));
  return g;
}

}  // namespace twistvol
