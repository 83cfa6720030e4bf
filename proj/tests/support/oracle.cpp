#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <utility>

namespace oracle {

namespace {

struct Graph {
  int crossings = 0;
  std::vector<int> labels;                          // distinct edge labels
  std::map<int, std::vector<std::pair<int, int>>> ends;  // label -> (crossing, slot) x2
  std::map<int, std::pair<int, int>> sides;         // label -> the two faces it separates
  std::vector<std::vector<int>> face_corners;       // crossings at each corner of each face
  std::vector<std::vector<int>> face_edges;         // edge labels around each face
};

Graph build(const Pd& pd) {
  Graph g;
  g.crossings = static_cast<int>(pd.size());
  for (int c = 0; c < g.crossings; ++c)
    for (int p = 0; p < 4; ++p) g.ends[pd[c][p]].push_back({c, p});
  for (const auto& [l, e] : g.ends) g.labels.push_back(l);

  // Corner (c, p) sits between slots p and p+1. Leaving along slot p+1 and
  // arriving at slot q, the face continues at corner (c', q).
  std::map<std::pair<int, int>, int> corner_face;
  for (int c = 0; c < g.crossings; ++c) {
    for (int p = 0; p < 4; ++p) {
      if (corner_face.count({c, p})) continue;
      const int face = static_cast<int>(g.face_corners.size());
      g.face_corners.emplace_back();
      g.face_edges.emplace_back();
      std::pair<int, int> at{c, p};
      while (!corner_face.count(at)) {
        corner_face[at] = face;
        g.face_corners[face].push_back(at.first);
        const int out_slot = (at.second + 1) % 4;
        const int label = pd[at.first][out_slot];
        g.face_edges[face].push_back(label);
        const auto& e = g.ends[label];
        const auto other = (e[0] == std::pair<int, int>{at.first, out_slot}) ? e[1] : e[0];
        at = other;
      }
    }
  }
  for (int f = 0; f < static_cast<int>(g.face_edges.size()); ++f)
    for (int l : g.face_edges[f]) {
      auto it = g.sides.find(l);
      if (it == g.sides.end())
        g.sides[l] = {f, -1};
      else
        it->second.second = f;
    }
  return g;
}

// Crossings reachable from each other without using the removed edges.
std::vector<int> components(const Graph& g, const std::set<int>& removed, int& count) {
  std::vector<int> comp(static_cast<std::size_t>(g.crossings), -1);
  count = 0;
  for (int s = 0; s < g.crossings; ++s) {
    if (comp[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = count;
    while (!q.empty()) {
      const int c = q.front();
      q.pop();
      for (const auto& [l, e] : g.ends) {
        if (removed.count(l)) continue;
        for (int k = 0; k < 2; ++k)
          if (e[k].first == c && comp[e[1 - k].first] < 0) {
            comp[e[1 - k].first] = count;
            q.push(e[1 - k].first);
          }
      }
    }
    ++count;
  }
  return comp;
}

// Pairs of crossings sharing a bigon face.
std::set<std::pair<int, int>> bigon_pairs(const Graph& g) {
  std::set<std::pair<int, int>> out;
  for (const auto& corners : g.face_corners)
    if (corners.size() == 2 && corners[0] != corners[1])
      out.insert({std::min(corners[0], corners[1]), std::max(corners[0], corners[1])});
  return out;
}

bool bigon_connected(const std::set<int>& nodes, const std::set<std::pair<int, int>>& bigons) {
  if (nodes.empty()) return false;
  std::set<int> seen{*nodes.begin()};
  std::vector<int> stack{*nodes.begin()};
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    for (const auto& [a, b] : bigons) {
      const int other = a == c ? b : (b == c ? a : -1);
      if (other >= 0 && nodes.count(other) && !seen.count(other)) {
        seen.insert(other);
        stack.push_back(other);
      }
    }
  }
  return seen.size() == nodes.size();
}

bool touches(const Graph& g, int label, int crossing) {
  const auto& e = g.ends.at(label);
  return e[0].first == crossing || e[1].first == crossing;
}

// The four edges form a simple cycle in the dual graph.
bool dual_four_cycle(const Graph& g, const std::array<int, 4>& edges) {
  std::map<int, int> degree;
  for (int l : edges) {
    const auto [f0, f1] = g.sides.at(l);
    if (f0 == f1) return false;
    ++degree[f0];
    ++degree[f1];
  }
  if (degree.size() != 4) return false;
  for (const auto& [f, d] : degree)
    if (d != 2) return false;
  // Walk the cycle from the first edge.
  std::set<int> used{edges[0]};
  int face = g.sides.at(edges[0]).second;
  const int start = g.sides.at(edges[0]).first;
  for (int step = 0; step < 3; ++step) {
    bool moved = false;
    for (int l : edges) {
      if (used.count(l)) continue;
      const auto [f0, f1] = g.sides.at(l);
      if (f0 == face || f1 == face) {
        face = f0 == face ? f1 : f0;
        used.insert(l);
        moved = true;
        break;
      }
    }
    if (!moved) return false;
  }
  return face == start;
}

}  // namespace

Summary analyze(const Pd& pd) {
  const Graph g = build(pd);
  Summary s;
  const auto bigons = bigon_pairs(g);

  // Twist regions: classes of crossings under bigon adjacency.
  std::vector<int> region(static_cast<std::size_t>(g.crossings), -1);
  int regions = 0;
  for (int c = 0; c < g.crossings; ++c) {
    if (region[c] >= 0) continue;
    std::vector<int> stack{c};
    region[c] = regions;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& [a, b] : bigons) {
        const int other = a == x ? b : (b == x ? a : -1);
        if (other >= 0 && region[other] < 0) {
          region[other] = regions;
          stack.push_back(other);
        }
      }
    }
    ++regions;
  }
  s.region_sizes.assign(static_cast<std::size_t>(regions), 0);
  for (int r : region) ++s.region_sizes[r];
  std::sort(s.region_sizes.begin(), s.region_sizes.end());

  const int n = static_cast<int>(g.labels.size());
  // Two edges between the same two faces form a dual 2-cycle.
  for (int i = 0; i < n && s.prime; ++i)
    for (int j = i + 1; j < n && s.prime; ++j) {
      const auto a = g.sides.at(g.labels[i]);
      const auto b = g.sides.at(g.labels[j]);
      if (a.first == a.second) continue;
      if (std::minmax(a.first, a.second) != std::minmax(b.first, b.second)) continue;
      int count = 0;
      components(g, {g.labels[i], g.labels[j]}, count);
      if (count > 1) s.prime = false;
    }

  for (int i = 0; i < n && s.twist_reduced; ++i)
    for (int j = i + 1; j < n && s.twist_reduced; ++j)
      for (int k = j + 1; k < n && s.twist_reduced; ++k)
        for (int m = k + 1; m < n && s.twist_reduced; ++m) {
          const std::array<int, 4> edges{g.labels[i], g.labels[j], g.labels[k], g.labels[m]};
          if (!dual_four_cycle(g, edges)) continue;
          int count = 0;
          const auto comp = components(g, {edges.begin(), edges.end()}, count);

          bool some_pair = false;
          bool accepted = false;
          // Split the four edges two and two, and try every crossing pair.
          for (int x = 0; x < g.crossings && !accepted; ++x)
            for (int y = 0; y < g.crossings && !accepted; ++y) {
              if (x == y) continue;
              for (int a = 0; a < 4 && !accepted; ++a)
                for (int b = a + 1; b < 4 && !accepted; ++b) {
                  std::vector<int> rest;
                  for (int t = 0; t < 4; ++t)
                    if (t != a && t != b) rest.push_back(edges[t]);
                  if (!touches(g, edges[a], x) || !touches(g, edges[b], x)) continue;
                  if (!touches(g, rest[0], y) || !touches(g, rest[1], y)) continue;
                  some_pair = true;
                  for (int side = 0; side < count && !accepted; ++side) {
                    std::set<int> chain{x, y};
                    for (int c = 0; c < g.crossings; ++c)
                      if (comp[c] == side) chain.insert(c);
                    accepted = bigon_connected(chain, bigons);
                  }
                }
            }
          if (some_pair && !accepted) s.twist_reduced = false;
        }
  return s;
}

}  // namespace oracle
