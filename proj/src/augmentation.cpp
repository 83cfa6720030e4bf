#include "twistvol/augmentation.hpp"

#include <cmath>
#include <map>
#include <set>

#include "disjoint_sets.hpp"

namespace twistvol {

namespace {

// Removes the listed crossings; strands pass straight through where they were.
PlanarDiagram remove_crossings(const PlanarDiagram& d, const std::set<CrossingId>& removed) {
  detail::DisjointSets strands(d.edge_count());
  for (CrossingId c : removed) {
    strands.unite(d.edge_at(c, 0), d.edge_at(c, 2));
    strands.unite(d.edge_at(c, 1), d.edge_at(c, 3));
  }
  std::map<std::size_t, EdgeLabel> label_of_class;
  auto label_for = [&](EdgeId e) {
    const std::size_t root = strands.find(e);
    auto it = label_of_class.find(root);
    if (it != label_of_class.end()) return it->second;
    const EdgeLabel fresh = static_cast<EdgeLabel>(label_of_class.size()) + 1;
    label_of_class.emplace(root, fresh);
    return fresh;
  };

  std::vector<PdCrossing> kept;
  for (CrossingId c = 0; c < d.crossing_count(); ++c) {
    if (removed.count(c)) continue;
    PdCrossing x;
    for (int p = 0; p < 4; ++p) x.labels[static_cast<std::size_t>(p)] = label_for(d.edge_at(c, p));
    kept.push_back(x);
  }
  // Strands that lost all their crossings become loops.
  std::vector<EdgeLabel> loops;
  std::set<std::size_t> used;
  for (const auto& [root, label] : label_of_class) used.insert(root);
  std::set<std::size_t> loop_roots;
  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    if (d.edge(e).is_loop()) continue;
    const std::size_t root = strands.find(e);
    if (!used.count(root)) loop_roots.insert(root);
  }
  EdgeLabel next = static_cast<EdgeLabel>(label_of_class.size()) + 1;
  for (std::size_t i = 0; i < loop_roots.size(); ++i) loops.push_back(next++);
  for (std::size_t i = 0; i < d.loops().size(); ++i) loops.push_back(next++);
  return PlanarDiagram::from_pd(d.name().empty() ? std::string{} : d.name() + " (augmented)", std::move(kept),
                                std::move(loops));
}

}  // namespace

AugmentedLink augment(const PlanarDiagram& d, const std::vector<TwistRegion>& regions) {
  if (regions.size() < 2)
    throw InapplicableError("augmentation needs at least 2 twist regions, diagram has " +
                            std::to_string(regions.size()));

  std::set<CrossingId> removed;
  std::vector<CrossingCircle> circles;
  std::map<int, std::size_t> passages;
  std::size_t region_bigons = 0;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const TwistRegion& r = regions[i];
    CrossingCircle circle;
    circle.index = i;
    circle.crossing_count = r.crossing_count();
    circle.full_twists = static_cast<int>(r.crossing_count() / 2);
    const CrossingId first = r.crossings.front();
    circle.half_twist = (r.crossing_count() % 2 == 1) ? d.crossing_sign(first) : 0;
    circle.strand_components = {d.under_component(first), d.over_component(first)};
    for (int comp : circle.strand_components) ++passages[comp];
    for (std::size_t k = 0; k < 2 * static_cast<std::size_t>(circle.full_twists); ++k) removed.insert(r.crossings[k]);
    region_bigons += r.bigons.size();
    circles.push_back(circle);
  }

  std::vector<PlaneComponent> plane;
  for (int comp = 0; comp < static_cast<int>(d.component_count()); ++comp) {
    auto it = passages.find(comp);
    plane.push_back({comp, it == passages.end() ? 0 : it->second});
  }

  bool reduced = false;
  if (d.crossing_count() > 0 && d.is_connected()) reduced = is_prime(d).prime && is_twist_reduced(d).twist_reduced;

  std::size_t crossing_faces = 0;
  for (const Face& f : d.faces())
    if (!f.corners.empty()) ++crossing_faces;

  return AugmentedLink{remove_crossings(d, removed), std::move(circles), std::move(plane),
                       crossing_faces - region_bigons, reduced};
}

std::vector<FillingSlope> filling_slopes(const AugmentedLink& a) {
  std::vector<FillingSlope> out;
  for (const CrossingCircle& c : a.crossing_circles) {
    if (c.crossing_count == 0)
      throw DomainError("crossing circle " + std::to_string(c.index) + " encloses no crossings");
    // mu = 1 white + epsilon shaded, lambda = 2 shaded; sigma = mu + n lambda.
    const int direction = c.half_twist != 0 ? c.half_twist : 1;
    const Steps mu{1, c.half_twist};
    const Steps lambda{0, 2 * direction};
    FillingSlope s;
    s.circle = c.index;
    s.denominator = c.full_twists;
    s.sigma = Steps{mu.white + c.full_twists * lambda.white, mu.shaded + c.full_twists * lambda.shaded};
    out.push_back(s);
  }
  return out;
}

PolyhedralDecomposition decomposition(const AugmentedLink& a) {
  const std::size_t tw = a.twist_count();
  PolyhedralDecomposition p;
  // Two shaded triangles per crossing circle. Every edge borders one shaded
  // triangle, and the ideal vertices are 4-valent.
  p.shaded_faces = 2 * tw;
  p.edges = 3 * p.shaded_faces;
  p.ideal_vertices = p.edges / 2;
  p.white_faces = 2 + p.edges - p.ideal_vertices - p.shaded_faces;
  for (const CrossingCircle& c : a.crossing_circles) p.half_twist_gluing.push_back(c.half_twist != 0);
  return p;
}

std::vector<CuspTiling> cusp_tilings(const AugmentedLink& a) {
  std::vector<CuspTiling> out;
  for (const CrossingCircle& c : a.crossing_circles) {
    CuspTiling t;
    t.kind = CuspTiling::Kind::CrossingCircle;
    t.id = c.index;
    t.rectangle_count = 2;
    t.longitude = Steps{0, 2};
    t.meridian = Steps{1, c.half_twist};
    out.push_back(t);
  }
  for (const PlaneComponent& p : a.plane_components) {
    CuspTiling t;
    t.kind = CuspTiling::Kind::PlaneComponent;
    t.id = static_cast<std::size_t>(p.component);
    t.rectangle_count = 2 * p.circle_passages;
    out.push_back(t);
  }
  return out;
}

double cusp_volume_lower(const AugmentedLink& a) {
  if (a.twist_count() < 2)
    throw InapplicableError("cusp volume bound needs tw >= 2, got " + std::to_string(a.twist_count()));
  if (!a.diagram_reduced) throw InapplicableError("cusp volume bound needs a prime, twist-reduced diagram");
  std::size_t rectangles = 0;
  for (const CuspTiling& t : cusp_tilings(a)) rectangles += t.rectangle_count;
  return 0.5 * static_cast<double>(rectangles);
}

double boroczky_density() { return std::sqrt(3.0) / (2.0 * kRegularIdealTetrahedronVolume); }

double volume_lower_boroczky(const AugmentedLink& a) { return cusp_volume_lower(a) / boroczky_density(); }

}  // namespace twistvol
