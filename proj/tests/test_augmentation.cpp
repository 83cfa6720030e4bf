#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "doctest.h"
#include "twistvol/augmentation.hpp"
#include "twistvol/generators.hpp"
#include "twistvol/twist_analysis.hpp"

using namespace twistvol;

namespace {

AugmentedLink augmented(std::vector<int> terms) {
  const auto d = rational_diagram(terms);
  return augment(d, twist_regions(d));
}

std::size_t total_rectangles(const AugmentedLink& a) {
  std::size_t n = 0;
  for (const CuspTiling& t : cusp_tilings(a)) n += t.rectangle_count;
  return n;
}

}  // namespace

TEST_CASE("v0 is three times the Lobachevsky function at pi/3") {
  // L(t) = -integral_0^t log|2 sin s| ds; the log singularity at 0 suits tanh-sinh.
  boost::math::quadrature::tanh_sinh<double> q;
  const double lob = -q.integrate([](double s) { return std::log(2 * std::sin(s)); }, 0.0, std::numbers::pi / 3);
  CHECK(3 * lob == doctest::Approx(kRegularIdealTetrahedronVolume).epsilon(1e-12).scale(0));
}

TEST_CASE("Boroczky density") {
  CHECK(std::abs(boroczky_density() - 0.853276) <= 1e-6);
  CHECK(std::abs(3 / boroczky_density() - 3.51586) <= 1e-5);
}

TEST_CASE("figure-eight augmentation") {
  const auto a = augmented({2, 2});
  CHECK(a.twist_count() == 2);
  CHECK(a.base.crossing_count() == 0);
  CHECK(a.diagram_reduced);
  for (const CrossingCircle& c : a.crossing_circles) {
    CHECK(c.crossing_count == 2);
    CHECK(c.full_twists == 1);
    CHECK(c.half_twist == 0);
  }
  CHECK(total_rectangles(a) == 12);
  CHECK(cusp_volume_lower(a) == 6.0);
}

TEST_CASE("odd regions keep one crossing") {
  const auto a = augmented({113, 115});
  CHECK(a.base.crossing_count() == 2);
  for (const CrossingCircle& c : a.crossing_circles) {
    CHECK(std::abs(c.half_twist) == 1);
    CHECK(static_cast<std::size_t>(2 * c.full_twists + std::abs(c.half_twist)) == c.crossing_count);
  }
}

TEST_CASE("filling slopes") {
  const auto a = augmented({4, 5});
  const auto slopes = filling_slopes(a);
  REQUIRE(slopes.size() == 2);
  for (const FillingSlope& s : slopes) {
    const CrossingCircle& c = a.crossing_circles[s.circle];
    CHECK(s.numerator == 1);
    CHECK(s.denominator == c.full_twists);
    CHECK(s.sigma.white == 1);
    CHECK(static_cast<std::size_t>(std::abs(s.sigma.shaded)) == c.crossing_count);
  }
  CHECK(slopes[0].denominator + slopes[1].denominator == 4);

  AugmentedLink broken = a;
  broken.crossing_circles[0].crossing_count = 0;
  CHECK_THROWS_AS(filling_slopes(broken), DomainError);
}

TEST_CASE("cusp tilings") {
  const auto a = augmented({3, 1, 2});
  std::size_t circle_rectangles = 0;
  std::size_t plane_rectangles = 0;
  for (const CuspTiling& t : cusp_tilings(a)) {
    if (t.kind == CuspTiling::Kind::CrossingCircle) {
      CHECK(t.rectangle_count == 2);
      REQUIRE(t.longitude);
      CHECK(*t.longitude == Steps{0, 2});
      REQUIRE(t.meridian);
      CHECK(t.meridian->white == 1);
      CHECK(t.meridian->shaded == a.crossing_circles[t.id].half_twist);
      circle_rectangles += t.rectangle_count;
    } else {
      plane_rectangles += t.rectangle_count;
    }
  }
  CHECK(circle_rectangles == 6);
  CHECK(plane_rectangles == 12);
}

TEST_CASE("decomposition counts match the projection") {
  for (std::vector<int> t : {std::vector<int>{2, 2}, {3, 1, 2}, {2, 1, 1, 2}, {2, 2, 2, 2, 2}}) {
    const auto a = augmented(t);
    const auto p = decomposition(a);
    const std::size_t tw = a.twist_count();
    CHECK(p.ideal_vertices == 3 * tw);
    CHECK(p.edges == 6 * tw);
    CHECK(p.shaded_faces == 2 * tw);
    CHECK(p.euler_characteristic() == 2);
    // White faces are the regions of the diagram once each twist region is collapsed.
    CHECK(p.white_faces == a.projection_regions);
    CHECK(p.half_twist_gluing.size() == tw);
  }
}

TEST_CASE("inapplicable cases") {
  const auto trefoil = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  CHECK_THROWS_AS(augment(trefoil, twist_regions(trefoil)), InapplicableError);

  const auto tr = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  const auto granny = connected_sum(tr, 1, tr, 1).diagram;
  const auto a = augment(granny, twist_regions(granny));
  CHECK_FALSE(a.diagram_reduced);
  CHECK_THROWS_AS(cusp_volume_lower(a), InapplicableError);
  CHECK_THROWS_AS(volume_lower_boroczky(a), InapplicableError);
}

TEST_CASE("volume lower bound of the augmented link") {
  const auto a = augmented({113, 115});
  CHECK(volume_lower_boroczky(a) == doctest::Approx(6 / boroczky_density()).epsilon(1e-15).scale(0));
  CHECK(std::abs(volume_lower_boroczky(a) - 2 * 3.51586) <= 2e-5);
}
