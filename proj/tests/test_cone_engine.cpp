#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "twistvol/cone_engine.hpp"
#include "twistvol/errors.hpp"

using namespace twistvol;
using namespace twistvol::cone;

namespace {

// The raw integrand from partial fractions, H = (1/z + 2z/(1-z^2)) / k.
double raw_integrand(double z) {
  const double k = 3.3957;
  const double q = 1 - z * z;
  const double h = (1 / z + 2 * z / q) / k;
  const double dh = (-1 / (z * z) + 2 * (1 + z * z) / (q * q)) / k;
  const double g = (1 + z * z) * (1 + z * z) / (6.7914 * z * z * z * (3 - z * z));
  return dh / (8 * h * (h - g));
}

// Composite midpoint rule; never evaluates at z = 1.
double midpoint(double a, double b, int steps) {
  const double dx = (b - a) / steps;
  double sum = 0;
  for (int i = 0; i < steps; ++i) sum += raw_integrand(a + (i + 0.5) * dx);
  return sum * dx;
}

// Plain bisection on h(rho) / 2 = 2 pi l_hat.
double bisect_rho(double l_hat) {
  const double target = 2 * std::numbers::pi * l_hat;
  auto g = [&](double r) { return 1.69785 * std::tanh(r) / std::cosh(2 * r) - target; };
  double lo = 0.531;
  double hi = 50;
  while (hi - lo > 1e-15 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (g(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("constants") {
  CHECK(kPackingConstant == 1.69785);
  CHECK(kGTildeConstant == doctest::Approx(6.7914).epsilon(1e-15).scale(0));
  CHECK(min_z() == doctest::Approx(0.486145124699874).epsilon(1e-12).scale(0));
}

TEST_CASE("H") {
  CHECK(std::abs(H(min_z()) - 0.98071) <= 1e-5);
  CHECK(std::abs(H(0.9) - 3.1169) <= 1e-3);
  CHECK(H(0.9) == doctest::Approx(3.11711733122403).epsilon(1e-12).scale(0));
  CHECK(H(1 - 1e-6) > 1e5);
  CHECK_THROWS_AS(H(0), DomainError);
  CHECK_THROWS_AS(H(1), DomainError);
  CHECK_THROWS_AS(H(-0.5), DomainError);
}

TEST_CASE("H' matches a central difference") {
  for (double z : {0.5, 0.6, 0.75, 0.9, 0.99}) {
    const double e = 1e-6;
    const double numeric = (H(z + e) - H(z - e)) / (2 * e);
    CHECK(H_prime(z) == doctest::Approx(numeric).epsilon(1e-7).scale(0));
  }
}

TEST_CASE("G tilde") {
  CHECK(G_tilde(1) == doctest::Approx(0.294490090408458).epsilon(1e-12).scale(0));
  CHECK(G_tilde(min_z()) == doctest::Approx(0.708812887244846).epsilon(1e-12).scale(0));
  CHECK_THROWS_AS(G_tilde(0), DomainError);
  CHECK_THROWS_AS(G_tilde(1.01), DomainError);
  for (int i = 0; i < 1000; ++i) {
    const double z = min_z() + (1 - min_z()) * i / 1000.0;
    CHECK(H(z) - G_tilde(z) > 0);
  }
}

TEST_CASE("h and the packing bound") {
  CHECK(std::abs(h(0.531) - 1.019675) <= 1e-5);
  CHECK(h(20) < 1e-15);
  CHECK_THROWS_AS(h(0.5), DomainError);
  CHECK(std::abs(tube_packing_bound(0.531) - 0.509838) <= 1e-5);
  CHECK(std::abs(tube_packing_bound(1.0) - 0.34374) <= 1e-4);
  for (double r = 0.531; r < 5; r += 0.137) {
    CHECK(tube_packing_bound(r) == h(r) / 2);
    CHECK(H(std::tanh(r)) * h(r) == doctest::Approx(1.0).epsilon(1e-12).scale(0));
    CHECK(h(r + 0.01) < h(r));
  }
}

TEST_CASE("rho hat") {
  CHECK(solve_rho_hat(max_normalized_length_for_tube()) == doctest::Approx(0.531).epsilon(1e-12).scale(0));
  CHECK(max_normalized_length_for_tube() == doctest::Approx(0.0811428378337902).epsilon(1e-12).scale(0));
  CHECK(solve_rho_hat(0.04) == doctest::Approx(bisect_rho(0.04)).epsilon(1e-10).scale(0));
  const double far = solve_rho_hat(1e-6);
  // tanh -> 1 and cosh(2r) -> e^(2r)/2 for large r.
  CHECK(std::abs(far - 0.5 * std::log(2 * 1.69785 / (2 * std::numbers::pi * 1e-6))) < 1e-5);
  CHECK(tube_packing_bound(far) == doctest::Approx(2 * std::numbers::pi * 1e-6).epsilon(1e-12).scale(0));
  CHECK_THROWS_AS(solve_rho_hat(0.2), NoSolutionError);
  CHECK_THROWS_AS(solve_rho_hat(0), DomainError);
  CHECK_THROWS_AS(solve_rho_hat(-1), DomainError);
}

TEST_CASE("property: rho hat residual and bisection agreement") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(1e-6, max_normalized_length_for_tube());
  for (int i = 0; i < 100; ++i) {
    const double l = u(rng);
    const double rho = solve_rho_hat(l);
    const double lhs = tube_packing_bound(rho);
    const double rhs = 2 * std::numbers::pi * l;
    CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
    CHECK(std::abs(rho - bisect_rho(l)) <= 1e-10 * rho);
  }
}

TEST_CASE("cone filling parameters") {
  const auto c = cone_filling_params(2 * std::numbers::pi, 0.04);
  CHECK(c.rho == doctest::Approx(solve_rho_hat(0.04)).epsilon(1e-14).scale(0));
  CHECK(c.z == std::tanh(c.rho));
  CHECK(c.u == doctest::Approx(c.alpha / c.length).epsilon(1e-10).scale(0));
  CHECK_THROWS_AS(cone_filling_params(1.0, 0.6), DomainError);
}

TEST_CASE("integrand forms agree") {
  CHECK(volume_change_integrand(1.0) == doctest::Approx(kAreaConstant / 8).epsilon(1e-14).scale(0));
  const double a = min_z();
  const double b = 1 - 1e-4;
  for (int i = 0; i < 10000; ++i) {
    const double z = a + (b - a) * i / 9999.0;
    const double raw = volume_change_integrand_raw(z);
    CHECK(std::abs(raw - volume_change_integrand(z)) <= 1e-10 * std::abs(raw));
  }
}

TEST_CASE("per-cusp integral") {
  const auto start = std::chrono::steady_clock::now();
  const auto q = delta_v_per_cusp(min_z());
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(std::abs(q.value - 0.16436) <= 5e-5);
  CHECK(q.value == doctest::Approx(0.164329913463477).epsilon(1e-10).scale(0));
  CHECK(q.error_estimate >= 0);
  CHECK(q.error_estimate <= 1e-7);
  CHECK(q.subinterval_count >= 1);
  CHECK(seconds < 1.0);

  CHECK(delta_v_per_cusp(1.0).value == 0);
  CHECK(std::abs(delta_v_per_cusp(0.9).value - midpoint(0.9, 1.0, 1000000)) < 1e-6);
  CHECK(std::abs(q.value - midpoint(min_z(), 1.0, 1000000)) < 1e-6);
  CHECK_THROWS_AS(delta_v_per_cusp(0.4), DomainError);
  CHECK_THROWS_AS(delta_v_per_cusp(1.1), DomainError);
}

TEST_CASE("adaptive quadrature on known integrals") {
  const auto q = integrate_adaptive([](double x) { return std::exp(x); }, 0, 1, 1e-12);
  CHECK(q.value == doctest::Approx(std::numbers::e - 1).epsilon(1e-13).scale(0));
  const auto r = integrate_adaptive([](double x) { return std::sqrt(x); }, 0, 1, 1e-10);
  CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-9).scale(0));
  CHECK(r.subinterval_count > 1);
}

TEST_CASE("total volume change") {
  CHECK(std::abs(delta_v_bound(3) - 0.49308) <= 1.5e-4);
  const double boundary[] = {max_normalized_length_for_tube()};
  CHECK(delta_v_bound(1, boundary) == doctest::Approx(delta_v_bound(1)).epsilon(1e-9).scale(0));
  const double tiny[] = {1e-6, 1e-6};
  CHECK(delta_v_bound(2, tiny) < 1e-3);
  CHECK(delta_v_bound(2, tiny) == doctest::Approx(2 * midpoint(std::tanh(solve_rho_hat(1e-6)), 1, 1000)).epsilon(1e-6).scale(0));
  const double too_long[] = {0.2};
  CHECK_THROWS_AS(delta_v_bound(1, too_long), NoSolutionError);
  CHECK_THROWS_AS(delta_v_bound(2, too_long), DomainError);
}
