#include "twistvol/cone_engine.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "twistvol/errors.hpp"

namespace twistvol::cone {

namespace {

void require_unit_interval(double z, const char* what) {
  if (!(z > 0.0 && z < 1.0)) throw DomainError(std::string(what) + " needs 0 < z < 1, got " + std::to_string(z));
}

}  // namespace

double min_z() { return std::tanh(kMinTubeRadius); }

double H(double z) {
  require_unit_interval(z, "H");
  return (1 + z * z) / (kAreaConstant * z * (1 - z * z));
}

double H_prime(double z) {
  require_unit_interval(z, "H'");
  const double n = 1 + z * z;
  const double d = kAreaConstant * (z - z * z * z);
  return (2 * z * d - n * kAreaConstant * (1 - 3 * z * z)) / (d * d);
}

double G_tilde(double z) {
  if (!(z > 0.0 && z <= 1.0)) throw DomainError("G~ needs 0 < z <= 1, got " + std::to_string(z));
  const double a = 1 + z * z;
  return a * a / (kGTildeConstant * z * z * z * (3 - z * z));
}

double h(double R) {
  if (!(R >= kMinTubeRadius)) throw DomainError("h needs R >= 0.531, got " + std::to_string(R));
  return kAreaConstant * std::tanh(R) / std::cosh(2 * R);
}

double tube_packing_bound(double R) { return h(R) / 2; }

double inverse_h(double x) {
  const double top = h(kMinTubeRadius);
  if (!(x > 0 && x <= top * (1 + 1e-12)))
    throw DomainError("h(rho) = " + std::to_string(x) + " has no solution with rho >= " +
                      std::to_string(kMinTubeRadius));
  if (x >= top) return kMinTubeRadius;
  auto f = [x](double r) { return h(r) - x; };
  double lo = kMinTubeRadius;
  double hi = 2 * kMinTubeRadius;
  while (f(hi) > 0) {
    lo = hi;
    hi *= 2;
    if (hi > 1e3) throw NoSolutionError("could not bracket h(rho) = " + std::to_string(x));
  }
  std::uintmax_t iterations = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      f, lo, hi, f(lo), f(hi), boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 3),
      iterations);
  return (a + b) / 2;
}

double max_normalized_length_for_tube() { return tube_packing_bound(kMinTubeRadius) / (2 * std::numbers::pi); }

double solve_rho_hat(double l_hat) {
  if (!(l_hat > 0)) throw DomainError("normalized length must be positive, got " + std::to_string(l_hat));
  if (l_hat > max_normalized_length_for_tube())
    throw NoSolutionError("normalized length " + std::to_string(l_hat) + " exceeds " +
                          std::to_string(max_normalized_length_for_tube()) + "; no tube of radius >= 0.531");
  return inverse_h(4 * std::numbers::pi * l_hat);
}

ConeFillingParams cone_filling_params(double alpha, double length) {
  if (!(alpha > 0 && length > 0)) throw DomainError("cone angle and length must be positive");
  const double product = alpha * length;
  if (product > tube_packing_bound(kMinTubeRadius))
    throw DomainError("alpha * ell = " + std::to_string(product) + " exceeds " +
                      std::to_string(tube_packing_bound(kMinTubeRadius)));
  ConeFillingParams c;
  c.alpha = alpha;
  c.length = length;
  c.rho = inverse_h(2 * product);
  c.z = std::tanh(c.rho);
  c.u = 2 * alpha * alpha * H(c.z);
  return c;
}

double volume_change_integrand_raw(double z) {
  const double hz = H(z);
  return H_prime(z) / (8 * hz * (hz - G_tilde(z)));
}

double volume_change_integrand(double w) {
  if (!(w > 0 && w <= 1)) throw DomainError("integrand needs 0 < z <= 1, got " + std::to_string(w));
  const double w2 = w * w;
  const double a = 1 + w2;
  const double f = kAreaConstant * w * (1 - w2) / a;
  const double f_prime = kAreaConstant * (1 - 4 * w2 - w2 * w2) / (a * a);
  const double g = a * a / (kGTildeConstant * w2 * w * (3 - w2));
  const double denom = 1 - g * f;
  if (!(denom > 0)) throw DomainError("tube too thin for the volume estimate at z = " + std::to_string(w));
  return -f_prime / (8 * denom);
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tolerance,
                                    std::size_t max_subintervals) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  struct Piece {
    double a, b, value, error;
    bool operator<(const Piece& o) const { return error < o.error; }
  };
  auto evaluate = [&](double lo, double hi) {
    double err = 0;
    const double v = Rule::integrate(f, lo, hi, 0, 0.0, &err);
    return Piece{lo, hi, v, err};
  };

  QuadratureResult r;
  if (a == b) return r;
  std::priority_queue<Piece> pieces;
  pieces.push(evaluate(a, b));
  double total_error = pieces.top().error;
  while (total_error > tolerance && pieces.size() < max_subintervals) {
    const Piece worst = pieces.top();
    pieces.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Piece left = evaluate(worst.a, mid);
    const Piece right = evaluate(mid, worst.b);
    total_error += left.error + right.error - worst.error;
    pieces.push(left);
    pieces.push(right);
  }

  r.subinterval_count = pieces.size();
  r.error_estimate = 0;
  while (!pieces.empty()) {
    r.value += pieces.top().value;
    r.error_estimate += pieces.top().error;
    pieces.pop();
  }
  return r;
}

QuadratureResult delta_v_per_cusp(double z_hat, double tolerance) {
  // Allow for rounding in tanh(rho_hat) just below the smallest radius.
  const double lowest = min_z() * (1 - 1e-12);
  if (!(z_hat >= lowest && z_hat <= 1))
    throw DomainError("z_hat must lie in [" + std::to_string(min_z()) + ", 1], got " + std::to_string(z_hat));
  return integrate_adaptive(volume_change_integrand, z_hat, 1.0, tolerance);
}

double delta_v_bound(std::size_t n, std::optional<std::span<const double>> l_hats) {
  if (!l_hats) return static_cast<double>(n) * delta_v_per_cusp(min_z()).value;
  if (l_hats->size() != n)
    throw DomainError("expected " + std::to_string(n) + " normalized lengths, got " + std::to_string(l_hats->size()));
  double total = 0;
  for (double l : *l_hats) total += delta_v_per_cusp(std::tanh(solve_rho_hat(l))).value;
  return total;
}

}  // namespace twistvol::cone
