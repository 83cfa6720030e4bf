#pragma once

// Cone-deformation estimates for Dehn filling. As the cone angles alpha on a
// family of cusps grow from 0 to 2 pi, a tube of radius R(alpha) stays
// embedded around each singular curve, and the volume lost along the way is
// bounded by an integral in z = tanh R.
//
// Notation: k is the single-cusp area constant, and the final tube radius
// rho_hat is determined by the normalized length l_hat of the filling slope
// through h(rho_hat) / 2 = 2 pi l_hat.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>

namespace twistvol::cone {

inline constexpr double kAreaConstant = 3.3957;
inline constexpr double kPackingConstant = kAreaConstant / 2;    // 1.69785
inline constexpr double kGTildeConstant = 2 * kAreaConstant;     // 6.7914
// Below this radius the area estimate is not available.
inline constexpr double kMinTubeRadius = 0.531;

// tanh(kMinTubeRadius)
double min_z();

// H and H' need 0 < z < 1, G~ allows z = 1. DomainError otherwise.
double H(double z);
double H_prime(double z);
double G_tilde(double z);

// Lower bound on the cusp torus area at tube radius R, and the same per
// cusp under the horoball packing. Both are strictly decreasing for
// R >= kMinTubeRadius and throw DomainError below it.
double h(double R);
double tube_packing_bound(double R);

// Solves h(rho) = x for rho >= kMinTubeRadius; requires 0 < x <= h(kMinTubeRadius).
double inverse_h(double x);

// rho_hat for a slope of normalized length l_hat. Throws DomainError when
// l_hat is not positive and NoSolutionError when it is too large.
double solve_rho_hat(double l_hat);

// The largest l_hat for which solve_rho_hat succeeds.
double max_normalized_length_for_tube();

// State of the deformation at cone angle alpha with meridian length ell.
// At alpha = 2 pi the length is l_hat and rho is rho_hat.
struct ConeFillingParams {
  double alpha = 0;
  double length = 0;
  double rho = 0;  // tube radius, from h(rho) = 2 alpha ell
  double z = 0;    // tanh(rho)
  double u = 0;    // 2 alpha^2 H(z), equal to alpha / ell
};

// Throws DomainError when alpha * ell exceeds tube_packing_bound(kMinTubeRadius).
ConeFillingParams cone_filling_params(double alpha, double length);

// Integrand of the volume change, as H' / (8 H (H - G~)).
double volume_change_integrand_raw(double z);
// The same after substituting f = 1/H; finite at z = 1, where it equals k/8.
double volume_change_integrand(double z);

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  std::size_t subinterval_count = 0;
};

// Globally adaptive 7-15 Gauss-Kronrod quadrature: the subinterval with the
// largest error estimate is bisected until the total is within tolerance.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double tolerance = 1e-10, std::size_t max_subintervals = 4096);

// Volume change bound for one cusp whose final tube has tanh(rho_hat) = z_hat.
// Requires min_z() <= z_hat <= 1.
QuadratureResult delta_v_per_cusp(double z_hat, double tolerance = 1e-10);

// Total volume change for n cusps. With no lengths every cusp takes the worst
// case z_hat = min_z(); otherwise l_hats gives one normalized length per cusp.
double delta_v_bound(std::size_t n, std::optional<std::span<const double>> l_hats = std::nullopt);

}  // namespace twistvol::cone
