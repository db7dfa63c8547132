#pragma once

// Bohr-Sommerfeld quantization by numerical action integration (exact for
// this system) and the zeroth-order WKB phase-equation check for the
// first-order Hamiltonian p^2 + (2/3) b p^4 + V(x).

#include <cmath>
#include <sstream>

#include "gupatom/model.hpp"
#include "gupatom/numerics.hpp"
#include "gupatom/spectrum.hpp"

namespace gupatom {

/// Action closed form pi a / (sqrt(e) + sqrt(b) e).
inline double action_closed_form(const ModelParams& params, double eps) {
  return kPi * params.alpha / (std::sqrt(eps) + std::sqrt(params.beta) * eps);
}

/// oint p dx = int over the momentum interval of a b/(tan^2(sqrt(b)p) + b e).
/// The integrand is bounded by a/e and vanishes at the interval ends.
inline double action_integral(const ModelParams& params, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("action_integral: eps must be > 0");
  if (!(params.beta > 0.0)) throw std::invalid_argument("action_integral: requires beta > 0");
  const double a = params.alpha, b = params.beta;
  const double half = interval_half_width(params);
  const double sb = std::sqrt(b);
  return integrate(
      [&](double p) {
        const double t = std::tan(sb * p);
        return a * b / (t * t + b * eps);
      },
      -half, half);
}

/// Level n from the quantization rule (action = 2 n pi).  Agrees with the
/// closed-form spectrum.  beta = 0 takes the undeformed Coulomb result.
inline EnergyLevel energy_semiclassical(const ModelParams& params, int n) {
  if (n < 1) throw std::invalid_argument("energy_semiclassical: n must be >= 1");
  const double a = params.alpha;
  if (params.beta == 0.0)
    return EnergyLevel(n, a * a / (4.0 * double(n) * double(n)), Method::semiclassical);
  const double eps_closed = energy_closed_form(params, n).epsilon;
  auto residual = [&](double e) { return action_integral(params, e) - 2.0 * double(n) * kPi; };
  const double lo = 0.5 * eps_closed;
  const double hi = a * a / (4.0 * double(n) * double(n)) * (1.0 + 1e-6);
  const double f_lo = residual(lo), f_hi = residual(hi);
  if (!(f_lo * f_hi < 0.0))
    throw std::runtime_error("energy_semiclassical: action bracket failed");
  const double eps = find_root(residual, RootBracket(lo, hi, f_lo, f_hi), 1e-12 * eps_closed);
  return EnergyLevel(n, eps, Method::semiclassical);
}

/// Orbit x(p) = a b/(tan^2(sqrt(b)p) - b E) at conserved energy E.
inline double classical_turning_curve(const ModelParams& params, double E, double p) {
  if (!(params.beta > 0.0)) throw std::invalid_argument("classical_turning_curve: requires beta > 0");
  detail::require_interior(params, p);
  const double b = params.beta;
  const double t = std::tan(std::sqrt(b) * p);
  const double denom = t * t - b * E;
  if (std::abs(denom) <= 1e-14 * std::max(t * t, std::abs(b * E))) {
    std::ostringstream msg;
    msg << "classical_turning_curve: turning point in p at |p| = "
        << std::atan(std::sqrt(b * E)) / std::sqrt(b);
    throw std::runtime_error(msg.str());
  }
  return params.alpha * b / denom;
}

/// Phi0'^2 solving Phi0'^2 + (2b/3) Phi0'^4 = E - V(x), V = -a/x, on the
/// positive branch (2w/(1 + sqrt(1 + 8bw/3)); w itself at beta = 0).
inline double wkb_phase_velocity_squared(const ModelParams& params, double E, double x) {
  if (!(x > 0.0)) throw std::invalid_argument("wkb: x must be > 0");
  const double w = E + params.alpha / x;
  if (!(w > 0.0)) throw std::invalid_argument("wkb: classically forbidden point (E - V < 0)");
  if (params.beta == 0.0) return w;
  return 2.0 * w / (1.0 + std::sqrt(1.0 + 8.0 * params.beta * w / 3.0));
}

/// |Phi0'^2 + (2b/3) Phi0'^4 - (E - V(x))| for the closed-branch solution.
inline double wkb_phase_residual(const ModelParams& params, double E, double x) {
  const double w = E + params.alpha / x;
  const double y = wkb_phase_velocity_squared(params, E, x);
  return std::abs(y + (2.0 * params.beta / 3.0) * y * y - w);
}

}  // namespace gupatom
