#pragma once

// Bound spectrum by four routes: closed form, Hermiticity-condition root
// finding, single-valuedness condition, and the perturbative series, plus the
// cutoff analysis of <p^4> that drives the sqrt(beta) correction.

#include <cmath>

#include "gupatom/model.hpp"
#include "gupatom/numerics.hpp"

namespace gupatom {

/// Exact spectrum eps_n = (1/4b)(1 - sqrt(1 + 2a sqrt(b)/n))^2, evaluated in
/// the cancellation-free form a^2 / (n (1 + sqrt(1 + 2a sqrt(b)/n)))^2.
/// At beta = 0 this is exactly a^2/(4n^2).
inline EnergyLevel energy_closed_form(const ModelParams& params, int n) {
  if (n < 1) throw std::invalid_argument("energy_closed_form: n must be >= 1");
  const double a = params.alpha;
  if (params.beta == 0.0)
    return EnergyLevel(n, a * a / (4.0 * double(n) * double(n)), Method::closed_form);
  const double x = 2.0 * a * std::sqrt(params.beta) / n;
  const double denom = double(n) * (1.0 + std::sqrt(1.0 + x));
  return EnergyLevel(n, a * a / (denom * denom), Method::closed_form);
}

/// Quantization-condition residual a/(2(sqrt(e) + sqrt(b) e)) - n.
inline double quantization_residual(const ModelParams& params, double eps, int n) {
  const double se = std::sqrt(eps);
  return params.alpha / (2.0 * (se + std::sqrt(params.beta) * eps)) - double(n);
}

/// Level n from root finding on the quantization condition.  The deformed
/// binding never exceeds the undeformed a^2/(4n^2), which bounds the bracket.
inline EnergyLevel energy_root_found(const ModelParams& params, int n) {
  if (n < 1) throw std::invalid_argument("energy_root_found: n must be >= 1");
  if (!(params.beta > 0.0))
    throw std::invalid_argument("energy_root_found: requires beta > 0 (beta = 0 is the closed form)");
  const double eps_closed = energy_closed_form(params, n).epsilon;
  const double lo = 0.5 * eps_closed;
  const double hi = params.alpha * params.alpha / (4.0 * double(n) * double(n)) * (1.0 + 1e-6);
  const double f_lo = quantization_residual(params, lo, n);
  const double f_hi = quantization_residual(params, hi, n);
  if (!(f_lo * f_hi < 0.0))
    throw std::runtime_error("energy_root_found: quantization bracket failed (inconsistent params)");
  const double eps = find_root([&](double e) { return quantization_residual(params, e, n); },
                               RootBracket(lo, hi, f_lo, f_hi), 1e-12 * eps_closed);
  return EnergyLevel(n, eps, Method::root_found);
}

/// Single-valuedness condition a/(2 sqrt(e)(1 - b e)) = m, on the branch
/// continuous in beta from the undeformed solution (the root left of the
/// minimum of the left side, which sits at e = 1/(3b)).
inline EnergyLevel energy_single_valued(const ModelParams& params, int m) {
  if (m < 1) throw std::invalid_argument("energy_single_valued: m must be >= 1");
  const double a = params.alpha, b = params.beta;
  if (b == 0.0)
    return EnergyLevel(m, a * a / (4.0 * double(m) * double(m)), Method::single_valued);

  auto residual = [&](double e) { return a / (2.0 * std::sqrt(e) * (1.0 - b * e)) - double(m); };
  const double e_min = 1.0 / (3.0 * b);  // minimum of the left side
  if (!(residual(e_min) < 0.0))
    throw std::runtime_error("energy_single_valued: single-valued branch absent");
  double lo = std::min(a * a / (4.0 * double(m) * double(m)), e_min) * 1e-6;
  while (!(residual(lo) > 0.0)) lo *= 1e-3;  // left side diverges as e -> 0+
  const double eps = find_root(residual, RootBracket(lo, e_min, residual(lo), residual(e_min)),
                               1e-12 * std::min(a * a / (4.0 * double(m) * double(m)), e_min));
  return EnergyLevel(m, eps, Method::single_valued);
}

/// m = n/(1 - sqrt(b eps_n)) with eps_n from the closed form.  Integer only
/// in the beta -> 0 limit.
inline double m_of_n(const ModelParams& params, int n) {
  const double eps = energy_closed_form(params, n).epsilon;
  const double be = params.beta * eps;
  if (!(be < 1.0)) throw std::invalid_argument("m_of_n: requires beta*eps_n < 1");
  return double(n) / (1.0 - std::sqrt(be));
}

enum class PerturbativeOrder { sqrt_beta, beta };

/// E_n = -a^2/4n^2 + (a^3/4n^3) sqrt(b) [- (5a^4/16n^4) b].
inline double energy_perturbative(const ModelParams& params, int n, PerturbativeOrder order) {
  if (n < 1) throw std::invalid_argument("energy_perturbative: n must be >= 1");
  const double a = params.alpha, nn = double(n);
  double e = -a * a / (4.0 * nn * nn) + (a * a * a / (4.0 * nn * nn * nn)) * std::sqrt(params.beta);
  if (order == PerturbativeOrder::beta)
    e -= (5.0 * a * a * a * a / (16.0 * nn * nn * nn * nn)) * params.beta;
  return e;
}

/// Truncated moment int_{-L}^{+L} p^4 |phi0_n(p)|^2 dp with the undeformed
/// density 2 e^{3/2}/(pi (p^2+e)^2), e = a^2/(4n^2).  Grows linearly in the
/// cutoff with asymptotic slope 4 e^{3/2}/pi.
inline double moment_p4_cutoff(const ModelParams& params, int n, double cutoff) {
  if (n < 1) throw std::invalid_argument("moment_p4_cutoff: n must be >= 1");
  if (!(cutoff > 0.0)) throw std::invalid_argument("moment_p4_cutoff: cutoff must be > 0");
  const double eps = params.alpha * params.alpha / (4.0 * double(n) * double(n));
  const double scale = 2.0 * std::pow(eps, 1.5) / kPi;
  auto f = [&](double p) {
    const double d = p * p + eps;
    return scale * p * p * p * p / (d * d);
  };
  return integrate(f, -cutoff, cutoff);
}

}  // namespace gupatom
