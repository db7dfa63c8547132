#pragma once

// Exact momentum-space eigenfunctions and their consistency conditions:
// normalization, the integration constant c of the 1/X action, the
// Hermiticity defect Im c, the vanishing-integral constraint, the full
// integral-equation residual, and the operator identities for X and 1/X.

#include <algorithm>
#include <cmath>

#include "gupatom/model.hpp"
#include "gupatom/numerics.hpp"
#include "gupatom/spectrum.hpp"

namespace gupatom {

/// Eigenfunction data for one binding eps (not necessarily quantized):
/// normalization A and the constant c picked up by the 1/X action.
/// Im c = 0 exactly when eps lies on the quantized spectrum.
struct EigenfunctionContext {
  ModelParams params;
  EnergyLevel level;
  double A;
  complex c;

  EigenfunctionContext(const ModelParams& params_, const EnergyLevel& level_)
      : params(params_), level(level_), A(0.0), c(0.0, 0.0) {
    const double eps = level.epsilon;
    const double be = params.beta * eps;
    if (!(be < 1.0))
      throw std::invalid_argument("EigenfunctionContext: requires beta*eps < 1 (bound regime)");
    const double sbe = std::sqrt(be);
    A = std::sqrt(2.0 / kPi) * std::pow(eps, -0.25) * (1.0 + sbe) / std::sqrt(1.0 + 2.0 * sbe);
    c = A * (eps / params.alpha) * std::polar(1.0, phase_at_lower_endpoint());
  }

  /// Phase of the eigenfunction at p -> -pi/(2 sqrt(b)):
  /// pi a / (2 sqrt(e) (1 + sqrt(b e))).  Also the phase of c.
  double phase_at_lower_endpoint() const {
    const double eps = level.epsilon;
    return kPi * params.alpha / (2.0 * std::sqrt(eps) * (1.0 + std::sqrt(params.beta * eps)));
  }
};

/// Context for the quantized level n (closed-form spectrum).
inline EigenfunctionContext make_context(const ModelParams& params, int n) {
  return EigenfunctionContext(params, energy_closed_form(params, n));
}

/// Context for an arbitrary binding eps (for off-spectrum diagnostics).
inline EigenfunctionContext make_context_at(const ModelParams& params, double eps, int n_tag = 1) {
  return EigenfunctionContext(params, EnergyLevel(n_tag, eps, Method::root_found));
}

namespace detail {

// |phi(p)| / A = b e cos^2(u) / (b e cos^2(u) + sin^2(u)), u = sqrt(b) p.
// Same as 2 b e cos^2(u) / (1 + b e - (1 - b e) cos(2u)) without the
// subtraction of nearly equal terms at small b e.
inline double modulus_over_A(double beta, double eps, double p) {
  const double u = std::sqrt(beta) * p;
  const double cu = std::cos(u), su = std::sin(u);
  const double be = beta * eps;
  return be * cu * cu / (be * cu * cu + su * su);
}

inline double phase(const ModelParams& params, double eps, double p) {
  const double be = params.beta * eps;
  const double u = std::sqrt(params.beta) * p;
  return (params.alpha / (1.0 - be)) *
         (params.beta * p - std::atan(std::tan(u) / std::sqrt(be)) / std::sqrt(eps));
}

}  // namespace detail

/// phi(p).  The phase uses the arctan form, single-valued and continuous on
/// the open interval.  beta = 0 takes the undeformed limit
/// A e/(e+p^2) exp(-i (a/sqrt(e)) arctan(p/sqrt(e))).
inline complex eval_phi(const EigenfunctionContext& ctx, double p) {
  const double eps = ctx.level.epsilon;
  if (ctx.params.beta == 0.0) {
    const double mod = ctx.A * eps / (eps + p * p);
    const double th = -(ctx.params.alpha / std::sqrt(eps)) * std::atan(p / std::sqrt(eps));
    return std::polar(mod, th);
  }
  detail::require_interior(ctx.params, p);
  const double mod = ctx.A * detail::modulus_over_A(ctx.params.beta, eps, p);
  return std::polar(mod, detail::phase(ctx.params, eps, p));
}

/// |phi(p)|^2.
inline double density(const EigenfunctionContext& ctx, double p) {
  const double eps = ctx.level.epsilon;
  if (ctx.params.beta == 0.0) {
    const double m = ctx.A * eps / (eps + p * p);
    return m * m;
  }
  detail::require_interior(ctx.params, p);
  const double m = ctx.A * detail::modulus_over_A(ctx.params.beta, eps, p);
  return m * m;
}

/// c = A (e/a) exp[i pi a / (2 sqrt(e)(1 + sqrt(b e)))].
inline complex constant_c(const EigenfunctionContext& ctx) { return ctx.c; }

/// Im c: zero (within tolerance) iff eps is on the quantized spectrum.
inline double hermiticity_residual(const EigenfunctionContext& ctx) { return ctx.c.imag(); }

/// Closed form of the full-interval integral of phi:
/// A (2e/a) sin[pi a / (2 sqrt(e)(1 + sqrt(b e)))]; vanishes on-spectrum.
inline double integral_condition_closed_form(const EigenfunctionContext& ctx) {
  return ctx.A * (2.0 * ctx.level.epsilon / ctx.params.alpha) *
         std::sin(ctx.phase_at_lower_endpoint());
}

/// Grid adapted to this eigenfunction (resolves density peak and phase).
inline MomentumGrid eigenstate_grid(const EigenfunctionContext& ctx, int node_count = 2048) {
  return make_adapted_grid(ctx.params.beta, ctx.level.epsilon, node_count);
}

/// phi sampled on a grid, with its metadata.
inline SampledWaveFunction sample_eigenfunction(const EigenfunctionContext& ctx,
                                                const MomentumGrid& grid) {
  detail::require_matching_grid(ctx.params, grid);
  std::vector<complex> vals(grid.node_count());
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = eval_phi(ctx, grid.nodes[i]);
  SampledWaveFunction out(SampledWaveFunction::Kind::momentum_p, grid.nodes, std::move(vals));
  out.level = ctx.level;
  out.normalization_A = ctx.A;
  out.constant_c = ctx.c;
  return out;
}

/// Quadrature of |phi|^2 over the full interval (1 for a normalized state).
inline double norm_squared(const EigenfunctionContext& ctx, const MomentumGrid& grid) {
  detail::require_matching_grid(ctx.params, grid);
  double acc = 0.0;
  for (std::size_t i = 0; i < grid.node_count(); ++i)
    acc += grid.weights[i] * density(ctx, grid.nodes[i]);
  return acc;
}

/// Quadrature of phi over the full interval.  Analytically equals
/// integral_condition_closed_form (a real number).
inline complex integral_condition(const EigenfunctionContext& ctx, const MomentumGrid& grid) {
  detail::require_matching_grid(ctx.params, grid);
  complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < grid.node_count(); ++i)
    acc += grid.weights[i] * eval_phi(ctx, grid.nodes[i]);
  return acc;
}

/// Sup-norm residual of the momentum-space integral equation
///   -tan^2(sqrt(b)p)/b phi - i a F(p) + a c - e phi = 0,
/// F = running integral of phi from the lower endpoint, evaluated with the
/// self-adjoint (real) constant Re c.  On-spectrum Im c = 0 and the residual
/// vanishes; off-spectrum it equals a |Im c|, so it detects off-shell eps.
inline double schrodinger_residual(const EigenfunctionContext& ctx, const MomentumGrid& grid) {
  detail::require_matching_grid(ctx.params, grid);
  if (!(ctx.params.beta > 0.0))
    throw std::invalid_argument("schrodinger_residual: requires beta > 0");
  const double a = ctx.params.alpha, b = ctx.params.beta, eps = ctx.level.epsilon;
  const auto samples = sample_eigenfunction(ctx, grid);
  const auto F = cumulative_integral_samples(samples.abscissae, samples.values, -grid.half_width());
  const double c_re = ctx.c.real();
  const complex i_unit(0.0, 1.0);
  double sup = 0.0;
  for (std::size_t k = 0; k < samples.abscissae.size(); ++k) {
    const double t = std::tan(std::sqrt(b) * samples.abscissae[k]);
    const complex r =
        -(t * t / b) * samples.values[k] - i_unit * a * F[k] + a * c_re - eps * samples.values[k];
    sup = std::max(sup, std::abs(r));
  }
  return sup;
}

/// Sup residual of the first-order ODE phi' + b (2 sec^2 u tan u / sqrt(b)
/// + i a)/(tan^2 u + b e) phi = 0 at interior nodes (|p| <= 0.9 half-width),
/// with phi' from Richardson central differences.  The step follows the local
/// phase rate |theta'| = a b/(tan^2 u + b e), which peaks at a/e.
inline double ode_residual(const EigenfunctionContext& ctx, const MomentumGrid& grid) {
  detail::require_matching_grid(ctx.params, grid);
  const double a = ctx.params.alpha, b = ctx.params.beta, eps = ctx.level.epsilon;
  const double half = grid.half_width();
  const double sb = std::sqrt(b);
  double sup = 0.0;
  for (double p : grid.nodes) {
    if (std::abs(p) > 0.9 * half) continue;
    const double h = 0.05 * std::min({half - std::abs(p), eps / a, half});
    const complex dphi = derivative([&](double q) { return eval_phi(ctx, q); }, p, h).value;
    const double t = std::tan(sb * p);
    const double sec2 = 1.0 + t * t;
    const complex coeff = b * complex(2.0 * sec2 * t / sb, a) / (t * t + b * eps);
    sup = std::max(sup, std::abs(dphi + coeff * eval_phi(ctx, p)));
  }
  return sup;
}

struct InverseXReport {
  double x_invx_residual;   ///< sup |X (1/X) phi - phi|
  double invx_x_residual;   ///< sup |(1/X) X phi - phi - c|
  double commutator_residual;  ///< sup |[X, 1/X] phi + c|
};

/// Checks the operator identities of X = i d/dp and (1/X)phi = -i int phi + c
/// on a sampled function, using local-polynomial differentiation and the
/// running integral on the node set.  Assumes phi is in the domain of X
/// (vanishes at the interval ends).
inline InverseXReport inverse_X_identities(const SampledWaveFunction& phi, complex c,
                                           const MomentumGrid& grid) {
  if (phi.abscissae.size() != grid.node_count() ||
      !std::equal(phi.abscissae.begin(), phi.abscissae.end(), grid.nodes.begin()))
    throw std::invalid_argument("inverse_X_identities: samples are not on the given grid");
  if (grid.node_count() < 8)
    throw std::invalid_argument("grid too coarse for differentiation");

  const complex i_unit(0.0, 1.0);
  const double lo = -grid.half_width();
  const std::size_t n = grid.node_count();

  // (1/X) phi, then X applied to it
  const auto F = cumulative_integral_samples(phi.abscissae, phi.values, lo);
  std::vector<complex> invx(n);
  for (std::size_t k = 0; k < n; ++k) invx[k] = -i_unit * F[k] + c;
  const auto d_invx = derivative_samples(phi.abscissae, invx);

  // X phi, then (1/X) applied to it
  const auto dphi = derivative_samples(phi.abscissae, phi.values);
  std::vector<complex> xphi(n);
  for (std::size_t k = 0; k < n; ++k) xphi[k] = i_unit * dphi[k];
  const auto G = cumulative_integral_samples(phi.abscissae, xphi, lo);

  InverseXReport rep{0.0, 0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    const complex x_invx = i_unit * d_invx[k];
    const complex invx_x = -i_unit * G[k] + c;
    rep.x_invx_residual = std::max(rep.x_invx_residual, std::abs(x_invx - phi.values[k]));
    rep.invx_x_residual = std::max(rep.invx_x_residual, std::abs(invx_x - phi.values[k] - c));
    rep.commutator_residual = std::max(rep.commutator_residual, std::abs(x_invx - invx_x + c));
  }
  return rep;
}

/// |(XP - PX) f(p) - i (1 + b P^2) f(p)| with X = i d/dp numeric and P the
/// tan-representation multiplication operator (P = p at beta = 0).
template <class F>
double commutator_check(const ModelParams& params, F&& testfn, double p) {
  const double b = params.beta;
  detail::require_interior(params, p);
  auto P = [&](double q) { return b > 0.0 ? std::tan(std::sqrt(b) * q) / std::sqrt(b) : q; };
  double h;
  if (b > 0.0) {
    const double half = interval_half_width(params);
    h = std::min(0.01 * half, (half - std::abs(p)) / 8.0);
  } else {
    h = 0.01 * std::max(1.0, std::abs(p));
  }
  const complex i_unit(0.0, 1.0);
  const complex d_pf = derivative([&](double q) { return complex(testfn(q)) * P(q); }, p, h).value;
  const complex d_f = derivative([&](double q) { return complex(testfn(q)); }, p, h).value;
  const complex lhs = i_unit * d_pf - P(p) * (i_unit * d_f);
  const complex rhs = i_unit * (1.0 + b * P(p) * P(p)) * complex(testfn(p));
  return std::abs(lhs - rhs);
}

}  // namespace gupatom
