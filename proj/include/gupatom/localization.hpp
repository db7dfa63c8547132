#pragma once

// Maximal-localization states, their overlap, and the quasiposition
// transform psi(xi) = N int cos(sqrt(b)p) e^{ip xi} phi(p) dp.

#include <cmath>

#include "gupatom/model.hpp"
#include "gupatom/numerics.hpp"
#include "gupatom/wavefunction.hpp"

namespace gupatom {

/// Maximal localization state at quasiposition xi:
/// N cos(sqrt(b)p) e^{-ip xi}, N = sqrt(2 sqrt(b)/pi).  This is the critical
/// profile (Delta P = 1/sqrt(b), <P> = 0) that saturates Delta X = sqrt(b).
struct MLState {
  ModelParams params;
  double xi;
  double normalization_N;

  MLState(const ModelParams& params_, double xi_) : params(params_), xi(xi_), normalization_N(0.0) {
    if (!(params.beta > 0.0)) throw std::invalid_argument("MLState: requires beta > 0");
    normalization_N = std::sqrt(2.0 * std::sqrt(params.beta) / kPi);
  }
};

inline complex ml_eval(const MLState& state, double p) {
  detail::require_interior(state.params, p);
  const double sb = std::sqrt(state.params.beta);
  return state.normalization_N * std::cos(sb * p) * std::polar(1.0, -p * state.xi);
}

// d/dp of the ML profile, used by the moment quadratures.
inline complex ml_eval_derivative(const MLState& state, double p) {
  const double sb = std::sqrt(state.params.beta);
  const complex e = std::polar(1.0, -p * state.xi);
  return state.normalization_N * e *
         complex(-sb * std::sin(sb * p), -state.xi * std::cos(sb * p));
}

/// (<X>, Delta X) from quadratures of phi* (i dphi/dp) and |dphi/dp|^2.
/// Returns (xi, sqrt(beta)) for a maximal localization state.
inline std::pair<double, double> ml_moments(const MLState& state) {
  const double half = interval_half_width(state.params);
  const complex i_unit(0.0, 1.0);
  const complex mean = integrate(
      [&](double p) { return std::conj(ml_eval(state, p)) * (i_unit * ml_eval_derivative(state, p)); },
      -half, half);
  const double x2 = integrate([&](double p) { return std::norm(ml_eval_derivative(state, p)); },
                              -half, half);
  const double mean_x = mean.real();
  const double var = std::max(0.0, x2 - mean_x * mean_x);
  return {mean_x, std::sqrt(var)};
}

/// Overlap of two maximal localization states, a function of d = xi - xi':
/// (8 b^{3/2}/pi) sin(pi d/(2 sqrt(b))) / (4 b d - d^3); 1 at d = 0 and 1/2
/// at d = +-2 sqrt(b) (removable singularities handled by series within
/// 1e-4 sqrt(b) of each point).
inline double ml_overlap(const ModelParams& params, double xi, double xi_prime) {
  if (!(params.beta > 0.0)) throw std::invalid_argument("ml_overlap: requires beta > 0");
  const double b = params.beta;
  const double sb = std::sqrt(b);
  const double L = kPi / (2.0 * sb);
  const double N2 = 2.0 * sb / kPi;
  const double d = std::abs(xi - xi_prime);  // even in d
  const double guard = 1e-4 * sb;

  auto sinc = [](double s) {  // sin(s)/s by series near 0
    const double s2 = s * s;
    return 1.0 - s2 / 6.0 + s2 * s2 / 120.0 - s2 * s2 * s2 / 5040.0;
  };

  if (d < guard) {
    // N^2 L sinc(L d) * 4b/(4b - d^2)
    return N2 * L * sinc(L * d) * 4.0 * b / (4.0 * b - d * d);
  }
  if (std::abs(d - 2.0 * sb) < guard) {
    // with s = d - 2 sqrt(b):  N^2 4b L sinc(L s) / (d (2 sqrt(b) + d))
    const double s = d - 2.0 * sb;
    return N2 * 4.0 * b * L * sinc(L * s) / (d * (2.0 * sb + d));
  }
  return N2 * 4.0 * b * std::sin(L * d) / (d * (4.0 * b - d * d));
}

/// psi(xi) for an arbitrary sampled momentum-space state.
inline complex quasiposition_transform(const SampledWaveFunction& phi, double xi,
                                       const MomentumGrid& grid) {
  if (phi.abscissae.size() != grid.node_count())
    throw std::invalid_argument("quasiposition_transform: samples are not on the grid");
  const double sb = std::sqrt(grid.beta);
  const double N = std::sqrt(2.0 * sb / kPi);
  complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < grid.node_count(); ++k) {
    const double p = grid.nodes[k];
    acc += grid.weights[k] * std::cos(sb * p) * std::polar(1.0, p * xi) * phi.values[k];
  }
  return N * acc;
}

/// psi(xi) for an eigenfunction.
inline complex quasiposition_transform(const EigenfunctionContext& ctx, double xi,
                                       const MomentumGrid& grid) {
  detail::require_matching_grid(ctx.params, grid);
  return quasiposition_transform(sample_eigenfunction(ctx, grid), xi, grid);
}

/// Default abscissa sampling for transforms: 513 uniform points across
/// several undeformed Bohr radii, |xi| <= 20 n^2 / alpha.
inline std::vector<double> default_transform_abscissae(const ModelParams& params, int n,
                                                       int count = 513) {
  const double range = 20.0 * double(n) * double(n) / params.alpha;
  std::vector<double> xs(count);
  for (int i = 0; i < count; ++i) xs[i] = -range + 2.0 * range * double(i) / double(count - 1);
  return xs;
}

/// Sampled psi(xi) profile on the given abscissae.
inline SampledWaveFunction quasiposition_profile(const EigenfunctionContext& ctx,
                                                 const std::vector<double>& xis,
                                                 const MomentumGrid& grid) {
  detail::require_matching_grid(ctx.params, grid);
  const auto phi = sample_eigenfunction(ctx, grid);
  std::vector<complex> vals(xis.size());
  for (std::size_t i = 0; i < xis.size(); ++i)
    vals[i] = quasiposition_transform(phi, xis[i], grid);
  SampledWaveFunction out(SampledWaveFunction::Kind::quasiposition_xi, xis, std::move(vals));
  out.level = ctx.level;
  out.normalization_A = ctx.A;
  out.constant_c = ctx.c;
  return out;
}

}  // namespace gupatom
