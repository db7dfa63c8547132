#pragma once

// Formal position eigenfunctions and the coordinate-space transform
// eta(x) = sqrt(sqrt(b)/pi) int e^{ipx} phi(p) dp.  eta is an intermediate
// (non-physical) solution: position eigenstates violate the minimal
// uncertainty, but eta satisfies the Dirichlet condition eta(0) = 0
// on-spectrum, unlike the quasiposition profile.

#include <cmath>

#include "gupatom/localization.hpp"
#include "gupatom/model.hpp"
#include "gupatom/wavefunction.hpp"

namespace gupatom {

/// u_x(p) = sqrt(sqrt(b)/pi) e^{-ipx}.
inline complex position_eigenfunction(const ModelParams& params, double x, double p) {
  if (!(params.beta > 0.0)) throw std::invalid_argument("position_eigenfunction: requires beta > 0");
  detail::require_interior(params, p);
  return std::sqrt(std::sqrt(params.beta) / kPi) * std::polar(1.0, -p * x);
}

/// eta(x) for an arbitrary sampled momentum-space state.
inline complex coordinate_transform(const SampledWaveFunction& phi, double x,
                                    const MomentumGrid& grid) {
  if (phi.abscissae.size() != grid.node_count())
    throw std::invalid_argument("coordinate_transform: samples are not on the grid");
  complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < grid.node_count(); ++k)
    acc += grid.weights[k] * std::polar(1.0, grid.nodes[k] * x) * phi.values[k];
  return std::sqrt(std::sqrt(grid.beta) / kPi) * acc;
}

inline complex coordinate_transform(const EigenfunctionContext& ctx, double x,
                                    const MomentumGrid& grid) {
  detail::require_matching_grid(ctx.params, grid);
  return coordinate_transform(sample_eigenfunction(ctx, grid), x, grid);
}

/// Sampled eta(x) profile.
inline SampledWaveFunction coordinate_profile(const EigenfunctionContext& ctx,
                                              const std::vector<double>& xs,
                                              const MomentumGrid& grid) {
  detail::require_matching_grid(ctx.params, grid);
  const auto phi = sample_eigenfunction(ctx, grid);
  std::vector<complex> vals(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) vals[i] = coordinate_transform(phi, xs[i], grid);
  SampledWaveFunction out(SampledWaveFunction::Kind::coordinate_x, xs, std::move(vals));
  out.level = ctx.level;
  out.normalization_A = ctx.A;
  out.constant_c = ctx.c;
  return out;
}

/// |eta(0)| / max_x |eta(x)| on the default x-sampling (same abscissae as the
/// quasiposition profile, so the two are directly comparable).  < 1e-6 for
/// quantized levels.
inline double dirichlet_check(const EigenfunctionContext& ctx, const MomentumGrid& grid) {
  detail::require_matching_grid(ctx.params, grid);
  const auto xs = default_transform_abscissae(ctx.params, ctx.level.n);
  const auto phi = sample_eigenfunction(ctx, grid);
  double peak = 0.0;
  for (double x : xs) peak = std::max(peak, std::abs(coordinate_transform(phi, x, grid)));
  const double origin = std::abs(coordinate_transform(phi, 0.0, grid));
  return origin / peak;
}

}  // namespace gupatom
