#pragma once

// Shared parameter and result types for the minimal-length (GUP) 1D Coulomb
// problem in the tan-representation:  X = i d/dp,  P = tan(sqrt(b)p)/sqrt(b),
// momentum restricted to |p| < pi/(2 sqrt(b)).  Units: hbar = 1, 2m = 1.

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gupatom {

using complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

enum class Method { closed_form, root_found, semiclassical, single_valued, perturbative };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::closed_form:   return "closed_form";
    case Method::root_found:    return "root_found";
    case Method::semiclassical: return "semiclassical";
    case Method::single_valued: return "single_valued";
    case Method::perturbative:  return "perturbative";
  }
  return "unknown";
}

inline Method method_from_name(const std::string& s) {
  for (Method m : {Method::closed_form, Method::root_found, Method::semiclassical,
                   Method::single_valued, Method::perturbative}) {
    if (s == method_name(m)) return m;
  }
  throw std::invalid_argument("unknown method name: " + s);
}

/// Physical couplings.  beta = 0 selects ordinary (undeformed) quantum
/// mechanics and is handled by dedicated limit paths, never by 0/0 evaluation.
struct ModelParams {
  double alpha;  ///< Coulomb coupling, > 0
  double beta;   ///< deformation parameter, >= 0, dimension 1/momentum^2

  ModelParams(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
    if (!(std::isfinite(alpha) && alpha > 0.0))
      throw std::invalid_argument("ModelParams: alpha must be finite and > 0");
    if (!(std::isfinite(beta) && beta >= 0.0))
      throw std::invalid_argument("ModelParams: beta must be finite and >= 0");
  }
};

/// Bound level: E = -epsilon with epsilon > 0.
struct EnergyLevel {
  int n;           ///< quantum number, >= 1
  double epsilon;  ///< binding, > 0
  double energy;   ///< -epsilon
  Method method;

  EnergyLevel(int n_, double epsilon_, Method method_)
      : n(n_), epsilon(epsilon_), energy(-epsilon_), method(method_) {
    if (n < 1) throw std::invalid_argument("EnergyLevel: n must be >= 1");
    if (!(std::isfinite(epsilon) && epsilon > 0.0))
      throw std::invalid_argument("EnergyLevel: epsilon must be finite and > 0 (bound states only)");
  }
};

/// Half-width of the momentum domain, pi/(2 sqrt(beta)).
inline double interval_half_width(const ModelParams& params) {
  if (params.beta == 0.0)
    throw std::invalid_argument("undeformed limit has unbounded momentum domain");
  return kPi / (2.0 * std::sqrt(params.beta));
}

/// Quadrature nodes/weights strictly inside (-pi/(2 sqrt(b)), +pi/(2 sqrt(b))),
/// symmetric about p = 0.  Factories live in numerics.hpp.
struct MomentumGrid {
  double beta;
  std::vector<double> nodes;
  std::vector<double> weights;

  MomentumGrid(double beta_, std::vector<double> nodes_, std::vector<double> weights_)
      : beta(beta_), nodes(std::move(nodes_)), weights(std::move(weights_)) {
    if (!(beta > 0.0)) throw std::invalid_argument("MomentumGrid: beta must be > 0");
    if (nodes.size() != weights.size() || nodes.size() < 2)
      throw std::invalid_argument("MomentumGrid: need matching nodes/weights, >= 2");
    const double half = half_width();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (!(std::abs(nodes[i]) < half))
        throw std::invalid_argument("MomentumGrid: node outside the open momentum interval");
      if (!(weights[i] > 0.0))
        throw std::invalid_argument("MomentumGrid: weights must be positive");
      if (i > 0 && !(nodes[i] > nodes[i - 1]))
        throw std::invalid_argument("MomentumGrid: nodes must be strictly increasing");
    }
  }

  std::size_t node_count() const { return nodes.size(); }
  double half_width() const { return kPi / (2.0 * std::sqrt(beta)); }

  /// Grid-weighted quadrature of sampled values.
  template <class T>
  T sum(const std::vector<T>& values) const {
    if (values.size() != nodes.size())
      throw std::invalid_argument("MomentumGrid::sum: size mismatch");
    T acc{};
    for (std::size_t i = 0; i < values.size(); ++i) acc += weights[i] * values[i];
    return acc;
  }
};

/// Complex samples of phi(p), psi(xi) or eta(x) on an increasing abscissa set.
struct SampledWaveFunction {
  enum class Kind { momentum_p, quasiposition_xi, coordinate_x };

  Kind abscissa_kind;
  std::vector<double> abscissae;
  std::vector<complex> values;
  std::optional<EnergyLevel> level;
  double normalization_A = 0.0;  ///< 0 when not applicable
  complex constant_c{0.0, 0.0};

  SampledWaveFunction(Kind kind, std::vector<double> abscissae_, std::vector<complex> values_)
      : abscissa_kind(kind), abscissae(std::move(abscissae_)), values(std::move(values_)) {
    if (abscissae.size() != values.size())
      throw std::invalid_argument("SampledWaveFunction: abscissae/values size mismatch");
    for (std::size_t i = 1; i < abscissae.size(); ++i)
      if (!(abscissae[i] > abscissae[i - 1]))
        throw std::invalid_argument("SampledWaveFunction: abscissae must be strictly increasing");
  }
};

namespace detail {

inline void require_interior(const ModelParams& params, double p) {
  if (params.beta == 0.0) return;  // unbounded momentum domain
  if (!(std::abs(p) < interval_half_width(params)))
    throw std::invalid_argument("momentum outside the open interval (-pi/2 sqrt(b), +pi/2 sqrt(b))");
}

inline void require_matching_grid(const ModelParams& params, const MomentumGrid& grid) {
  if (grid.beta != params.beta)
    throw std::invalid_argument("grid beta does not match the model parameters");
}

}  // namespace detail

/// Ordered spectrum for export/comparison.
struct SpectrumTable {
  ModelParams params;
  Method produced_by;
  std::vector<EnergyLevel> levels;  ///< sorted by n, unique n
  double tol_spectrum = 1e-10;
  double tol_quadrature = 1e-12;

  void validate() const {
    for (std::size_t i = 1; i < levels.size(); ++i)
      if (levels[i].n <= levels[i - 1].n)
        throw std::invalid_argument("SpectrumTable: levels must be sorted by n with no duplicates");
  }
};

}  // namespace gupatom
