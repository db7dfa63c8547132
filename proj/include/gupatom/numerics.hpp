#pragma once

// Quadrature, cumulative integration, bracketed root finding and
// finite-difference utilities shared by the physics modules.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <type_traits>
#include <utility>

#include "gupatom/model.hpp"

namespace gupatom {

struct QuadratureSpec {
  enum class Scheme { gauss_legendre, tanh_sinh };

  Scheme scheme = Scheme::gauss_legendre;
  int node_count = 2048;   ///< even, >= 64
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_doublings = 6;

  void validate() const {
    if (node_count < 64 || node_count % 2 != 0)
      throw std::invalid_argument("QuadratureSpec: node_count must be even and >= 64");
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
      throw std::invalid_argument("QuadratureSpec: tolerances must be > 0");
    if (max_doublings < 1)
      throw std::invalid_argument("QuadratureSpec: max_doublings must be >= 1");
  }
};

struct RootBracket {
  double lo, hi;
  double f_lo, f_hi;

  RootBracket(double lo_, double hi_, double f_lo_, double f_hi_)
      : lo(lo_), hi(hi_), f_lo(f_lo_), f_hi(f_hi_) {
    if (!(lo < hi)) throw std::invalid_argument("RootBracket: requires lo < hi");
    if (!(f_lo * f_hi < 0.0))
      throw std::invalid_argument("RootBracket: f(lo) and f(hi) must have opposite signs");
  }
};

struct RootResult {
  double root;
  double bracket_lo, bracket_hi;  ///< final bracket, images straddle zero
  double f_lo, f_hi;
  int evaluations;
};

/// Quadrature failed to stabilize under node doubling; carries both estimates.
struct ConvergenceError : std::runtime_error {
  complex estimate_coarse;
  complex estimate_fine;
  ConvergenceError(const std::string& msg, complex coarse, complex fine)
      : std::runtime_error(msg), estimate_coarse(coarse), estimate_fine(fine) {}
};

namespace detail {

struct Rule {
  std::vector<double> x;  // nodes on (-1, 1)
  std::vector<double> w;
};

// Newton iteration on Legendre P_n roots; half computed, mirrored.
inline Rule build_gauss_legendre(int n) {
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    // one clean-up step so the weight uses the converged node
    {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
    }
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    r.x[i] = -z;
    r.x[n - 1 - i] = z;
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  return r;
}

inline const Rule& gauss_legendre_rule(int n) {
  static std::mutex mu;
  static std::map<int, Rule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_gauss_legendre(n)).first;
  return it->second;
}

// Truncated tanh-sinh rule on (-1, 1).  t_max keeps 1 - |x| representable.
inline Rule build_tanh_sinh(int n) {
  Rule r;
  const double t_max = 2.8;
  const int half = n / 2;
  const double h = t_max / half;
  r.x.reserve(2 * half + 1);
  r.w.reserve(2 * half + 1);
  for (int k = -half; k <= half; ++k) {
    const double t = k * h;
    const double s = (kPi / 2.0) * std::sinh(t);
    const double x = std::tanh(s);
    const double w = h * (kPi / 2.0) * std::cosh(t) / (std::cosh(s) * std::cosh(s));
    r.x.push_back(x);
    r.w.push_back(w);
  }
  return r;
}

inline const Rule& tanh_sinh_rule(int n) {
  static std::mutex mu;
  static std::map<int, Rule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_tanh_sinh(n)).first;
  return it->second;
}

template <class F>
auto apply_rule(F&& f, double lo, double hi, const Rule& r) {
  using R = std::invoke_result_t<F&, double>;
  const double c = 0.5 * (lo + hi);
  const double s = 0.5 * (hi - lo);
  R acc{};
  for (std::size_t i = 0; i < r.x.size(); ++i) acc += r.w[i] * f(c + s * r.x[i]);
  return acc * s;
}

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const complex& v) { return std::abs(v); }

}  // namespace detail

/// Quadrature of f over (lo, hi) with node-count doubling until two successive
/// estimates agree within max(abs_tol, rel_tol*|result|).  Infinite bounds are
/// mapped to a finite interval by p = tan(u).  Endpoints are never evaluated.
template <class F>
auto integrate(F&& f, double lo, double hi, const QuadratureSpec& spec = {})
    -> std::invoke_result_t<F&, double> {
  using R = std::invoke_result_t<F&, double>;
  spec.validate();

  const bool lo_inf = std::isinf(lo), hi_inf = std::isinf(hi);
  if (lo_inf || hi_inf) {
    if (lo_inf && hi_inf) {
      auto g = [&f](double u) {
        const double cu = std::cos(u);
        return f(std::tan(u)) / (cu * cu);
      };
      return integrate(g, -kPi / 2.0, kPi / 2.0, spec);
    }
    if (hi_inf) {
      auto g = [&f, lo](double u) {
        const double cu = std::cos(u);
        return f(lo + std::tan(u)) / (cu * cu);
      };
      return integrate(g, 0.0, kPi / 2.0, spec);
    }
    auto g = [&f, hi](double u) {
      const double cu = std::cos(u);
      return f(hi - std::tan(u)) / (cu * cu);
    };
    return integrate(g, 0.0, kPi / 2.0, spec);
  }

  if (!(lo < hi)) throw std::invalid_argument("integrate: requires lo < hi");

  const auto& rule_for = (spec.scheme == QuadratureSpec::Scheme::gauss_legendre)
                             ? detail::gauss_legendre_rule
                             : detail::tanh_sinh_rule;
  int n = spec.node_count;
  R prev = detail::apply_rule(f, lo, hi, rule_for(n));
  for (int d = 0; d < spec.max_doublings; ++d) {
    n *= 2;
    const R cur = detail::apply_rule(f, lo, hi, rule_for(n));
    const double err = detail::magnitude(cur - prev);
    if (err <= std::max(spec.abs_tol, spec.rel_tol * detail::magnitude(cur))) return cur;
    if (d + 1 == spec.max_doublings)
      throw ConvergenceError("integrate: node doubling did not converge", complex(prev), complex(cur));
    prev = cur;
  }
  return prev;  // unreachable
}

/// Guaranteed-convergent hybrid bisection/secant search on a valid bracket.
/// Terminates when the bracket width is <= abs_tol (or f hits zero exactly).
template <class F>
RootResult find_root_detailed(F&& f, RootBracket bracket, double abs_tol = 1e-12) {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("find_root: abs_tol must be > 0");
  double a = bracket.lo, b = bracket.hi;
  double fa = bracket.f_lo, fb = bracket.f_hi;
  if (fa == 0.0) return {a, a, b, fa, fb, 0};
  if (fb == 0.0) return {b, a, b, fa, fb, 0};

  int evals = 0;
  double w_prev = b - a, w_prev2 = b - a;  // widths one and two iterations ago
  for (int it = 0; it < 200; ++it) {
    const double width = b - a;
    if (width <= abs_tol) break;

    double x;
    // secant through the bracket ends; bisect whenever the bracket has not
    // at least halved over the last two iterations (guarantees convergence)
    const double denom = fb - fa;
    const bool force_bisect = (width > 0.5 * w_prev2);
    if (!force_bisect && denom != 0.0) {
      x = b - fb * (b - a) / denom;
      const double margin = 0.01 * width;
      if (!(x > a + margin && x < b - margin)) x = a + 0.5 * width;
    } else {
      x = a + 0.5 * width;
    }

    const double fx = f(x);
    ++evals;
    if (fx == 0.0) return {x, a, b, fa, fb, evals};
    if (fa * fx < 0.0) {
      b = x;
      fb = fx;
    } else {
      a = x;
      fa = fx;
    }
    w_prev2 = w_prev;
    w_prev = width;
  }
  const double root = (std::abs(fa) <= std::abs(fb)) ? a : b;
  return {root, a, b, fa, fb, evals};
}

template <class F>
double find_root(F&& f, const RootBracket& bracket, double abs_tol = 1e-12) {
  return find_root_detailed(std::forward<F>(f), bracket, abs_tol).root;
}

struct DerivativeResult {
  complex value;
  double error_estimate;
};

/// Central difference with two Richardson refinements (order 6).
template <class F>
DerivativeResult derivative(F&& f, double x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("derivative: h must be > 0");
  auto central = [&](double hh) -> complex {
    return (complex(f(x + hh)) - complex(f(x - hh))) / (2.0 * hh);
  };
  const complex d1 = central(h);
  const complex d2 = central(h / 2.0);
  const complex d3 = central(h / 4.0);
  const complex r1 = (4.0 * d2 - d1) / 3.0;
  const complex r2 = (4.0 * d3 - d2) / 3.0;
  const complex value = (16.0 * r2 - r1) / 15.0;
  const double err = std::abs(value - r2) + std::numeric_limits<double>::epsilon() * std::abs(value);
  return {value, err};
}

namespace detail {

// Value of the Lagrange interpolant through (xs[j0..j0+m-1], fs[...]) at t.
inline complex lagrange_eval(const std::vector<double>& xs, const std::vector<complex>& fs,
                             std::size_t j0, std::size_t m, double t) {
  complex acc{0.0, 0.0};
  for (std::size_t j = 0; j < m; ++j) {
    double basis = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == j) continue;
      basis *= (t - xs[j0 + i]) / (xs[j0 + j] - xs[j0 + i]);
    }
    acc += basis * fs[j0 + j];
  }
  return acc;
}

// d/dt of the Lagrange interpolant at t.
inline complex lagrange_derivative(const std::vector<double>& xs, const std::vector<complex>& fs,
                                   std::size_t j0, std::size_t m, double t) {
  complex acc{0.0, 0.0};
  for (std::size_t j = 0; j < m; ++j) {
    double dbasis = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == j) continue;
      double term = 1.0 / (xs[j0 + j] - xs[j0 + i]);
      for (std::size_t k = 0; k < m; ++k) {
        if (k == j || k == i) continue;
        term *= (t - xs[j0 + k]) / (xs[j0 + j] - xs[j0 + k]);
      }
      dbasis += term;
    }
    acc += dbasis * fs[j0 + j];
  }
  return acc;
}

}  // namespace detail

/// Running integral F(x_k) = int from `lower_endpoint` to x_k of the sampled
/// function, by locally integrating degree-5 interpolants segment by segment
/// (the endpoint segment uses the same rule on the first stencil).
inline std::vector<complex> cumulative_integral_samples(const std::vector<double>& xs,
                                                        const std::vector<complex>& fs,
                                                        double lower_endpoint) {
  if (xs.size() != fs.size())
    throw std::invalid_argument("cumulative_integral: size mismatch");
  if (xs.size() < 2)
    throw std::invalid_argument("cumulative_integral: need at least 2 nodes");
  if (!(lower_endpoint <= xs.front()))
    throw std::invalid_argument("cumulative_integral: lower endpoint must be <= first node");

  const std::size_t n = xs.size();
  const std::size_t m = std::min<std::size_t>(6, n);
  // 6-point Gauss rule for the segment integrals of the interpolant
  static const double gx[6] = {-0.9324695142031521, -0.6612093864662645, -0.2386191860831969,
                               0.2386191860831969,  0.6612093864662645,  0.9324695142031521};
  static const double gw[6] = {0.1713244923791704, 0.3607615730481386, 0.4679139345726910,
                               0.4679139345726910, 0.3607615730481386, 0.1713244923791704};

  auto segment = [&](double a, double b, std::size_t j0) {
    const double c = 0.5 * (a + b), s = 0.5 * (b - a);
    complex acc{0.0, 0.0};
    for (int q = 0; q < 6; ++q)
      acc += gw[q] * detail::lagrange_eval(xs, fs, j0, m, c + s * gx[q]);
    return acc * s;
  };

  std::vector<complex> F(n);
  F[0] = segment(lower_endpoint, xs[0], 0);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::size_t j0 =
        std::min(n - m, static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(k) - 2)));
    F[k + 1] = F[k] + segment(xs[k], xs[k + 1], j0);
  }
  return F;
}

/// Spec-level wrapper: samples on a momentum grid, integrated from the lower
/// interval endpoint -pi/(2 sqrt(beta)).
inline SampledWaveFunction cumulative_integral(const SampledWaveFunction& samples,
                                               double lower_endpoint) {
  auto F = cumulative_integral_samples(samples.abscissae, samples.values, lower_endpoint);
  SampledWaveFunction out(samples.abscissa_kind, samples.abscissae, std::move(F));
  out.level = samples.level;
  out.normalization_A = samples.normalization_A;
  out.constant_c = samples.constant_c;
  return out;
}

/// Derivative of sampled data at every node via 7-point local Lagrange
/// stencils (one-sided near the ends).
inline std::vector<complex> derivative_samples(const std::vector<double>& xs,
                                               const std::vector<complex>& fs) {
  if (xs.size() != fs.size())
    throw std::invalid_argument("derivative_samples: size mismatch");
  if (xs.size() < 7)
    throw std::invalid_argument("grid too coarse for differentiation (need >= 7 nodes)");
  const std::size_t n = xs.size();
  const std::size_t m = 7;
  std::vector<complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j0 =
        std::min(n - m, static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(k) - 3)));
    out[k] = detail::lagrange_derivative(xs, fs, j0, m, xs[k]);
  }
  return out;
}

/// Plain Gauss-Legendre momentum grid on the open interval.
inline MomentumGrid make_momentum_grid(double beta, int node_count = 2048) {
  if (!(beta > 0.0)) throw std::invalid_argument("make_momentum_grid: beta must be > 0");
  if (node_count < 2 || node_count % 2 != 0)
    throw std::invalid_argument("make_momentum_grid: node_count must be even and >= 2");
  const auto& r = detail::gauss_legendre_rule(node_count);
  const double half = kPi / (2.0 * std::sqrt(beta));
  std::vector<double> nodes(r.x.size()), weights(r.w.size());
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    nodes[i] = half * r.x[i];
    weights[i] = half * r.w[i];
  }
  return MomentumGrid(beta, std::move(nodes), std::move(weights));
}

/// Grid adapted to a bound eigenstate: substitution tan(sqrt(b)p) =
/// sqrt(b*eps) tan(v) with Gauss-Legendre nodes in v.  In v, the eigenstate
/// modulus is A cos^2(v) and its phase is linear, so both the density peak
/// and the phase oscillation are resolved at any beta*eps.  Weights are
/// rescaled to sum exactly to the interval length.
inline MomentumGrid make_adapted_grid(double beta, double epsilon, int node_count = 2048) {
  if (!(beta > 0.0) || !(epsilon > 0.0))
    throw std::invalid_argument("make_adapted_grid: beta and epsilon must be > 0");
  if (node_count < 2 || node_count % 2 != 0)
    throw std::invalid_argument("make_adapted_grid: node_count must be even and >= 2");
  const auto& r = detail::gauss_legendre_rule(node_count);
  const double sb = std::sqrt(beta);
  const double k = std::sqrt(beta * epsilon);
  std::vector<double> nodes(r.x.size()), weights(r.w.size());
  double wsum = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    const double v = (kPi / 2.0) * r.x[i];
    const double cv = std::cos(v), sv = std::sin(v);
    nodes[i] = std::atan2(k * sv, cv) / sb;
    weights[i] = (kPi / 2.0) * r.w[i] * (k / sb) / (cv * cv + k * k * sv * sv);
    wsum += weights[i];
  }
  const double scale = (kPi / sb) / wsum;
  for (auto& w : weights) w *= scale;
  return MomentumGrid(beta, std::move(nodes), std::move(weights));
}

}  // namespace gupatom
