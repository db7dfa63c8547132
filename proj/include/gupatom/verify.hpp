#pragma once

// The full verification suite: one check per acceptance-grade invariant of
// the model (spectrum route equivalence, Hermiticity characterization,
// eigenfunction consistency, operator identities, localization moments,
// boundary behavior, divergence mechanism, single-valuedness emergence,
// WKB phase equation, serialization stability).  Shared by the CLI `verify`
// command and the acceptance test binary.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "gupatom/coordinate.hpp"
#include "gupatom/io.hpp"
#include "gupatom/localization.hpp"
#include "gupatom/model.hpp"
#include "gupatom/numerics.hpp"
#include "gupatom/semiclassical.hpp"
#include "gupatom/spectrum.hpp"
#include "gupatom/wavefunction.hpp"

namespace gupatom {

struct CheckResult {
  int id;
  std::string name;
  bool passed;
  double measured;   ///< binding (worst-case) measured quantity
  double threshold;  ///< its limit
  bool pass_below;   ///< true: measured must be < threshold; false: > threshold
  std::string note;
};

struct AcceptanceConfig {
  std::vector<double> alphas{0.5, 1.0, 2.0};
  std::vector<double> betas{1e-4, 1e-2, 0.1};
  int n_min = 1;
  int n_max = 10;
  int grid_points = 2048;
};

namespace detail {

inline std::string case_tag(double alpha, double beta, int n) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "alpha=%g beta=%g n=%d", alpha, beta, n);
  return buf;
}

struct WorstBelow {
  double measured = 0.0;
  std::string note;
  void update(double value, const std::string& tag) {
    if (value > measured || note.empty()) {
      measured = value;
      note = tag;
    }
  }
};

struct WorstAbove {
  double measured = std::numeric_limits<double>::infinity();
  std::string note;
  void update(double value, const std::string& tag) {
    if (value < measured || note.empty()) {
      measured = value;
      note = tag;
    }
  }
};

}  // namespace detail

/// 1. |eps_root - eps_closed|/eps_closed < 1e-10 and
///    |eps_semiclassical - eps_closed|/eps_closed < 1e-8 everywhere.
inline CheckResult check_route_equivalence(const AcceptanceConfig& cfg) {
  detail::WorstBelow root, semi;
  for (double alpha : cfg.alphas)
    for (double beta : cfg.betas)
      for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const ModelParams params(alpha, beta);
        const double ec = energy_closed_form(params, n).epsilon;
        root.update(std::abs(energy_root_found(params, n).epsilon - ec) / ec,
                    detail::case_tag(alpha, beta, n));
        semi.update(std::abs(energy_semiclassical(params, n).epsilon - ec) / ec,
                    detail::case_tag(alpha, beta, n));
      }
  const bool root_worse = root.measured / 1e-10 > semi.measured / 1e-8;
  CheckResult r{1, "spectrum-route-equivalence", root.measured < 1e-10 && semi.measured < 1e-8,
                root_worse ? root.measured : semi.measured, root_worse ? 1e-10 : 1e-8, true, ""};
  char buf[160];
  std::snprintf(buf, sizeof(buf), "root %.2e (%s), semiclassical %.2e (%s)", root.measured,
                root.note.c_str(), semi.measured, semi.note.c_str());
  r.note = buf;
  return r;
}

/// 2. At beta = 0 the spectrum is -alpha^2/(4 n^2) bit-for-bit.
inline CheckResult check_undeformed_limit(const AcceptanceConfig& cfg) {
  double worst = 0.0;
  std::string note = "exact";
  for (double alpha : cfg.alphas)
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      const double got = energy_closed_form(ModelParams(alpha, 0.0), n).energy;
      const double want = -(alpha * alpha / (4.0 * double(n) * double(n)));
      const double diff = std::abs(got - want);
      if (diff > worst) {
        worst = diff;
        note = detail::case_tag(alpha, 0.0, n);
      }
    }
  return {2, "undeformed-limit-exact", worst == 0.0, worst, 0.0, true, note};
}

/// 3. Fitted slope of E_n(b) - E_n(0) against sqrt(b) over b in
///    {1e-8, 1e-9, 1e-10} equals alpha^3/(4 n^3) within 1%.
inline CheckResult check_sqrt_beta_law(const AcceptanceConfig& cfg) {
  detail::WorstBelow worst;
  for (double alpha : cfg.alphas)
    for (int n = 1; n <= 3; ++n) {
      double sxy = 0.0, sxx = 0.0;
      for (double beta : {1e-8, 1e-9, 1e-10}) {
        const double x = std::sqrt(beta);
        const double y = energy_closed_form(ModelParams(alpha, beta), n).energy -
                         energy_closed_form(ModelParams(alpha, 0.0), n).energy;
        sxy += x * y;
        sxx += x * x;
      }
      const double slope = sxy / sxx;
      const double target = alpha * alpha * alpha / (4.0 * double(n) * double(n) * double(n));
      worst.update(std::abs(slope - target) / target, detail::case_tag(alpha, 0.0, n));
    }
  return {3, "sqrt-beta-correction-law", worst.measured < 0.01, worst.measured, 0.01, true,
          worst.note};
}

/// 4. Im c vanishes on-spectrum, exceeds 1e-3 A e/a at spectral midpoints,
///    and changes sign across each level.
inline CheckResult check_hermiticity(const AcceptanceConfig& cfg) {
  detail::WorstBelow on_spectrum;
  detail::WorstAbove midpoint;  // |Im c| / (1e-3 A e/a), must stay > 1
  bool signs_ok = true;
  std::string sign_note;
  for (double alpha : cfg.alphas)
    for (double beta : cfg.betas)
      for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const ModelParams params(alpha, beta);
        const auto ctx = make_context(params, n);
        on_spectrum.update(std::abs(hermiticity_residual(ctx)), detail::case_tag(alpha, beta, n));

        const double lo = hermiticity_residual(make_context_at(params, ctx.level.epsilon * (1.0 - 1e-3), n));
        const double hi = hermiticity_residual(make_context_at(params, ctx.level.epsilon * (1.0 + 1e-3), n));
        if (!(lo * hi < 0.0)) {
          signs_ok = false;
          sign_note = detail::case_tag(alpha, beta, n);
        }

        if (n < cfg.n_max) {
          const double mid = 0.5 * (ctx.level.epsilon +
                                    energy_closed_form(params, n + 1).epsilon);
          const auto mid_ctx = make_context_at(params, mid, n);
          const double floor = 1e-3 * mid_ctx.A * mid / alpha;
          midpoint.update(std::abs(hermiticity_residual(mid_ctx)) / floor,
                          detail::case_tag(alpha, beta, n));
        }
      }
  CheckResult r{4, "hermiticity-characterization",
                on_spectrum.measured < 1e-10 && midpoint.measured > 1.0 && signs_ok,
                on_spectrum.measured, 1e-10, true, ""};
  char buf[200];
  std::snprintf(buf, sizeof(buf), "on-spectrum %.2e (%s); midpoint margin x%.1f; sign change %s%s",
                on_spectrum.measured, on_spectrum.note.c_str(), midpoint.measured,
                signs_ok ? "ok" : "FAILED at ", signs_ok ? "" : sign_note.c_str());
  r.note = buf;
  return r;
}

/// 5. Normalization, vanishing integral, integral-equation residual and
///    first-order ODE residual for every level in the set.
inline CheckResult check_eigenfunction_consistency(const AcceptanceConfig& cfg) {
  detail::WorstBelow norm, integral, schro, ode;
  for (double alpha : cfg.alphas)
    for (double beta : cfg.betas)
      for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const ModelParams params(alpha, beta);
        const auto ctx = make_context(params, n);
        const auto grid = eigenstate_grid(ctx, cfg.grid_points);
        const auto tag = detail::case_tag(alpha, beta, n);
        norm.update(std::abs(norm_squared(ctx, grid) - 1.0), tag);
        integral.update(std::abs(integral_condition(ctx, grid)), tag);
        schro.update(schrodinger_residual(ctx, grid), tag);
        ode.update(ode_residual(ctx, grid), tag);
      }
  const bool pass = norm.measured < 1e-8 && integral.measured < 1e-8 &&
                    schro.measured < 1e-6 && ode.measured < 1e-6;
  CheckResult r{5, "eigenfunction-consistency", pass,
                std::max(norm.measured, integral.measured), 1e-8, true, ""};
  char buf[240];
  std::snprintf(buf, sizeof(buf),
                "|norm-1| %.2e (%s); |int phi| %.2e; schrodinger %.2e (%s); ode %.2e",
                norm.measured, norm.note.c_str(), integral.measured, schro.measured,
                schro.note.c_str(), ode.measured);
  r.note = buf;
  return r;
}

/// 6. X(1/X)phi = phi, (1/X)X phi = phi + c, [X, 1/X]phi = -c on smooth
///    test functions.
inline CheckResult check_inverse_position_identities(const AcceptanceConfig& cfg) {
  detail::WorstBelow worst;
  for (double beta : cfg.betas) {
    const auto grid = make_momentum_grid(beta, 1024);
    const double sb = std::sqrt(beta);
    int which = 0;
    for (auto fn : {+[](double u) { return std::cos(u); },
                    +[](double u) { return std::cos(u) * std::cos(u) * std::cos(u); }}) {
      ++which;
      std::vector<complex> vals(grid.node_count());
      for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = complex(fn(sb * grid.nodes[i]), 0.0);
      SampledWaveFunction s(SampledWaveFunction::Kind::momentum_p, grid.nodes, std::move(vals));
      for (complex c : {complex{0.0, 0.0}, complex{0.3, -0.2}}) {
        const auto rep = inverse_X_identities(s, c, grid);
        char tag[64];
        std::snprintf(tag, sizeof(tag), "beta=%g fn=%d c=(%g,%g)", beta, which, c.real(), c.imag());
        worst.update(rep.x_invx_residual, tag);
        worst.update(rep.invx_x_residual, tag);
        worst.update(rep.commutator_residual, tag);
      }
    }
  }
  return {6, "inverse-position-identities", worst.measured < 1e-6, worst.measured, 1e-6, true,
          worst.note};
}

/// 7. [X, P] f = i (1 + b P^2) f numerically on Gaussian and cosine test
///    functions at 20 interior points.
inline CheckResult check_deformed_commutator(const AcceptanceConfig& cfg) {
  detail::WorstBelow worst;
  for (double beta : cfg.betas) {
    const ModelParams params(1.0, beta);
    const double half = interval_half_width(params);
    const double sigma = half / 3.0;
    for (int i = 0; i < 20; ++i) {
      const double p = -0.85 * half + (1.7 * half) * (i + 0.5) / 20.0;
      const double rg = commutator_check(
          params, [sigma](double q) { return std::exp(-q * q / (2.0 * sigma * sigma)); }, p);
      const double rc = commutator_check(
          params, [beta](double q) { return std::cos(std::sqrt(beta) * q); }, p);
      char tag[48];
      std::snprintf(tag, sizeof(tag), "beta=%g p=%.3g", beta, p);
      worst.update(rg, tag);
      worst.update(rc, tag);
    }
  }
  // undeformed algebra [x, p] = i
  for (int i = 0; i < 20; ++i) {
    const double p = -3.0 + 6.0 * (i + 0.5) / 20.0;
    worst.update(commutator_check(ModelParams(1.0, 0.0),
                                  [](double q) { return std::exp(-0.5 * q * q); }, p),
                 "beta=0");
  }
  return {7, "deformed-commutator", worst.measured < 1e-8, worst.measured, 1e-8, true, worst.note};
}

/// 8. <X> = xi and Delta X = sqrt(b) for maximal localization states; the
///    overlap closed form matches the defining quadrature, removable
///    singularities included.
inline CheckResult check_maximal_localization(const AcceptanceConfig& cfg) {
  (void)cfg;
  detail::WorstBelow moments, overlap;
  for (double beta : {1e-2, 0.1}) {
    const ModelParams params(1.0, beta);
    for (double xi : {-1.0, 0.0, 1.0}) {
      const MLState state(params, xi);
      const auto [mean, dx] = ml_moments(state);
      char tag[48];
      std::snprintf(tag, sizeof(tag), "beta=%g xi=%g", beta, xi);
      moments.update(std::abs(mean - xi), tag);
      moments.update(std::abs(dx - std::sqrt(beta)), tag);
    }
    const double sb = std::sqrt(beta);
    const double half = interval_half_width(params);
    const double N2 = 2.0 * sb / kPi;
    for (double frac : {0.0, 1e-5, 0.5, 1.3, 2.0 - 1e-5, 2.0, 2.0 + 1e-5, 3.1}) {
      for (double sign : {1.0, -1.0}) {
        const double d = sign * frac * sb;
        const complex defining = integrate(
            [&](double p) {
              const double cp = std::cos(sb * p);
              return N2 * cp * cp * std::polar(1.0, -p * d);
            },
            -half, half);
        char tag[48];
        std::snprintf(tag, sizeof(tag), "beta=%g d=%+g*sqrt(b)", beta, sign * frac);
        overlap.update(std::abs(ml_overlap(params, d, 0.0) - defining), tag);
      }
    }
  }
  const bool pass = moments.measured < 1e-8 && overlap.measured < 1e-8;
  CheckResult r{8, "maximal-localization", pass, std::max(moments.measured, overlap.measured),
                1e-8, true, ""};
  char buf[160];
  std::snprintf(buf, sizeof(buf), "moments %.2e (%s); overlap-vs-quadrature %.2e (%s)",
                moments.measured, moments.note.c_str(), overlap.measured, overlap.note.c_str());
  r.note = buf;
  return r;
}

/// 9. Coordinate profiles obey the Dirichlet condition at the origin while
///    quasiposition profiles do not (threshold 1e-2, fixed by the pre-build
///    oracle run at alpha = 1, beta = 0.1: ratios 0.037, 0.023, 0.017 for
///    n = 1, 2, 3).
inline CheckResult check_boundary_behavior(const AcceptanceConfig& cfg) {
  detail::WorstBelow dirichlet;
  for (double alpha : cfg.alphas)
    for (double beta : cfg.betas)
      for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const ModelParams params(alpha, beta);
        const auto ctx = make_context(params, n);
        dirichlet.update(dirichlet_check(ctx, eigenstate_grid(ctx, cfg.grid_points)),
                         detail::case_tag(alpha, beta, n));
      }

  const ModelParams probe(1.0, 0.1);
  double best_ratio = 0.0;
  int best_n = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto ctx = make_context(probe, n);
    const auto grid = eigenstate_grid(ctx, cfg.grid_points);
    const auto phi = sample_eigenfunction(ctx, grid);
    double peak = 0.0;
    for (double xi : default_transform_abscissae(probe, n))
      peak = std::max(peak, std::abs(quasiposition_transform(phi, xi, grid)));
    const double ratio = std::abs(quasiposition_transform(phi, 0.0, grid)) / peak;
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best_n = n;
    }
  }
  const bool pass = dirichlet.measured < 1e-6 && best_ratio > 1e-2;
  CheckResult r{9, "boundary-behavior", pass, dirichlet.measured, 1e-6, true, ""};
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "dirichlet %.2e (%s); quasiposition origin ratio %.3f at n=%d (floor 1e-2)",
                dirichlet.measured, dirichlet.note.c_str(), best_ratio, best_n);
  r.note = buf;
  return r;
}

/// 10. d/dLambda of the truncated <p^4> converges to 4 e^{3/2}/pi within 1%
///     for Lambda >= 100 sqrt(e).
inline CheckResult check_divergence_mechanism(const AcceptanceConfig& cfg) {
  detail::WorstBelow worst;
  for (double alpha : cfg.alphas)
    for (int n = 1; n <= 3; ++n) {
      const ModelParams params(alpha, 0.01);
      const double eps = alpha * alpha / (4.0 * double(n) * double(n));
      const double target = 4.0 * std::pow(eps, 1.5) / kPi;
      for (double mult : {100.0, 200.0}) {
        const double lam = mult * std::sqrt(eps);
        const double slope =
            (moment_p4_cutoff(params, n, 2.0 * lam) - moment_p4_cutoff(params, n, lam)) / lam;
        char tag[48];
        std::snprintf(tag, sizeof(tag), "alpha=%g n=%d L=%g*sqrt(e)", alpha, n, mult);
        worst.update(std::abs(slope - target) / target, tag);
      }
    }
  return {10, "p4-moment-linear-divergence", worst.measured < 0.01, worst.measured, 0.01, true,
          worst.note};
}

/// 11. m(n) > n for beta > 0, the gap closes like sqrt(beta) (log-log slope
///     0.5 +- 0.02), and the beta = 0 single-valued spectrum is undeformed
///     to 1e-12.
inline CheckResult check_single_valuedness_emergence(const AcceptanceConfig& cfg) {
  bool positive_ok = true;
  std::string pos_note;
  for (double alpha : cfg.alphas)
    for (double beta : cfg.betas)
      for (int n = cfg.n_min; n <= cfg.n_max; ++n)
        if (!(m_of_n(ModelParams(alpha, beta), n) - n > 0.0)) {
          positive_ok = false;
          pos_note = detail::case_tag(alpha, beta, n);
        }

  detail::WorstBelow slope_err;
  for (double alpha : cfg.alphas)
    for (int n = 1; n <= 3; ++n) {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      int count = 0;
      for (double beta : {1e-8, 1e-9, 1e-10}) {
        const double gap = m_of_n(ModelParams(alpha, beta), n) - n;
        const double x = std::log(beta), y = std::log(gap);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
      }
      const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
      slope_err.update(std::abs(slope - 0.5), detail::case_tag(alpha, 0.0, n));
    }

  detail::WorstBelow undeformed;
  for (double alpha : cfg.alphas)
    for (int m = 1; m <= 5; ++m) {
      const double want = alpha * alpha / (4.0 * double(m) * double(m));
      undeformed.update(
          std::abs(energy_single_valued(ModelParams(alpha, 0.0), m).epsilon - want) / want,
          detail::case_tag(alpha, 0.0, m));
    }

  const bool pass = positive_ok && slope_err.measured < 0.02 && undeformed.measured < 1e-12;
  CheckResult r{11, "single-valuedness-emergence", pass, slope_err.measured, 0.02, true, ""};
  char buf[200];
  std::snprintf(buf, sizeof(buf), "m>n %s%s; |loglog slope-0.5| %.2e; beta=0 rel err %.2e",
                positive_ok ? "ok" : "FAILED at ", positive_ok ? "" : pos_note.c_str(),
                slope_err.measured, undeformed.measured);
  r.note = buf;
  return r;
}

/// 12. The zeroth-order WKB phase equation is solved to 1e-12 at 50
///     classically allowed points per (alpha, E) pair.
inline CheckResult check_wkb_phase(const AcceptanceConfig& cfg) {
  detail::WorstBelow worst;
  for (double alpha : cfg.alphas)
    for (double beta : {1e-2, 0.1})
      for (int n = 1; n <= 3; ++n) {
        const ModelParams params(alpha, beta);
        const auto level = energy_closed_form(params, n);
        const double x_max = alpha / level.epsilon;  // turning point
        for (int i = 0; i < 50; ++i) {
          const double x = x_max * 0.98 * (i + 0.5) / 50.0;
          char tag[48];
          std::snprintf(tag, sizeof(tag), "alpha=%g beta=%g n=%d", alpha, beta, n);
          worst.update(wkb_phase_residual(params, level.energy, x), tag);
        }
      }
  return {12, "wkb-phase-equation", worst.measured < 1e-12, worst.measured, 1e-12, true,
          worst.note};
}

/// 13. Emitted spectrum JSON parses back to the same table and re-serializes
///     byte-for-byte.
inline CheckResult check_json_round_trip(const AcceptanceConfig& cfg) {
  SpectrumTable table{ModelParams(cfg.alphas.front(), cfg.betas.front()), Method::closed_form, {}};
  for (int n = 1; n <= 5; ++n)
    table.levels.push_back(energy_closed_form(table.params, n));
  const std::string first = spectrum_to_json(table).dump(2);
  const SpectrumTable parsed = spectrum_from_json(nlohmann::json::parse(first));
  const std::string second = spectrum_to_json(parsed).dump(2);
  bool bits_ok = parsed.levels.size() == table.levels.size();
  for (std::size_t i = 0; bits_ok && i < table.levels.size(); ++i)
    bits_ok = parsed.levels[i].epsilon == table.levels[i].epsilon &&
              parsed.levels[i].energy == table.levels[i].energy;
  const bool pass = (first == second) && bits_ok;
  return {13, "json-round-trip", pass, pass ? 0.0 : 1.0, 0.5, true,
          pass ? "byte-stable" : "serialization mismatch"};
}

inline std::vector<CheckResult> run_acceptance_suite(const AcceptanceConfig& cfg = {}) {
  std::vector<CheckResult> results;
  results.push_back(check_route_equivalence(cfg));
  results.push_back(check_undeformed_limit(cfg));
  results.push_back(check_sqrt_beta_law(cfg));
  results.push_back(check_hermiticity(cfg));
  results.push_back(check_eigenfunction_consistency(cfg));
  results.push_back(check_inverse_position_identities(cfg));
  results.push_back(check_deformed_commutator(cfg));
  results.push_back(check_maximal_localization(cfg));
  results.push_back(check_boundary_behavior(cfg));
  results.push_back(check_divergence_mechanism(cfg));
  results.push_back(check_single_valuedness_emergence(cfg));
  results.push_back(check_wkb_phase(cfg));
  results.push_back(check_json_round_trip(cfg));
  return results;
}

inline int count_failures(const std::vector<CheckResult>& results) {
  int failures = 0;
  for (const auto& r : results)
    if (!r.passed) ++failures;
  return failures;
}

inline std::string format_check_line(const CheckResult& r) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), "[%s] %02d %-34s measured=%.3e threshold%s%.1e  %s",
                r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.measured,
                r.pass_below ? "<" : ">", r.threshold, r.note.c_str());
  return buf;
}

}  // namespace gupatom
