#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gupatom/spectrum.hpp"
#include "oracles.hpp"

using namespace gupatom;
using Catch::Approx;

TEST_CASE("closed form: undeformed limit is exact", "[spectrum]") {
  CHECK(energy_closed_form(ModelParams(2.0, 0.0), 1).energy == -1.0);
  CHECK(energy_closed_form(ModelParams(1.0, 0.0), 2).epsilon == Approx(1.0 / 16.0).epsilon(1e-15));
  CHECK_THROWS_AS(energy_closed_form(ModelParams(1.0, 0.1), 0), std::invalid_argument);
}

TEST_CASE("closed form matches the radical expression", "[spectrum]") {
  // stable form vs literal (1/4b)(1 - sqrt(1 + 2a sqrt(b)/n))^2
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (double beta : {1e-4, 1e-2, 0.1}) {
      for (int n : {1, 3, 10}) {
        const double eps = energy_closed_form(ModelParams(alpha, beta), n).epsilon;
        const double r = 1.0 - std::sqrt(1.0 + 2.0 * alpha * std::sqrt(beta) / n);
        CHECK(eps == Approx(r * r / (4.0 * beta)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("closed form agrees with bisection on the quantization condition", "[spectrum]") {
  const ModelParams params(1.0, 0.01);
  const double eps = energy_closed_form(params, 1).epsilon;
  auto residual = [&](double e) { return quantization_residual(params, e, 1); };
  const double ref = oracle::bisect(residual, 1e-8, 0.25 * (1.0 + 1e-6));
  CHECK(eps == Approx(ref).epsilon(1e-12));
  CHECK(energy_closed_form(params, 1).energy == Approx(-0.2277442494833886).epsilon(1e-13));
}

TEST_CASE("binding decreases strictly with n and vanishes at large n", "[spectrum]") {
  const ModelParams params(1.3, 0.05);
  double prev = energy_closed_form(params, 1).epsilon;
  for (int n = 2; n <= 40; ++n) {
    const double eps = energy_closed_form(params, n).epsilon;
    CHECK(eps < prev);
    prev = eps;
  }
  CHECK(energy_closed_form(params, 1000000).epsilon < 1e-9);
}

TEST_CASE("root-found spectrum equals the closed form", "[spectrum]") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (double beta : {1e-4, 0.01, 0.1}) {
      for (int n : {1, 2, 5, 10}) {
        const ModelParams params(alpha, beta);
        const double ec = energy_closed_form(params, n).epsilon;
        const double er = energy_root_found(params, n).epsilon;
        CHECK(std::abs(er - ec) / ec < 1e-10);
      }
    }
  }
}

TEST_CASE("Hermiticity sine vanishes on the root-found spectrum", "[spectrum]") {
  const ModelParams params(1.0, 0.01);
  const double eps = energy_root_found(params, 1).epsilon;
  const double arg = kPi * params.alpha / (2.0 * std::sqrt(eps) * (1.0 + std::sqrt(params.beta * eps)));
  CHECK(std::abs(std::sin(arg)) < 1e-10);
}

TEST_CASE("root-found route requires beta > 0", "[spectrum]") {
  CHECK_THROWS_AS(energy_root_found(ModelParams(1.0, 0.0), 1), std::invalid_argument);
}

TEST_CASE("single-valuedness spectrum", "[spectrum]") {
  // beta = 0 reduces to the undeformed spectrum exactly
  CHECK(energy_single_valued(ModelParams(1.0, 0.0), 2).epsilon == 1.0 / 16.0);

  // frozen bisection value for alpha=1, beta=0.01, m=1
  const auto lv = energy_single_valued(ModelParams(1.0, 0.01), 1);
  CHECK(lv.epsilon == Approx(0.2512610561019976).epsilon(1e-12));
  const double resid = 1.0 / (2.0 * std::sqrt(lv.epsilon) * (1.0 - 0.01 * lv.epsilon)) - 1.0;
  CHECK(std::abs(resid) < 1e-10);

  // branch absent when the left side never reaches m
  CHECK_THROWS_AS(energy_single_valued(ModelParams(100.0, 1.0), 1), std::runtime_error);
}

TEST_CASE("m_of_n relation", "[spectrum]") {
  CHECK(m_of_n(ModelParams(1.0, 0.0), 3) == 3.0);

  const double m = m_of_n(ModelParams(1.0, 0.01), 1);
  CHECK(m == Approx(1.0501141320539313).epsilon(1e-12));
  CHECK(m > 1.0);
  CHECK(std::abs(m - std::round(m)) > 0.04);  // not an integer for generic params

  // gap closes like sqrt(beta): (m - n)/sqrt(beta) -> alpha/2
  for (double alpha : {0.5, 2.0}) {
    const double r = (m_of_n(ModelParams(alpha, 1e-10), 1) - 1.0) / std::sqrt(1e-10);
    CHECK(r == Approx(alpha / 2.0).epsilon(1e-2));
  }
}

TEST_CASE("perturbative series", "[spectrum]") {
  CHECK(energy_perturbative(ModelParams(1.0, 0.0), 2, PerturbativeOrder::beta) ==
        Approx(-1.0 / 16.0).epsilon(1e-15));
  CHECK(energy_perturbative(ModelParams(1.0, 0.01), 1, PerturbativeOrder::beta) ==
        Approx(-0.228125).epsilon(1e-14));
  CHECK(energy_perturbative(ModelParams(1.0, 0.01), 1, PerturbativeOrder::sqrt_beta) ==
        Approx(-0.225).epsilon(1e-14));
}

TEST_CASE("perturbative truncation error scales as beta^(3/2)", "[spectrum]") {
  const ModelParams base(1.0, 0.0);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (double beta : {1e-4, 1e-5, 1e-6, 1e-7, 1e-8}) {
    const ModelParams params(1.0, beta);
    const double err =
        std::abs(energy_closed_form(params, 1).energy -
                 energy_perturbative(params, 1, PerturbativeOrder::beta));
    const double x = std::log(beta), y = std::log(err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  CHECK(slope == Approx(1.5).margin(0.05));
}

TEST_CASE("p^4 moment under a cutoff", "[spectrum]") {
  const ModelParams params(1.0, 0.01);
  const double eps = 0.25;  // alpha^2/(4 n^2) at n = 1

  CHECK(moment_p4_cutoff(params, 1, 1e-4) < 1e-12);

  // monotone increasing in the cutoff
  double prev = 0.0;
  for (double lam : {1.0, 5.0, 20.0, 80.0}) {
    const double v = moment_p4_cutoff(params, 1, lam);
    CHECK(v > prev);
    prev = v;
  }

  // asymptotically linear with slope 4 eps^{3/2}/pi (finite difference at
  // lambda and 2 lambda)
  const double lam = 100.0 * std::sqrt(eps);
  const double slope = (moment_p4_cutoff(params, 1, 2.0 * lam) - moment_p4_cutoff(params, 1, lam)) / lam;
  const double target = 4.0 * std::pow(eps, 1.5) / kPi;
  CHECK(slope == Approx(target).epsilon(1e-2));

  // net first-order shift (2/3) b <p^4> with the natural cutoff 1/sqrt(b)
  // scales as sqrt(b)
  auto shift = [&](double b) {
    return (2.0 / 3.0) * b * moment_p4_cutoff(ModelParams(1.0, b), 1, 1.0 / std::sqrt(b));
  };
  const double r1 = shift(1e-4) / std::sqrt(1e-4);
  const double r2 = shift(1e-6) / std::sqrt(1e-6);
  CHECK(r1 == Approx(r2).epsilon(0.05));
}

TEST_CASE("GUP weakens binding level by level", "[spectrum]") {
  for (double alpha : {0.5, 2.0}) {
    for (int n : {1, 4, 10}) {
      const double undeformed = alpha * alpha / (4.0 * n * n);
      CHECK(energy_closed_form(ModelParams(alpha, 0.05), n).epsilon < undeformed);
    }
  }
}
