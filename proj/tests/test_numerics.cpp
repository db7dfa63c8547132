#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gupatom/numerics.hpp"
#include "oracles.hpp"

using namespace gupatom;
using Catch::Approx;

TEST_CASE("integrate basics", "[numerics]") {
  CHECK(integrate([](double) { return 1.0; }, 0.0, kPi) == Approx(kPi).epsilon(1e-13));

  auto cos2 = [](double p) { return std::cos(p) * std::cos(p); };
  CHECK(integrate(cos2, -kPi / 2.0, kPi / 2.0) == Approx(kPi / 2.0).epsilon(1e-13));
}

TEST_CASE("integrate normalized undeformed density over the real line", "[numerics]") {
  const double eps = 0.25;
  auto density = [eps](double p) {
    const double d = p * p + eps;
    return 2.0 * std::pow(eps, 1.5) / (kPi * d * d);
  };
  CHECK(integrate(density, -INFINITY, INFINITY) == Approx(1.0).epsilon(1e-10));
}

TEST_CASE("integrate is linear", "[numerics]") {
  auto f = [](double x) { return std::exp(-x * x); };
  auto g = [](double x) { return std::cos(3.0 * x); };
  const double a = 2.75, b = -0.4;
  const double lhs = integrate([&](double x) { return a * f(x) + b * g(x); }, -2.0, 3.0);
  const double rhs = a * integrate(f, -2.0, 3.0) + b * integrate(g, -2.0, 3.0);
  CHECK(lhs == Approx(rhs).margin(2e-12));
}

TEST_CASE("integrate of odd function on symmetric interval", "[numerics]") {
  auto f = [](double x) { return x * std::cos(x) + x * x * x; };
  CHECK(std::abs(integrate(f, -2.5, 2.5)) < 1e-12);
}

TEST_CASE("tanh-sinh handles endpoint-steep integrands", "[numerics]") {
  QuadratureSpec spec;
  spec.scheme = QuadratureSpec::Scheme::tanh_sinh;
  spec.node_count = 256;
  spec.abs_tol = 1e-11;
  spec.rel_tol = 1e-11;
  // finite on the open interval, divergent derivative at 0
  CHECK(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, spec) ==
        Approx(2.0).epsilon(1e-9));
}

TEST_CASE("integrate reports non-convergence with both estimates", "[numerics]") {
  QuadratureSpec spec;
  spec.node_count = 64;
  spec.max_doublings = 1;
  spec.abs_tol = 1e-300;
  spec.rel_tol = 1e-16;
  auto nasty = [](double x) { return std::sin(1e4 * x * x); };
  try {
    integrate(nasty, 0.0, 10.0, spec);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::isfinite(e.estimate_coarse.real()));
    CHECK(std::isfinite(e.estimate_fine.real()));
    CHECK(e.estimate_coarse != e.estimate_fine);
  }
}

TEST_CASE("quadrature spec validation", "[numerics]") {
  QuadratureSpec spec;
  spec.node_count = 63;
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, spec), std::invalid_argument);
  spec.node_count = 64;
  spec.abs_tol = 0.0;
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, spec), std::invalid_argument);
}

TEST_CASE("cumulative integral of zero and of a constant", "[numerics]") {
  const auto grid = make_momentum_grid(0.25, 128);
  const double L = grid.half_width();

  std::vector<complex> zeros(grid.node_count(), complex{0.0, 0.0});
  auto Fz = cumulative_integral_samples(grid.nodes, zeros, -L);
  for (auto v : Fz) CHECK(std::abs(v) == 0.0);

  const complex k{0.7, -0.2};
  std::vector<complex> consts(grid.node_count(), k);
  auto Fc = cumulative_integral_samples(grid.nodes, consts, -L);
  for (std::size_t i = 0; i < Fc.size(); ++i)
    CHECK(std::abs(Fc[i] - k * (grid.nodes[i] + L)) < 1e-12);
}

TEST_CASE("cumulative integral needs at least two nodes", "[numerics]") {
  CHECK_THROWS_AS(cumulative_integral_samples({0.0}, {complex{1.0, 0.0}}, -1.0),
                  std::invalid_argument);
}

TEST_CASE("cumulative integral matches full-interval quadrature", "[numerics]") {
  const auto grid = make_momentum_grid(1.0, 512);
  const double L = grid.half_width();
  auto f = [](double p) { return complex(std::exp(-p * p), std::sin(p) * 0.3); };
  std::vector<complex> vals(grid.node_count());
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = f(grid.nodes[i]);
  const auto F = cumulative_integral_samples(grid.nodes, vals, -L);
  const complex full = integrate(f, -L, L);
  // final node misses only a sliver of the interval
  CHECK(std::abs(F.back() - full) < 1e-10);
}

TEST_CASE("cumulative integral against a known antiderivative", "[numerics]") {
  const auto grid = make_momentum_grid(0.04, 256);
  const double L = grid.half_width();
  std::vector<complex> vals(grid.node_count());
  for (std::size_t i = 0; i < vals.size(); ++i)
    vals[i] = complex(std::cos(0.2 * grid.nodes[i]), 0.0);
  const auto F = cumulative_integral_samples(grid.nodes, vals, -L);
  for (std::size_t i = 0; i < F.size(); i += 17) {
    const double exact = (std::sin(0.2 * grid.nodes[i]) - std::sin(0.2 * -L)) / 0.2;
    CHECK(F[i].real() == Approx(exact).margin(1e-12));
  }
}

TEST_CASE("find_root basics", "[numerics]") {
  auto lin = [](double x) { return x - 1.0; };
  CHECK(find_root(lin, RootBracket(0.0, 2.0, lin(0.0), lin(2.0))) == Approx(1.0).margin(1e-12));

  auto sq = [](double x) { return x * x - 2.0; };
  CHECK(find_root(sq, RootBracket(1.0, 2.0, sq(1.0), sq(2.0))) ==
        Approx(std::sqrt(2.0)).margin(1e-12));
}

TEST_CASE("find_root on the quantization residual matches bisection oracle", "[numerics]") {
  const double alpha = 1.0, beta = 0.01;
  auto residual = [&](double e) {
    return alpha / (2.0 * (std::sqrt(e) + std::sqrt(beta) * e)) - 1.0;
  };
  const double ours =
      find_root(residual, RootBracket(1e-6, 0.26, residual(1e-6), residual(0.26)), 1e-14);
  const double ref = oracle::bisect(residual, 1e-6, 0.26);
  CHECK(ours == Approx(ref).margin(1e-12));
  CHECK(ours == Approx(0.2277442494833886).epsilon(1e-12));
}

TEST_CASE("find_root final bracket straddles zero", "[numerics]") {
  auto f = [](double x) { return std::cos(x) - x; };
  const auto res = find_root_detailed(f, RootBracket(0.0, 2.0, f(0.0), f(2.0)), 1e-13);
  CHECK(res.f_lo * res.f_hi < 0.0);
  CHECK(res.bracket_hi - res.bracket_lo <= 1e-13);
  CHECK(res.root >= res.bracket_lo);
  CHECK(res.root <= res.bracket_hi);
}

TEST_CASE("invalid bracket is rejected", "[numerics]") {
  CHECK_THROWS_AS(RootBracket(0.0, 1.0, 1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(RootBracket(1.0, 0.0, -1.0, 2.0), std::invalid_argument);
}

TEST_CASE("derivative with Richardson refinement", "[numerics]") {
  auto sq = [](double p) { return p * p; };
  CHECK(derivative(sq, 1.0, 1e-2).value.real() == Approx(2.0).margin(1e-8));

  auto sn = [](double p) { return std::sin(p); };
  CHECK(derivative(sn, 0.0, 1e-2).value.real() == Approx(1.0).margin(1e-8));

  const double beta = 0.04;
  auto P = [beta](double p) { return std::tan(std::sqrt(beta) * p) / std::sqrt(beta); };
  CHECK(derivative(P, 0.0, 1e-2).value.real() == Approx(1.0).margin(1e-8));

  CHECK_THROWS_AS(derivative(sq, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(derivative(sq, 1.0, -1e-3), std::invalid_argument);
}

TEST_CASE("derivative error estimate is honest for smooth functions", "[numerics]") {
  auto f = [](double x) { return std::exp(0.7 * x); };
  const auto d = derivative(f, 0.3, 1e-2);
  const double exact = 0.7 * std::exp(0.21);
  CHECK(std::abs(d.value.real() - exact) <= std::max(d.error_estimate * 10.0, 1e-13));
}

TEST_CASE("sample-based derivative on a Gauss grid", "[numerics]") {
  const auto grid = make_momentum_grid(0.09, 256);
  std::vector<complex> vals(grid.node_count());
  for (std::size_t i = 0; i < vals.size(); ++i)
    vals[i] = complex(std::sin(0.5 * grid.nodes[i]), std::cos(0.3 * grid.nodes[i]));
  const auto d = derivative_samples(grid.nodes, vals);
  for (std::size_t i = 0; i < d.size(); i += 13) {
    const double p = grid.nodes[i];
    CHECK(d[i].real() == Approx(0.5 * std::cos(0.5 * p)).margin(1e-9));
    CHECK(d[i].imag() == Approx(-0.3 * std::sin(0.3 * p)).margin(1e-9));
  }
  CHECK_THROWS_AS(derivative_samples({0, 1, 2}, {complex{}, complex{}, complex{}}),
                  std::invalid_argument);
}
