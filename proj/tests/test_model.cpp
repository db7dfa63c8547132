#include <catch2/catch_amalgamated.hpp>

#include "gupatom/model.hpp"
#include "gupatom/numerics.hpp"

using namespace gupatom;
using Catch::Approx;

TEST_CASE("interval half-width", "[model]") {
  CHECK(interval_half_width(ModelParams(1.0, 1.0)) == Approx(kPi / 2.0).epsilon(1e-15));
  CHECK(interval_half_width(ModelParams(1.0, 0.25)) == Approx(kPi).epsilon(1e-15));
  CHECK(interval_half_width(ModelParams(1.0, 0.01)) == Approx(5.0 * kPi).epsilon(1e-14));
  CHECK_THROWS_AS(interval_half_width(ModelParams(1.0, 0.0)), std::invalid_argument);
}

TEST_CASE("half-width scales as beta^(-1/2) exactly", "[model]") {
  // quadrupling beta (exact in binary) halves the width bit-for-bit
  for (double beta : {0.5, 0.01, 3.0}) {
    const double w1 = interval_half_width(ModelParams(1.0, beta));
    const double w2 = interval_half_width(ModelParams(1.0, 4.0 * beta));
    CHECK(w1 == 2.0 * w2);
  }
}

TEST_CASE("parameter validation", "[model]") {
  CHECK_THROWS_AS(ModelParams(0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(-1.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(1.0, -0.1), std::invalid_argument);
  CHECK_NOTHROW(ModelParams(1.0, 0.0));
}

TEST_CASE("EnergyLevel rejects non-binding values", "[model]") {
  CHECK_THROWS_AS(EnergyLevel(1, 0.0, Method::closed_form), std::invalid_argument);
  CHECK_THROWS_AS(EnergyLevel(1, -0.5, Method::closed_form), std::invalid_argument);
  CHECK_THROWS_AS(EnergyLevel(0, 0.5, Method::closed_form), std::invalid_argument);
  const EnergyLevel lv(3, 0.125, Method::root_found);
  CHECK(lv.energy == -lv.epsilon);
}

TEST_CASE("momentum grid invariants", "[model]") {
  for (bool adapted : {false, true}) {
    const double beta = 0.01;
    const MomentumGrid grid = adapted ? make_adapted_grid(beta, 0.2277, 1024)
                                      : make_momentum_grid(beta, 1024);
    const double half = grid.half_width();

    // nodes strictly interior and increasing
    for (std::size_t i = 0; i < grid.node_count(); ++i) {
      CHECK(std::abs(grid.nodes[i]) < half);
      if (i > 0) CHECK(grid.nodes[i] > grid.nodes[i - 1]);
    }
    // symmetric about p = 0
    for (std::size_t i = 0; i < grid.node_count(); ++i) {
      CHECK(grid.nodes[i] == Approx(-grid.nodes[grid.node_count() - 1 - i]).margin(1e-18));
      CHECK(grid.weights[i] == Approx(grid.weights[grid.node_count() - 1 - i]).epsilon(1e-14));
    }
    // weights sum to the interval length
    double wsum = 0.0;
    for (double w : grid.weights) wsum += w;
    CHECK(wsum == Approx(kPi / std::sqrt(beta)).epsilon(1e-12));
  }
}

TEST_CASE("adapted grid weight sum at extreme concentration", "[model]") {
  // worst acceptance case: beta*eps ~ 6e-8
  const MomentumGrid grid = make_adapted_grid(1e-4, 6.25e-4, 2048);
  double wsum = 0.0;
  for (double w : grid.weights) wsum += w;
  CHECK(wsum == Approx(kPi / std::sqrt(1e-4)).epsilon(1e-12));
}

TEST_CASE("sampled wavefunction validation", "[model]") {
  std::vector<double> xs{0.0, 1.0, 0.5};
  std::vector<complex> vs{{1, 0}, {2, 0}, {3, 0}};
  CHECK_THROWS_AS(SampledWaveFunction(SampledWaveFunction::Kind::momentum_p, xs, vs),
                  std::invalid_argument);
  xs = {0.0, 0.5, 1.0};
  CHECK_NOTHROW(SampledWaveFunction(SampledWaveFunction::Kind::momentum_p, xs, vs));
}
