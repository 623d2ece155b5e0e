#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "qhop/nonlinear.hpp"

using namespace qhop;

TEST_CASE("both map kinds fix the origin exactly") {
  CHECK(apply_map(NonlinearMap::doubling(), 0.0) == 0.0);
  CHECK(apply_map(NonlinearMap::smooth(0.4), 0.0) == 0.0);
  CHECK(apply_map(NonlinearMap::smooth(std::numbers::ln2), 0.0) == 0.0);
}

TEST_CASE("doubling map doubles below the clip") {
  const NonlinearMap map = NonlinearMap::doubling();
  CHECK(apply_map(map, 0.3) == 0.6);
  CHECK(apply_map(map, 1.0) == kHalfPi);  // clipped
  CHECK(map.lambda == std::numbers::ln2);
}

TEST_CASE("smooth map matches its closed form") {
  const NonlinearMap map = NonlinearMap::smooth(std::numbers::ln2);
  // c = 2 e^lambda / pi = 4/pi; theta = 0.001 lands on 0.0019987...
  const double out = apply_map(map, 0.001);
  CHECK(out == Catch::Approx(0.00199873).epsilon(1e-4));
  // First-order slope at the origin is e^lambda.
  CHECK(apply_map(map, 1e-9) / 1e-9 == Catch::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("angles outside [0, pi/2] are rejected") {
  CHECK_THROWS_AS(apply_map(NonlinearMap::doubling(), -0.1), std::domain_error);
  CHECK_THROWS_AS(apply_map(NonlinearMap::doubling(), 1.6), std::domain_error);
  CHECK_THROWS_AS(NonlinearMap::smooth(0.0), std::domain_error);
  CHECK_THROWS_AS(NonlinearMap::smooth(-1.0), std::domain_error);
}

TEST_CASE("both maps are monotone and stay in range on a dense grid") {
  for (const NonlinearMap& map :
       {NonlinearMap::doubling(), NonlinearMap::smooth(0.25),
        NonlinearMap::smooth(1.1)}) {
    double prev = apply_map(map, 0.0);
    for (int i = 1; i <= 10000; ++i) {
      const double theta = kHalfPi * i / 10000.0;
      const double out = apply_map(map, theta);
      REQUIRE(out >= prev);
      REQUIRE(out >= 0.0);
      REQUIRE(out <= kHalfPi);
      prev = out;
    }
  }
}

TEST_CASE("doubling Lyapunov estimate is ln 2 to 1e-6") {
  const double est = lyapunov_estimate(NonlinearMap::doubling(), 1e-4, 1e-6, 5);
  CHECK(std::abs(est - std::numbers::ln2) < 1e-6);
}

TEST_CASE("smooth Lyapunov estimates land within 5 percent") {
  for (double lambda : {0.25, 0.5, std::numbers::ln2}) {
    const double est =
        lyapunov_estimate(NonlinearMap::smooth(lambda), 1e-4, 1e-6, 5);
    CHECK(est > 0.95 * lambda);
    CHECK(est < 1.05 * lambda);
  }
}

TEST_CASE("separation grows as e^(lambda k) for points below 0.01 rad") {
  for (const NonlinearMap& map :
       {NonlinearMap::doubling(), NonlinearMap::smooth(0.5)}) {
    const double theta0 = 1e-4;
    const double delta = 1e-6;
    double a = theta0;
    double b = theta0 + delta;
    const std::size_t k = 5;
    for (std::size_t i = 0; i < k; ++i) {
      a = apply_map(map, a);
      b = apply_map(map, b);
      REQUIRE(b < 0.01);
    }
    const double expected = delta * std::exp(map.lambda * static_cast<double>(k));
    CHECK(std::abs((b - a) - expected) <= 0.05 * expected);
  }
}

TEST_CASE("degenerate Lyapunov inputs are rejected") {
  CHECK_THROWS_AS(lyapunov_estimate(NonlinearMap::doubling(), 1e-4, 1e-6, 0),
                  std::domain_error);
  CHECK_THROWS_AS(lyapunov_estimate(NonlinearMap::doubling(), 1e-4, 0.0, 3),
                  std::domain_error);
  CHECK_THROWS_AS(lyapunov_estimate(NonlinearMap::doubling(), 1.0, 1.0, 3),
                  std::domain_error);
}

TEST_CASE("escaping trajectories fall back to the completed steps") {
  // From 0.2, doubling reaches pi/4 after one step; only that step counts.
  const double est = lyapunov_estimate(NonlinearMap::doubling(), 0.2, 1e-6, 10);
  CHECK(std::abs(est - std::numbers::ln2) < 1e-9);
}

TEST_CASE("smooth fixed point sits where the map crosses the diagonal") {
  for (double lambda : {0.25, 0.5, std::numbers::ln2}) {
    const double fp = smooth_fixed_point(lambda);
    CHECK(fp > 0.0);
    CHECK(fp < kHalfPi);
    CHECK(std::abs(apply_map(NonlinearMap::smooth(lambda), fp) - fp) < 1e-12);
  }
  // Below lambda = ln(2 ln 2) the attractor drops under pi/4.
  CHECK(smooth_fixed_point(0.25) < kDefaultThreshold);
  CHECK(smooth_fixed_point(0.5) > kDefaultThreshold);
}
