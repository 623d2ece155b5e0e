#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>

namespace qhop {

enum class MapKind { kDoubling, kSmooth };

inline constexpr double kHalfPi = std::numbers::pi / 2.0;
inline constexpr double kDefaultThreshold = std::numbers::pi / 4.0;

/// A Bloch-angle map on [0, pi/2] with a fixed point at 0 and a positive
/// Lyapunov exponent there: nearby angles separate as e^lambda per iteration.
///
/// kDoubling is theta -> min(2 theta, pi/2), exactly linear below the clip
/// (lambda = ln 2); kSmooth is theta -> (pi/2)(1 - exp(-c theta)) with
/// c = 2 e^lambda / pi, a bounded monotone map with the same derivative at
/// the fixed point. Both fix 0 exactly and map the domain into itself.
struct NonlinearMap {
  MapKind kind = MapKind::kDoubling;
  double lambda = std::numbers::ln2;

  static NonlinearMap doubling() { return NonlinearMap{MapKind::kDoubling, std::numbers::ln2}; }

  static NonlinearMap smooth(double lambda) {
    if (!(lambda > 0.0)) {
      throw std::domain_error("NonlinearMap::smooth: lambda must be positive");
    }
    return NonlinearMap{MapKind::kSmooth, lambda};
  }
};

inline double apply_map(const NonlinearMap& map, double theta) {
  if (!(theta >= 0.0) || theta > kHalfPi) {
    throw std::domain_error("apply_map: angle outside [0, pi/2]");
  }
  if (map.kind == MapKind::kDoubling) {
    return std::min(2.0 * theta, kHalfPi);
  }
  const double c = 2.0 * std::exp(map.lambda) / std::numbers::pi;
  return kHalfPi * -std::expm1(-c * theta);
}

/// Upper fixed point of the smooth map: the attractor every positive angle
/// converges to. A threshold-crossing decision is only meaningful below it.
/// (The doubling map's clip makes pi/2 its upper fixed point.)
inline double smooth_fixed_point(double lambda) {
  const NonlinearMap map = NonlinearMap::smooth(lambda);
  double lo = 1e-12;
  double hi = kHalfPi;
  // f(theta) - theta is positive just above 0 (slope e^lambda > 1) and
  // negative at pi/2; bisect the sign change.
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (apply_map(map, mid) > mid) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Measures the divergence rate of two nearby trajectories: iterates both for
/// k steps and returns (1/k) ln(separation_k / delta). If a trajectory
/// reaches pi/4 early, the largest number of completed steps with both
/// trajectories still below pi/4 is used instead.
inline double lyapunov_estimate(const NonlinearMap& map, double theta0,
                                double delta, std::size_t k) {
  if (k == 0) {
    throw std::domain_error("lyapunov_estimate: need at least one iteration");
  }
  if (!(delta > 0.0)) {
    throw std::domain_error("lyapunov_estimate: separation must be positive");
  }
  if (theta0 < 0.0 || theta0 + delta > kHalfPi) {
    throw std::domain_error("lyapunov_estimate: trajectory outside domain");
  }

  double a = theta0;
  double b = theta0 + delta;
  double separation = delta;
  std::size_t used = 0;
  for (std::size_t step = 0; step < k; ++step) {
    a = apply_map(map, a);
    b = apply_map(map, b);
    if (a >= kDefaultThreshold || b >= kDefaultThreshold) break;
    separation = std::abs(b - a);
    ++used;
  }
  if (used == 0) {
    throw std::domain_error("lyapunov_estimate: trajectories escaped immediately");
  }
  return std::log(separation / delta) / static_cast<double>(used);
}

}  // namespace qhop
