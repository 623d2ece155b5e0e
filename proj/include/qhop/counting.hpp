#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qhop/nonlinear.hpp"
#include "qhop/oracle.hpp"

namespace qhop {

/// Single-qubit state cos(theta)|0> + sin(theta)|1> holding an encoded
/// solution count; theta = n / 2^N, so n = 0 sits exactly on the map's
/// fixed point.
struct EncodedState {
  double theta = 0.0;
  double c0 = 1.0;  // amplitude on |0>
  double c1 = 0.0;  // amplitude on |1>
};

inline EncodedState encode_count(std::size_t n, std::size_t n_bits) {
  if (n_bits > 52) {
    throw std::domain_error("encode_count: bit count out of range");
  }
  if (n > (std::size_t{1} << n_bits)) {
    throw std::domain_error("encode_count: count exceeds 2^n_bits");
  }
  EncodedState state;
  state.theta = std::ldexp(static_cast<double>(n), -static_cast<int>(n_bits));
  state.c0 = std::cos(state.theta);
  state.c1 = std::sin(state.theta);
  return state;
}

enum class Decision { kExists, kNotExists };

inline const char* to_string(Decision d) {
  return d == Decision::kExists ? "exists" : "not_exists";
}

struct CountResult {
  std::size_t n_estimated = 0;
  std::size_t iterations = 0;
  double final_theta = 0.0;
  Decision decision = Decision::kNotExists;
};

namespace detail {

inline constexpr std::size_t kSmoothExistenceCap = 10000;

}  // namespace detail

/// Counts the solutions of f by driving the encoded angle away from the
/// fixed point: one oracle consultation prepares theta_0 = n / 2^N, then the
/// doubling map runs until the angle is macroscopically distinguishable from
/// |0> (>= threshold) or the iteration cap N + 2 certifies n = 0. Below the
/// threshold the clip at pi/2 can never fire, so theta_k = n 2^(k-N) exactly
/// and n is recovered as round(theta_k 2^N / 2^k).
///
/// Only the doubling map supports exact counting; smooth maps distort the
/// angle and serve the existence decision only. The threshold must lie in
/// (0, pi/4] so that the final pre-stop doubling stays below the clip.
inline CountResult count_solutions(const OracleTable& oracle,
                                   const NonlinearMap& map,
                                   double threshold = kDefaultThreshold) {
  if (map.kind != MapKind::kDoubling) {
    throw std::invalid_argument(
        "count_solutions: exact counting requires the doubling map");
  }
  if (!(threshold > 0.0) || threshold > kDefaultThreshold) {
    throw std::domain_error("count_solutions: threshold must lie in (0, pi/4]");
  }

  const std::size_t n_bits = oracle.n_bits();
  const std::size_t cap = n_bits + 2;
  double theta = encode_count(oracle.consult(), n_bits).theta;

  std::size_t k = 0;
  while (theta < threshold && k < cap) {
    theta = apply_map(map, theta);
    ++k;
  }

  CountResult result;
  result.iterations = k;
  result.final_theta = theta;
  if (theta >= threshold) {
    const double recovered =
        std::ldexp(theta, static_cast<int>(n_bits) - static_cast<int>(k));
    const double rounded = std::round(recovered);
    if (std::abs(recovered - rounded) > 1e-6) {
      throw std::runtime_error("count_solutions: recovered count " +
                               std::to_string(recovered) +
                               " is not close to an integer");
    }
    result.n_estimated = static_cast<std::size_t>(rounded);
    result.decision =
        result.n_estimated > 0 ? Decision::kExists : Decision::kNotExists;
  } else {
    result.n_estimated = 0;
    result.decision = Decision::kNotExists;
  }
  return result;
}

/// True when some x has f(x) = 1: the encoded angle leaves [0, threshold)
/// under iteration. With the doubling map, n >= 1 crosses within N steps and
/// reaching the N + 2 cap certifies n = 0. A smooth map converges to its
/// upper fixed point instead of the clip, so its threshold must lie strictly
/// below that attractor (rejected otherwise); the crossing count then grows
/// with 1/lambda rather than staying within N + 2, and a generous internal
/// cap guards the loop. Agrees with brute-force enumeration for both kinds.
inline bool decide_existence(const OracleTable& oracle, const NonlinearMap& map,
                             double threshold = kDefaultThreshold) {
  if (!(threshold > 0.0) || !(threshold < kHalfPi)) {
    throw std::domain_error("decide_existence: threshold must lie in (0, pi/2)");
  }
  std::size_t cap = oracle.n_bits() + 2;
  if (map.kind == MapKind::kSmooth) {
    if (threshold >= smooth_fixed_point(map.lambda)) {
      throw std::domain_error(
          "decide_existence: threshold is unreachable, the smooth map's "
          "attracting fixed point lies below it");
    }
    cap = detail::kSmoothExistenceCap;
  }
  double theta = encode_count(oracle.consult(), oracle.n_bits()).theta;
  std::size_t k = 0;
  while (theta < threshold && k < cap) {
    const double next = apply_map(map, theta);
    if (next == theta) break;  // fixed point reached
    theta = next;
    ++k;
  }
  if (theta >= threshold) return true;
  if (theta == 0.0) return false;  // never left the fixed point: no solutions
  if (map.kind == MapKind::kSmooth) {
    throw std::runtime_error(
        "decide_existence: smooth-map trajectory did not resolve within the "
        "iteration cap");
  }
  return false;  // doubling: reaching the cap certifies n = 0
}

}  // namespace qhop
