#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>

namespace qhop {

using Complex = std::complex<double>;

inline constexpr double kAlgebraTol = 1e-12;   // single algebraic identities
inline constexpr double kPipelineTol = 1e-10;  // composed pipelines

/// Dense amplitude vector over m qubits (equivalently, m lattice sites in the
/// occupation basis). Qubit 0 is the least significant bit of the basis label.
struct StateVector {
  std::size_t qubits = 0;
  Eigen::VectorXcd amplitudes;

  std::size_t dimension() const { return std::size_t{1} << qubits; }

  double norm() const { return amplitudes.norm(); }
};

inline StateVector new_basis_state(std::size_t m_qubits, std::size_t index) {
  if (m_qubits >= 26) {
    throw std::length_error("new_basis_state: qubit count exceeds dense capacity");
  }
  const std::size_t dim = std::size_t{1} << m_qubits;
  if (index >= dim) {
    throw std::domain_error("new_basis_state: basis index out of range");
  }
  StateVector state;
  state.qubits = m_qubits;
  state.amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  state.amplitudes(static_cast<Eigen::Index>(index)) = Complex{1.0, 0.0};
  return state;
}

namespace detail {

/// max_k |a_k - e^{i phi} b_k|
inline double phase_diff_max_norm(const Eigen::VectorXcd& a,
                                  const Eigen::VectorXcd& b, double phi) {
  const Complex phase = std::polar(1.0, phi);
  double worst = 0.0;
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    worst = std::max(worst, std::abs(a(k) - phase * b(k)));
  }
  return worst;
}

}  // namespace detail

/// Distance between states modulo a global phase: min over |phi|=1 of
/// max_k |a_k - phi * b_k|. Zero exactly when the states agree up to a
/// global phase. The minimum is located from the least-squares overlap
/// phase plus a coarse scan, then refined by golden-section search.
inline double global_phase_distance(const StateVector& a, const StateVector& b) {
  if (a.qubits != b.qubits) {
    throw std::domain_error("global_phase_distance: qubit counts differ");
  }
  const Eigen::VectorXcd& va = a.amplitudes;
  const Eigen::VectorXcd& vb = b.amplitudes;

  double best_phi = 0.0;
  double best = detail::phase_diff_max_norm(va, vb, best_phi);

  const Complex overlap = vb.dot(va);  // <b|a>
  if (std::abs(overlap) > 1e-15) {
    const double phi = std::arg(overlap);
    const double value = detail::phase_diff_max_norm(va, vb, phi);
    if (value < best) {
      best = value;
      best_phi = phi;
    }
  }

  constexpr int kCoarse = 64;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  for (int i = 0; i < kCoarse; ++i) {
    const double phi = kTwoPi * i / kCoarse;
    const double value = detail::phase_diff_max_norm(va, vb, phi);
    if (value < best) {
      best = value;
      best_phi = phi;
    }
  }

  // Golden-section refinement around the best candidate.
  constexpr double kGolden = 0.61803398874989485;
  double lo = best_phi - kTwoPi / kCoarse;
  double hi = best_phi + kTwoPi / kCoarse;
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = detail::phase_diff_max_norm(va, vb, x1);
  double f2 = detail::phase_diff_max_norm(va, vb, x2);
  for (int iter = 0; iter < 90; ++iter) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = detail::phase_diff_max_norm(va, vb, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = detail::phase_diff_max_norm(va, vb, x2);
    }
  }
  return std::min(best, std::min(f1, f2));
}

}  // namespace qhop
