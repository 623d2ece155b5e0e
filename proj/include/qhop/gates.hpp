#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qhop/state.hpp"

namespace qhop {

enum class GateKind { kSingle, kTwoSite, kZStringPhase };

/// A gate in the compiled (qubit-side) gate set: a 2x2 or 4x4 matrix on one
/// or two target qubits, optionally coupled to a Pauli-Z parity string over
/// further qubits. Gates touching more than two qubits are only ever
/// represented this way, never as dense 2^w matrices, so the qubit weight of
/// every operation stays explicit.
///
/// String semantics: writing matrix = e^{i phi} * exp(-i H) with H traceless
/// Hermitian, a gate with string sites s1..sk applies
///     e^{i phi} * exp(-i H (x) Z_{s1} ... Z_{sk}),
/// i.e. basis states with even string occupancy receive `matrix` and odd
/// ones receive the angle-reversed branch. For a 2x2 matrix that branch is
/// det(matrix) * matrix^dagger (so Pauli matrices reduce to the plain tensor
/// product matrix (x) Z ... Z); a 4x4 matrix with a string must have unit
/// determinant and the odd branch is matrix^dagger. A kZStringPhase gate has
/// no matrix and applies the bare parity sign (-1)^(occupied string sites).
struct CompiledGate {
  GateKind kind = GateKind::kSingle;
  std::vector<std::size_t> targets;
  std::vector<std::size_t> z_string;
  Eigen::MatrixXcd matrix;

  std::size_t weight() const { return targets.size() + z_string.size(); }
};

inline CompiledGate make_single_gate(std::size_t target, Eigen::Matrix2cd m,
                                     std::vector<std::size_t> z_string = {}) {
  CompiledGate g;
  g.kind = GateKind::kSingle;
  g.targets = {target};
  g.z_string = std::move(z_string);
  g.matrix = std::move(m);
  return g;
}

inline CompiledGate make_two_site_gate(std::size_t t0, std::size_t t1,
                                       Eigen::Matrix4cd m,
                                       std::vector<std::size_t> z_string = {}) {
  CompiledGate g;
  g.kind = GateKind::kTwoSite;
  g.targets = {t0, t1};
  g.z_string = std::move(z_string);
  g.matrix = std::move(m);
  return g;
}

inline CompiledGate make_z_string_phase(std::vector<std::size_t> z_string) {
  CompiledGate g;
  g.kind = GateKind::kZStringPhase;
  g.z_string = std::move(z_string);
  return g;
}

inline double unitarity_deviation(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd residual =
      m * m.adjoint() - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return residual.cwiseAbs().maxCoeff();
}

namespace detail {

inline void check_gate(const StateVector& state, const CompiledGate& gate) {
  const std::size_t m = state.qubits;
  std::vector<std::size_t> seen;
  for (std::size_t t : gate.targets) {
    if (t >= m) throw std::domain_error("apply_gate: target index out of range");
    seen.push_back(t);
  }
  for (std::size_t s : gate.z_string) {
    if (s >= m) throw std::domain_error("apply_gate: z_string index out of range");
    seen.push_back(s);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::domain_error("apply_gate: target/z_string index collision");
  }

  switch (gate.kind) {
    case GateKind::kSingle:
      if (gate.targets.size() != 1 || gate.matrix.rows() != 2 ||
          gate.matrix.cols() != 2) {
        throw std::domain_error("apply_gate: single gate needs one target and a 2x2 matrix");
      }
      break;
    case GateKind::kTwoSite:
      if (gate.targets.size() != 2 || gate.matrix.rows() != 4 ||
          gate.matrix.cols() != 4) {
        throw std::domain_error("apply_gate: two-site gate needs two targets and a 4x4 matrix");
      }
      break;
    case GateKind::kZStringPhase:
      if (!gate.targets.empty()) {
        throw std::domain_error("apply_gate: z-string phase gate takes no targets");
      }
      if (gate.z_string.empty()) {
        throw std::domain_error("apply_gate: z-string phase gate needs a nonempty string");
      }
      return;
  }

  if (unitarity_deviation(gate.matrix) > kAlgebraTol) {
    throw std::invalid_argument("apply_gate: gate matrix is not unitary");
  }
  if (gate.matrix.rows() == 4 && !gate.z_string.empty() &&
      std::abs(gate.matrix.determinant() - Complex{1.0, 0.0}) > 1e-9) {
    throw std::invalid_argument(
        "apply_gate: a string-coupled two-site gate must have unit determinant");
  }
}

inline std::size_t bit_mask(const std::vector<std::size_t>& sites) {
  std::size_t mask = 0;
  for (std::size_t s : sites) mask |= std::size_t{1} << s;
  return mask;
}

}  // namespace detail

inline StateVector apply_gate(const StateVector& state, const CompiledGate& gate) {
  detail::check_gate(state, gate);

  const std::size_t dim = state.dimension();
  const std::size_t zmask = detail::bit_mask(gate.z_string);
  StateVector out = state;
  Eigen::VectorXcd& amps = out.amplitudes;

  if (gate.kind == GateKind::kZStringPhase) {
    for (std::size_t idx = 0; idx < dim; ++idx) {
      if (std::popcount(idx & zmask) & 1) amps(static_cast<Eigen::Index>(idx)) = -amps(static_cast<Eigen::Index>(idx));
    }
    return out;
  }

  if (gate.kind == GateKind::kSingle) {
    const Eigen::Matrix2cd even = gate.matrix;
    const Eigen::Matrix2cd odd =
        zmask == 0 ? even
                   : Eigen::Matrix2cd(gate.matrix.determinant() *
                                      gate.matrix.adjoint());
    const std::size_t tbit = std::size_t{1} << gate.targets[0];
    for (std::size_t idx = 0; idx < dim; ++idx) {
      if (idx & tbit) continue;
      const std::size_t hi = idx | tbit;
      const Eigen::Matrix2cd& m =
          (std::popcount(idx & zmask) & 1) ? odd : even;
      const Complex a0 = amps(static_cast<Eigen::Index>(idx));
      const Complex a1 = amps(static_cast<Eigen::Index>(hi));
      amps(static_cast<Eigen::Index>(idx)) = m(0, 0) * a0 + m(0, 1) * a1;
      amps(static_cast<Eigen::Index>(hi)) = m(1, 0) * a0 + m(1, 1) * a1;
    }
    return out;
  }

  // kTwoSite: matrix rows/cols ordered by bit(targets[0]) + 2*bit(targets[1]).
  const Eigen::Matrix4cd even = gate.matrix;
  const Eigen::Matrix4cd odd =
      zmask == 0 ? even : Eigen::Matrix4cd(gate.matrix.adjoint());
  const std::size_t b0 = std::size_t{1} << gate.targets[0];
  const std::size_t b1 = std::size_t{1} << gate.targets[1];
  for (std::size_t idx = 0; idx < dim; ++idx) {
    if (idx & (b0 | b1)) continue;
    const std::size_t i00 = idx;
    const std::size_t i01 = idx | b0;
    const std::size_t i10 = idx | b1;
    const std::size_t i11 = idx | b0 | b1;
    const Eigen::Matrix4cd& m = (std::popcount(idx & zmask) & 1) ? odd : even;
    Eigen::Vector4cd v{amps(static_cast<Eigen::Index>(i00)),
                       amps(static_cast<Eigen::Index>(i01)),
                       amps(static_cast<Eigen::Index>(i10)),
                       amps(static_cast<Eigen::Index>(i11))};
    v = m * v;
    amps(static_cast<Eigen::Index>(i00)) = v(0);
    amps(static_cast<Eigen::Index>(i01)) = v(1);
    amps(static_cast<Eigen::Index>(i10)) = v(2);
    amps(static_cast<Eigen::Index>(i11)) = v(3);
  }
  return out;
}

inline StateVector apply_gates(StateVector state,
                               const std::vector<CompiledGate>& gates) {
  for (const CompiledGate& g : gates) state = apply_gate(state, g);
  return state;
}

}  // namespace qhop
