#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qhop/fock.hpp"
#include "qhop/gates.hpp"
#include "qhop/jw.hpp"
#include "qhop/lattice.hpp"
#include "qhop/state.hpp"

namespace qhop {

enum class Backend { kNative, kJordanWigner };

struct EvolutionSpec {
  double t = 1.0;
  std::size_t steps = 1;
  Backend backend = Backend::kNative;
};

/// A nearest-neighbor lattice Hamiltonian: geometry plus hop, conditional-hop
/// and number terms. Immutable after construction; every term moves or counts
/// particles, so total particle number is conserved.
struct HoppingHamiltonian {
  LatticeGeometry geometry;
  std::vector<FockOperatorTerm> terms;
};

struct EvolveResult {
  StateVector state;
  std::size_t native_ops = 0;        // one unit per term application
  std::size_t jw_weight_total = 0;   // sum of compiled gate weights
};

/// Dense Hamiltonian matrix (sum of term matrices) on the full Fock space.
inline Eigen::MatrixXcd hamiltonian_matrix(const HoppingHamiltonian& h) {
  const std::size_t n = h.geometry.site_count();
  detail::check_dense_capacity(n, 14, "hamiltonian_matrix");
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (const FockOperatorTerm& term : h.terms) {
    m += build_operator_matrix(term, n);
  }
  return m;
}

/// First-order Trotter product: `steps` sweeps over the terms in order, each
/// applied with angle coefficient * t / steps. The native backend applies
/// terms as Fock-space gates at one cost unit each; the Jordan-Wigner backend
/// applies the compiled qubit sequence at its summed gate weight. Both cost
/// counters are returned regardless of which backend evolved the state.
inline EvolveResult trotter_evolve(const StateVector& state,
                                   const HoppingHamiltonian& h,
                                   const EvolutionSpec& spec) {
  const std::size_t n = h.geometry.site_count();
  if (state.qubits != n) {
    throw std::domain_error("trotter_evolve: state dimension does not match site count");
  }
  if (spec.steps == 0) {
    throw std::domain_error("trotter_evolve: steps must be at least 1");
  }
  if (!std::isfinite(spec.t)) {
    throw std::domain_error("trotter_evolve: evolution time must be finite");
  }

  // Compile once per term; the per-step angle is the same every sweep.
  std::vector<std::vector<CompiledGate>> compiled;
  std::vector<double> angles;
  std::size_t sweep_weight = 0;
  compiled.reserve(h.terms.size());
  for (const FockOperatorTerm& term : h.terms) {
    const double theta = term.coefficient * spec.t / static_cast<double>(spec.steps);
    angles.push_back(theta);
    compiled.push_back(jw_compile(term, h.geometry, theta));
    for (const CompiledGate& g : compiled.back()) sweep_weight += g.weight();
  }

  EvolveResult result;
  result.state = state;
  for (std::size_t step = 0; step < spec.steps; ++step) {
    for (std::size_t k = 0; k < h.terms.size(); ++k) {
      if (spec.backend == Backend::kNative) {
        result.state = native_hop_gate(result.state, h.terms[k], angles[k]);
      } else {
        result.state = apply_gates(std::move(result.state), compiled[k]);
      }
    }
  }
  result.native_ops = spec.steps * h.terms.size();
  result.jw_weight_total = spec.steps * sweep_weight;
  return result;
}

/// Applies exp(-i H t) through a dense Hermitian eigendecomposition.
/// Independent of the Trotter/gate path; capped at 12 sites.
inline StateVector exact_evolve(const StateVector& state,
                                const HoppingHamiltonian& h, double t) {
  const std::size_t n = h.geometry.site_count();
  detail::check_dense_capacity(n, 12, "exact_evolve");
  if (state.qubits != n) {
    throw std::domain_error("exact_evolve: state dimension does not match site count");
  }

  const Eigen::MatrixXcd m = hamiltonian_matrix(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("exact_evolve: eigendecomposition failed");
  }
  Eigen::VectorXcd v = solver.eigenvectors().adjoint() * state.amplitudes;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    v(k) *= std::polar(1.0, -solver.eigenvalues()(k) * t);
  }
  StateVector out;
  out.qubits = state.qubits;
  out.amplitudes = solver.eigenvectors() * v;
  return out;
}

/// Probability weight outside the particle-number sector of the given count.
/// Evolution must keep this at zero: every Hamiltonian term conserves the
/// total occupation.
inline double sector_leakage(const StateVector& state, std::size_t particle_count) {
  double leak = 0.0;
  for (std::size_t word = 0; word < state.dimension(); ++word) {
    if (static_cast<std::size_t>(std::popcount(word)) != particle_count) {
      leak += std::norm(state.amplitudes(static_cast<Eigen::Index>(word)));
    }
  }
  return leak;
}

}  // namespace qhop
