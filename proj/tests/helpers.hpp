#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "qhop/rng.hpp"
#include "qhop/state.hpp"

// Test-side linear algebra kept deliberately independent of the library's
// gate/evolution code paths: everything here goes through dense matrices.
namespace test_helpers {

using qhop::Complex;

inline Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

inline Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

inline Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

inline Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd m;
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Full 2^m x 2^m matrix of an operator given per-qubit factors, with qubit 0
/// as the least significant bit (so the kron runs from qubit m-1 down to 0).
inline Eigen::MatrixXcd embed(const std::vector<Eigen::Matrix2cd>& factors) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    out = kron(out, *it);
  }
  return out;
}

inline double normal_sample(qhop::SplitMix64& rng) {
  const double u1 = std::max(rng.next_double(), 1e-300);
  const double u2 = rng.next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

/// Haar-ish random unitary from the QR decomposition of a complex Gaussian
/// matrix with the R-diagonal phases normalized out.
inline Eigen::MatrixXcd random_unitary(Eigen::Index dim, qhop::SplitMix64& rng) {
  Eigen::MatrixXcd g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      g(i, j) = Complex(normal_sample(rng), normal_sample(rng));
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < dim; ++k) {
    q.col(k) *= r(k, k) / std::abs(r(k, k));
  }
  return q;
}

inline qhop::StateVector random_state(std::size_t qubits, qhop::SplitMix64& rng) {
  qhop::StateVector state;
  state.qubits = qubits;
  state.amplitudes.resize(static_cast<Eigen::Index>(std::size_t{1} << qubits));
  for (Eigen::Index k = 0; k < state.amplitudes.size(); ++k) {
    state.amplitudes(k) = Complex(normal_sample(rng), normal_sample(rng));
  }
  state.amplitudes /= state.amplitudes.norm();
  return state;
}

/// exp(-i H t) for Hermitian H, by eigendecomposition.
inline Eigen::MatrixXcd expm_minus_i(const Eigen::MatrixXcd& h, double t = 1.0) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  Eigen::VectorXcd phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) {
    phases(k) = std::polar(1.0, -solver.eigenvalues()(k) * t);
  }
  return solver.eigenvectors() * phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

inline qhop::StateVector apply_dense(const Eigen::MatrixXcd& u,
                                     const qhop::StateVector& state) {
  qhop::StateVector out = state;
  out.amplitudes = u * state.amplitudes;
  return out;
}

inline double max_amp_diff(const qhop::StateVector& a, const qhop::StateVector& b) {
  return (a.amplitudes - b.amplitudes).cwiseAbs().maxCoeff();
}

}  // namespace test_helpers
