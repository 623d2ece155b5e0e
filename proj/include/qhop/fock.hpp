#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhop/state.hpp"

namespace qhop {

enum class TermKind { kHop, kConditionalHop, kNumber };

/// One second-quantized term of a lattice Hamiltonian: a Hermitian-symmetrized
/// hop c*(a_i^dag a_j + a_j^dag a_i), the same hop projected onto a set of
/// occupied control sites, or a (possibly controlled) number operator c*n_i.
struct FockOperatorTerm {
  TermKind kind = TermKind::kHop;
  std::size_t site_i = 0;
  std::size_t site_j = 0;  // ignored for kNumber
  std::vector<std::size_t> controls;
  double coefficient = 1.0;

  static FockOperatorTerm hop(std::size_t i, std::size_t j, double c = 1.0) {
    FockOperatorTerm t;
    t.kind = TermKind::kHop;
    t.site_i = i;
    t.site_j = j;
    t.coefficient = c;
    return t;
  }

  static FockOperatorTerm conditional_hop(std::size_t i, std::size_t j,
                                          std::vector<std::size_t> controls,
                                          double c = 1.0) {
    FockOperatorTerm t;
    t.kind = TermKind::kConditionalHop;
    t.site_i = i;
    t.site_j = j;
    t.controls = std::move(controls);
    t.coefficient = c;
    return t;
  }

  static FockOperatorTerm number(std::size_t i, double c = 1.0,
                                 std::vector<std::size_t> controls = {}) {
    FockOperatorTerm t;
    t.kind = TermKind::kNumber;
    t.site_i = i;
    t.controls = std::move(controls);
    t.coefficient = c;
    return t;
  }

  bool is_hop() const { return kind != TermKind::kNumber; }
};

inline void validate_term(const FockOperatorTerm& term, std::size_t m_sites) {
  if (term.site_i >= m_sites) {
    throw std::domain_error("FockOperatorTerm: site index out of range");
  }
  if (term.is_hop()) {
    if (term.site_j >= m_sites) {
      throw std::domain_error("FockOperatorTerm: site index out of range");
    }
    if (term.site_i == term.site_j) {
      throw std::domain_error("FockOperatorTerm: hop sites must differ");
    }
    if (term.kind == TermKind::kConditionalHop && term.controls.empty()) {
      throw std::domain_error("FockOperatorTerm: conditional hop needs controls");
    }
    if (term.kind == TermKind::kHop && !term.controls.empty()) {
      throw std::domain_error("FockOperatorTerm: plain hop takes no controls");
    }
  }
  std::vector<std::size_t> seen = term.controls;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::domain_error("FockOperatorTerm: duplicate control sites");
  }
  for (std::size_t c : seen) {
    if (c >= m_sites) {
      throw std::domain_error("FockOperatorTerm: control index out of range");
    }
    if (c == term.site_i || (term.is_hop() && c == term.site_j)) {
      throw std::domain_error("FockOperatorTerm: controls must be disjoint from sites");
    }
  }
}

namespace detail {

inline std::size_t occupied_below(std::size_t word, std::size_t site) {
  const std::size_t mask = (std::size_t{1} << site) - 1;
  return static_cast<std::size_t>(std::popcount(word & mask));
}

/// Sign picked up moving a fermion between sites i and j of the occupation
/// word: parity of the occupied sites strictly between them in the ordering.
inline double fermi_string_sign(std::size_t word, std::size_t i, std::size_t j) {
  const std::size_t lo = std::min(i, j);
  const std::size_t hi = std::max(i, j);
  const std::size_t between =
      ((std::size_t{1} << hi) - 1) & ~((std::size_t{1} << (lo + 1)) - 1);
  return (std::popcount(word & between) & 1) ? -1.0 : 1.0;
}

inline std::size_t control_mask(const std::vector<std::size_t>& controls) {
  std::size_t mask = 0;
  for (std::size_t c : controls) mask |= std::size_t{1} << c;
  return mask;
}

inline void check_dense_capacity(std::size_t m_sites, std::size_t cap,
                                 const char* who) {
  if (m_sites == 0) throw std::domain_error(std::string(who) + ": need at least one site");
  if (m_sites > cap) {
    throw std::length_error(std::string(who) + ": dense construction capped at " +
                            std::to_string(cap) + " sites");
  }
}

}  // namespace detail

/// Dense matrix of the annihilation operator a_site in the occupation basis,
/// with sign convention a_i|..s_i=1..> = (-1)^(sum_{j<i} s_j) |..s_i=0..> and
/// site 0 as the least significant bit.
inline Eigen::MatrixXcd annihilation_matrix(std::size_t site, std::size_t m_sites) {
  detail::check_dense_capacity(m_sites, 14, "annihilation_matrix");
  if (site >= m_sites) {
    throw std::domain_error("annihilation_matrix: site index out of range");
  }
  const std::size_t dim = std::size_t{1} << m_sites;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  const std::size_t bit = std::size_t{1} << site;
  for (std::size_t word = 0; word < dim; ++word) {
    if (word & bit) {
      const double sign = (detail::occupied_below(word, site) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(word ^ bit), static_cast<Eigen::Index>(word)) = sign;
    }
  }
  return m;
}

inline Eigen::MatrixXcd creation_matrix(std::size_t site, std::size_t m_sites) {
  return annihilation_matrix(site, m_sites).adjoint();
}

/// Dense matrix of a Hermitian-symmetrized term on the 2^m_sites Fock space.
/// Conditional terms are multiplied by the projector onto all controls
/// occupied (the projector commutes with the hop since controls are disjoint
/// from the hop sites).
inline Eigen::MatrixXcd build_operator_matrix(const FockOperatorTerm& term,
                                              std::size_t m_sites) {
  detail::check_dense_capacity(m_sites, 14, "build_operator_matrix");
  validate_term(term, m_sites);

  const std::size_t dim = std::size_t{1} << m_sites;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  const std::size_t cmask = detail::control_mask(term.controls);

  if (term.kind == TermKind::kNumber) {
    const std::size_t bit = std::size_t{1} << term.site_i;
    for (std::size_t word = 0; word < dim; ++word) {
      if ((word & bit) && (word & cmask) == cmask) {
        m(static_cast<Eigen::Index>(word), static_cast<Eigen::Index>(word)) =
            term.coefficient;
      }
    }
    return m;
  }

  const std::size_t bi = std::size_t{1} << term.site_i;
  const std::size_t bj = std::size_t{1} << term.site_j;
  for (std::size_t word = 0; word < dim; ++word) {
    if ((word & cmask) != cmask) continue;
    // a_i^dag a_j moves |..s_j=1, s_i=0..> to |..s_j=0, s_i=1..>.
    if ((word & bj) && !(word & bi)) {
      const std::size_t moved = (word ^ bj) | bi;
      const double sign =
          detail::fermi_string_sign(word, term.site_i, term.site_j);
      m(static_cast<Eigen::Index>(moved), static_cast<Eigen::Index>(word)) =
          term.coefficient * sign;
      m(static_cast<Eigen::Index>(word), static_cast<Eigen::Index>(moved)) =
          term.coefficient * sign;
    }
  }
  return m;
}

/// Max-norm of {a_i, a_j^dag} - delta_ij * I, computed from dense operator
/// matrices. Zero for the canonical anticommutation relations.
inline double anticommutator_deviation(std::size_t i, std::size_t j,
                                       std::size_t m_sites) {
  detail::check_dense_capacity(m_sites, 10, "anticommutator_deviation");
  if (i >= m_sites || j >= m_sites) {
    throw std::domain_error("anticommutator_deviation: site index out of range");
  }
  const Eigen::MatrixXcd ai = annihilation_matrix(i, m_sites);
  const Eigen::MatrixXcd aj_dag = creation_matrix(j, m_sites);
  Eigen::MatrixXcd anti = ai * aj_dag + aj_dag * ai;
  if (i == j) {
    anti -= Eigen::MatrixXcd::Identity(anti.rows(), anti.cols());
  }
  return anti.cwiseAbs().maxCoeff();
}

/// Applies exp(-i theta (a_i^dag a_j + a_j^dag a_i)) restricted to basis
/// states whose controls are all occupied, exactly: each hop-connected basis
/// pair receives the 2x2 rotation [[cos, -i s sin], [-i s sin, cos]] with
/// s the fermionic string sign between the sites. Number terms receive the
/// corresponding occupancy phase exp(-i theta). Counts as one operation in
/// the native cost model.
inline StateVector native_hop_gate(const StateVector& state,
                                   const FockOperatorTerm& term, double theta) {
  validate_term(term, state.qubits);

  const std::size_t dim = state.dimension();
  const std::size_t cmask = detail::control_mask(term.controls);
  StateVector out = state;
  Eigen::VectorXcd& amps = out.amplitudes;

  if (term.kind == TermKind::kNumber) {
    const Complex phase = std::polar(1.0, -theta);
    const std::size_t bit = std::size_t{1} << term.site_i;
    for (std::size_t word = 0; word < dim; ++word) {
      if ((word & bit) && (word & cmask) == cmask) {
        amps(static_cast<Eigen::Index>(word)) *= phase;
      }
    }
    return out;
  }

  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const std::size_t bi = std::size_t{1} << term.site_i;
  const std::size_t bj = std::size_t{1} << term.site_j;
  for (std::size_t word = 0; word < dim; ++word) {
    if (!(word & bi) || (word & bj)) continue;  // visit each pair once, from the i side
    if ((word & cmask) != cmask) continue;
    const std::size_t partner = (word ^ bi) | bj;
    const double sign = detail::fermi_string_sign(word, term.site_i, term.site_j);
    const Complex off{0.0, -sign * s};
    const Complex u = amps(static_cast<Eigen::Index>(word));
    const Complex v = amps(static_cast<Eigen::Index>(partner));
    amps(static_cast<Eigen::Index>(word)) = c * u + off * v;
    amps(static_cast<Eigen::Index>(partner)) = c * v + off * u;
  }
  return out;
}

}  // namespace qhop
