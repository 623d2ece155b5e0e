#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qhop/fock.hpp"
#include "qhop/gates.hpp"
#include "qhop/lattice.hpp"

namespace qhop {

/// Number of sites strictly between i and j in the row-major site ordering:
/// |i - j| - 1. For a nearest-neighbor hop along axis k this is l^k - 1 on a
/// hypercubic lattice and 2^k - 1 on the hypercube graph, which is what makes
/// the qubit-side cost of a fermionic hop grow with the lattice cross-section.
inline std::size_t jw_string_length(std::size_t i, std::size_t j,
                                    const LatticeGeometry& geometry) {
  const std::size_t n = geometry.site_count();
  if (i >= n || j >= n) {
    throw std::domain_error("jw_string_length: site index out of range");
  }
  if (i == j) {
    throw std::domain_error("jw_string_length: sites must differ");
  }
  return (i > j ? i - j : j - i) - 1;
}

namespace detail {

/// Matchgate rotation exp(-i theta (XX + YY)/2): identity on the equal-bit
/// subspace, the matched 2x2 rotation on the hop pair. Unit determinant.
inline Eigen::Matrix4cd matched_rotation(double theta) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  const double c = std::cos(theta);
  const Complex off{0.0, -std::sin(theta)};
  m(1, 1) = c;
  m(2, 2) = c;
  m(1, 2) = off;
  m(2, 1) = off;
  return m;
}

/// Parity phase rotation exp(-i alpha Z_t0 Z_s1 ... Z_sk), realized as the
/// single-site matrix diag(e^{-i alpha}, e^{i alpha}) on t0 coupled to the
/// remaining sites through the gate's phase string.
inline CompiledGate parity_phase_rotation(const std::vector<std::size_t>& sites,
                                          double alpha) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::polar(1.0, -alpha);
  m(1, 1) = std::polar(1.0, alpha);
  std::vector<std::size_t> rest(sites.begin() + 1, sites.end());
  return make_single_gate(sites.front(), m, std::move(rest));
}

inline std::vector<std::size_t> symmetric_difference(
    std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  for (std::size_t s : b) {
    auto it = std::find(a.begin(), a.end(), s);
    if (it == a.end()) {
      a.push_back(s);
    } else {
      a.erase(it);
    }
  }
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace detail

/// Compiles one fermionic term into the qubit gate set of qhop/gates.hpp.
///
/// A hop between ordering-adjacent sites becomes a bare two-site matched
/// rotation; a hop across the ordering becomes the same rotation coupled to
/// the Pauli-Z string over every site strictly between the endpoints, which
/// is exactly the phase bookkeeping the occupation-basis encoding demands.
/// Occupancy controls are compiled as qubit controls by expanding each
/// control projector (1 - Z)/2, yielding 2^|controls| commuting gates with
/// angles +-theta/2^|controls|. Number terms expand the same way into parity
/// phase rotations. The emitted sequence reproduces native_hop_gate exactly,
/// not approximately.
inline std::vector<CompiledGate> jw_compile(const FockOperatorTerm& term,
                                            const LatticeGeometry& geometry,
                                            double theta) {
  const std::size_t n = geometry.site_count();
  validate_term(term, n);

  std::vector<CompiledGate> gates;

  if (term.kind == TermKind::kNumber) {
    // exp(-i theta n_i P_C) with n = (1 - Z)/2 expanded over subsets of
    // {i} union controls. The empty-subset global phase folds into the
    // first emitted gate.
    std::vector<std::size_t> support{term.site_i};
    support.insert(support.end(), term.controls.begin(), term.controls.end());
    std::sort(support.begin(), support.end());
    const std::size_t k = support.size();
    const double base = theta / static_cast<double>(std::size_t{1} << k);
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t b = 0; b < k; ++b) {
        if (mask & (std::size_t{1} << b)) subset.push_back(support[b]);
      }
      const double alpha =
          (std::popcount(mask) & 1) ? -base : base;
      gates.push_back(detail::parity_phase_rotation(subset, alpha));
    }
    const Complex fold = std::polar(1.0, -base);  // empty-subset phase
    gates.front().matrix *= fold;
    return gates;
  }

  if (!are_neighbors(term.site_i, term.site_j, geometry)) {
    throw std::domain_error("jw_compile: hop sites must be lattice neighbors");
  }

  const std::size_t lo = std::min(term.site_i, term.site_j);
  const std::size_t hi = std::max(term.site_i, term.site_j);
  std::vector<std::size_t> string;
  for (std::size_t s = lo + 1; s < hi; ++s) string.push_back(s);

  const std::size_t nc = term.controls.size();
  const double base = theta / static_cast<double>(std::size_t{1} << nc);
  for (std::size_t mask = 0; mask < (std::size_t{1} << nc); ++mask) {
    std::vector<std::size_t> toggled;
    for (std::size_t b = 0; b < nc; ++b) {
      if (mask & (std::size_t{1} << b)) toggled.push_back(term.controls[b]);
    }
    const double angle = (std::popcount(mask) & 1) ? -base : base;
    gates.push_back(make_two_site_gate(
        lo, hi, detail::matched_rotation(angle),
        detail::symmetric_difference(string, toggled)));
  }
  return gates;
}

}  // namespace qhop
