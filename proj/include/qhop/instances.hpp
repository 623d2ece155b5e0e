#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qhop/evolve.hpp"
#include "qhop/io.hpp"
#include "qhop/lattice.hpp"
#include "qhop/rng.hpp"

namespace qhop {

/// The 2x2 plaquette with two fermions on the diagonal and uniform hops,
/// the stock instance for backend cross-checks and Trotter convergence
/// measurements. The coefficient is small enough that one Trotter step is
/// already in the first-order regime, and the edge ordering interleaves the
/// two dimer pairings so consecutive terms do not commute.
inline FermiInstance plaquette_instance(double coefficient = 0.35) {
  FermiInstance inst;
  inst.hamiltonian.geometry = LatticeGeometry::hypercubic(2, 2);
  for (const auto& [i, j] : edges(inst.hamiltonian.geometry)) {
    inst.hamiltonian.terms.push_back(FockOperatorTerm::hop(i, j, coefficient));
  }
  inst.initial_word = 0b1001;  // sites 0 and 3
  inst.spec.t = 1.0;
  inst.spec.steps = 100;
  return inst;
}

/// Seeded random cross-check instance on a (d, l) hypercubic lattice: one
/// term per nearest-neighbor edge (a plain hop, or with probability 1/4 a
/// hop conditioned on one random off-edge site), coefficients uniform in
/// [-1, 1], a random occupation word and a random evolution time. Chains
/// stay hop-only so every seeded 1D instance exhibits the exact
/// compiled-cost = 2 x native-cost law; control expansion would add weight
/// of its own on top. The draw order below is fixed; together with the
/// splitmix64 stream it pins every instance bit-exactly for a given seed.
inline FermiInstance random_instance(std::size_t d, std::size_t l,
                                     std::uint64_t seed) {
  SplitMix64 rng(seed);
  FermiInstance inst;
  inst.hamiltonian.geometry = LatticeGeometry::hypercubic(d, l);
  const std::size_t sites = inst.hamiltonian.geometry.site_count();

  for (const auto& [i, j] : edges(inst.hamiltonian.geometry)) {
    const double coefficient = rng.next_double(-1.0, 1.0);
    const bool conditional = d >= 2 && sites > 2 && rng.next_below(4) == 0;
    if (conditional) {
      std::size_t control = rng.next_below(sites);
      while (control == i || control == j) control = rng.next_below(sites);
      inst.hamiltonian.terms.push_back(
          FockOperatorTerm::conditional_hop(i, j, {control}, coefficient));
    } else {
      inst.hamiltonian.terms.push_back(FockOperatorTerm::hop(i, j, coefficient));
    }
  }

  inst.initial_word = rng.next_below(std::size_t{1} << sites);
  if (inst.initial_word == 0) inst.initial_word = 1;
  inst.spec.t = rng.next_double(0.3, 1.2);
  inst.spec.steps = 40;
  return inst;
}

}  // namespace qhop
