#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qhop/rng.hpp"

namespace qhop {

/// Truth table of a boolean function f: {0,1}^N -> {0,1}, the counting
/// problem instance. The counting pipeline never inspects individual entries;
/// it consumes the table through consult(), a single black-box application
/// of f over all inputs at once, and the consultation counter verifies that
/// one application is all a run ever uses.
class OracleTable {
 public:
  OracleTable(std::size_t n_bits, std::vector<std::uint8_t> table)
      : n_bits_(n_bits), table_(std::move(table)) {
    if (n_bits_ > 24) {
      throw std::length_error("OracleTable: table capped at 24 input bits");
    }
    if (table_.size() != (std::size_t{1} << n_bits_)) {
      throw std::domain_error("OracleTable: table length must be 2^n_bits");
    }
    for (std::uint8_t v : table_) {
      if (v > 1) throw std::domain_error("OracleTable: entries must be 0 or 1");
    }
  }

  /// Table with f(x) = 1 exactly on the given inputs.
  static OracleTable from_solutions(std::size_t n_bits,
                                    const std::vector<std::size_t>& solutions) {
    if (n_bits > 24) {
      throw std::length_error("OracleTable: table capped at 24 input bits");
    }
    std::vector<std::uint8_t> table(std::size_t{1} << n_bits, 0);
    for (std::size_t x : solutions) {
      if (x >= table.size()) {
        throw std::domain_error("OracleTable: solution outside input range");
      }
      if (table[x]) {
        throw std::domain_error("OracleTable: duplicate solution");
      }
      table[x] = 1;
    }
    return OracleTable(n_bits, std::move(table));
  }

  /// Uniformly random table (each entry an independent fair bit).
  static OracleTable random(std::size_t n_bits, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::uint8_t> table(std::size_t{1} << n_bits);
    for (auto& v : table) v = rng.next_bool() ? 1 : 0;
    return OracleTable(n_bits, std::move(table));
  }

  std::size_t n_bits() const { return n_bits_; }
  const std::vector<std::uint8_t>& table() const { return table_; }

  /// One black-box application of f, yielding the solution count that the
  /// encoding step turns into a Bloch angle. Increments the access counter.
  std::size_t consult() const {
    ++consultations_;
    return std::accumulate(table_.begin(), table_.end(), std::size_t{0});
  }

  std::size_t consultations() const { return consultations_; }

 private:
  std::size_t n_bits_;
  std::vector<std::uint8_t> table_;
  mutable std::size_t consultations_ = 0;
};

/// Ground-truth solution count by plain enumeration. Test oracle for the
/// nonlinear counting pipeline; does not touch the consultation counter.
inline std::size_t brute_force_count(const OracleTable& oracle) {
  std::size_t count = 0;
  for (std::uint8_t v : oracle.table()) count += v;
  return count;
}

}  // namespace qhop
