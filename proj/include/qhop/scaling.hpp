#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qhop/jw.hpp"
#include "qhop/lattice.hpp"

namespace qhop {

/// One benchmark row: the phase-string length and compiled gate weight of a
/// nearest-neighbor hop along `axis` on the (d, l) lattice.
struct GateCostRow {
  std::size_t d = 0;
  std::size_t l = 0;
  std::size_t axis = 0;
  std::size_t string_length = 0;    // l^axis - 1 under row-major ordering
  std::size_t compiled_weight = 0;  // string_length + 2
};

struct GateCostSummary {
  std::size_t d = 0;
  std::size_t l = 0;
  std::size_t worst_string_length = 0;
  std::size_t expected_worst = 0;  // l^(d-1) - 1
  std::size_t term_count = 0;      // edges, the serial sweep factor
  bool ok = false;
};

struct GateCostReport {
  std::vector<GateCostRow> rows;
  std::vector<GateCostSummary> summaries;

  bool all_ok() const {
    for (const GateCostSummary& s : summaries) {
      if (!s.ok) return false;
    }
    return true;
  }
};

inline constexpr std::size_t kScalingSiteCap = std::size_t{1} << 20;

namespace detail {

inline void scaling_rows_for(const LatticeGeometry& geometry,
                             GateCostReport& report) {
  if (geometry.site_count() > kScalingSiteCap) {
    throw std::length_error("gate_count_scaling: site count exceeds enumeration cap");
  }

  // Enumerate every nearest-neighbor edge and fold the per-axis string
  // lengths; row-major ordering makes them constant along each axis, which
  // the enumeration double-checks.
  std::vector<std::size_t> per_axis(geometry.dim, 0);
  std::vector<bool> axis_seen(geometry.dim, false);
  std::size_t worst = 0;
  std::size_t edge_count = 0;
  for (const auto& [i, j] : edges(geometry)) {
    const std::size_t axis = edge_axis(i, j, geometry);
    const std::size_t len = jw_string_length(i, j, geometry);
    if (axis_seen[axis] && per_axis[axis] != len) {
      throw std::logic_error("gate_count_scaling: axis string length not constant");
    }
    per_axis[axis] = len;
    axis_seen[axis] = true;
    worst = std::max(worst, len);
    ++edge_count;
  }

  for (std::size_t axis = 0; axis < geometry.dim; ++axis) {
    if (!axis_seen[axis]) continue;  // side-2 lattices have every axis; keep the guard anyway
    GateCostRow row;
    row.d = geometry.dim;
    row.l = geometry.side;
    row.axis = axis;
    row.string_length = per_axis[axis];
    row.compiled_weight = per_axis[axis] + 2;
    report.rows.push_back(row);
  }

  GateCostSummary summary;
  summary.d = geometry.dim;
  summary.l = geometry.side;
  summary.worst_string_length = worst;
  summary.expected_worst = geometry.axis_stride(geometry.dim - 1) - 1;  // l^(d-1) - 1
  summary.term_count = edge_count;
  summary.ok = (worst == summary.expected_worst);
  report.summaries.push_back(summary);
}

}  // namespace detail

/// Enumerates nearest-neighbor hops on hypercubic lattices of dimension d for
/// each side length, recording per-axis Z-string lengths and compiled gate
/// weights, and checks that the worst string length is exactly l^(d-1) - 1.
inline GateCostReport gate_count_scaling(std::size_t d,
                                         const std::vector<std::size_t>& l_values) {
  GateCostReport report;
  for (std::size_t l : l_values) {
    detail::scaling_rows_for(LatticeGeometry::hypercubic(d, l), report);
  }
  return report;
}

/// Same enumeration for hypercube graphs (side-2 lattices), one per dimension;
/// the worst string length is 2^(d-1) - 1.
inline GateCostReport gate_count_scaling_hypercube(
    const std::vector<std::size_t>& d_values) {
  GateCostReport report;
  for (std::size_t d : d_values) {
    detail::scaling_rows_for(LatticeGeometry::hypercube_graph(d), report);
  }
  return report;
}

}  // namespace qhop
