#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qhop {

enum class LatticeShape { kHypercubic, kHypercubeGraph };

/// d-dimensional hypercubic lattice of side l, or the d-hypercube graph
/// (vertices = bit patterns, edges = single-bit flips). The hypercube graph
/// is the side-2 hypercubic lattice with vertex labels read as base-2
/// coordinates, so both shapes share the same row-major site ordering:
/// index = sum_k x_k * l^k.
struct LatticeGeometry {
  LatticeShape shape = LatticeShape::kHypercubic;
  std::size_t dim = 1;
  std::size_t side = 2;

  static LatticeGeometry hypercubic(std::size_t d, std::size_t l) {
    if (d == 0) throw std::domain_error("LatticeGeometry: dimension must be positive");
    if (l < 2) throw std::domain_error("LatticeGeometry: side length must be at least 2");
    LatticeGeometry g;
    g.shape = LatticeShape::kHypercubic;
    g.dim = d;
    g.side = l;
    (void)g.site_count();  // overflow check
    return g;
  }

  static LatticeGeometry hypercube_graph(std::size_t d) {
    if (d == 0) throw std::domain_error("LatticeGeometry: dimension must be positive");
    if (d > 30) throw std::length_error("LatticeGeometry: hypercube dimension too large");
    LatticeGeometry g;
    g.shape = LatticeShape::kHypercubeGraph;
    g.dim = d;
    g.side = 2;
    return g;
  }

  std::size_t site_count() const {
    std::size_t count = 1;
    for (std::size_t k = 0; k < dim; ++k) {
      if (count > (std::size_t{1} << 40) / side) {
        throw std::length_error("LatticeGeometry: site count overflow");
      }
      count *= side;
    }
    return count;
  }

  /// l^axis, the index stride of a step along the given axis.
  std::size_t axis_stride(std::size_t axis) const {
    std::size_t stride = 1;
    for (std::size_t k = 0; k < axis; ++k) stride *= side;
    return stride;
  }
};

inline std::size_t site_index(std::span<const std::size_t> coords,
                              const LatticeGeometry& geometry) {
  if (coords.size() != geometry.dim) {
    throw std::domain_error("site_index: coordinate count does not match dimension");
  }
  std::size_t index = 0;
  std::size_t stride = 1;
  for (std::size_t k = 0; k < geometry.dim; ++k) {
    if (coords[k] >= geometry.side) {
      throw std::domain_error("site_index: coordinate out of range");
    }
    index += coords[k] * stride;
    stride *= geometry.side;
  }
  return index;
}

inline std::size_t site_index(std::initializer_list<std::size_t> coords,
                              const LatticeGeometry& geometry) {
  return site_index(std::span<const std::size_t>(coords.begin(), coords.size()),
                    geometry);
}

inline std::vector<std::size_t> site_coords(std::size_t index,
                                            const LatticeGeometry& geometry) {
  if (index >= geometry.site_count()) {
    throw std::domain_error("site_coords: site index out of range");
  }
  std::vector<std::size_t> coords(geometry.dim);
  for (std::size_t k = 0; k < geometry.dim; ++k) {
    coords[k] = index % geometry.side;
    index /= geometry.side;
  }
  return coords;
}

/// True when i and j are nearest neighbors (coordinates differing by one
/// along a single axis).
inline bool are_neighbors(std::size_t i, std::size_t j,
                          const LatticeGeometry& geometry) {
  if (i == j) return false;
  const auto a = site_coords(i, geometry);
  const auto b = site_coords(j, geometry);
  std::size_t differing = 0;
  for (std::size_t k = 0; k < geometry.dim; ++k) {
    if (a[k] != b[k]) {
      ++differing;
      const std::size_t lo = std::min(a[k], b[k]);
      const std::size_t hi = std::max(a[k], b[k]);
      if (hi - lo != 1) return false;
    }
  }
  return differing == 1;
}

/// Axis along which a nearest-neighbor pair differs.
inline std::size_t edge_axis(std::size_t i, std::size_t j,
                             const LatticeGeometry& geometry) {
  if (!are_neighbors(i, j, geometry)) {
    throw std::domain_error("edge_axis: sites are not nearest neighbors");
  }
  const auto a = site_coords(i, geometry);
  const auto b = site_coords(j, geometry);
  for (std::size_t k = 0; k < geometry.dim; ++k) {
    if (a[k] != b[k]) return k;
  }
  throw std::logic_error("edge_axis: unreachable");
}

/// All nearest-neighbor edges as (i, j) with i < j, ordered by (i, axis).
inline std::vector<std::pair<std::size_t, std::size_t>> edges(
    const LatticeGeometry& geometry) {
  const std::size_t n = geometry.site_count();
  std::vector<std::pair<std::size_t, std::size_t>> result;
  for (std::size_t i = 0; i < n; ++i) {
    const auto coords = site_coords(i, geometry);
    std::size_t stride = 1;
    for (std::size_t k = 0; k < geometry.dim; ++k) {
      if (coords[k] + 1 < geometry.side) {
        result.emplace_back(i, i + stride);
      }
      stride *= geometry.side;
    }
  }
  return result;
}

}  // namespace qhop
