#pragma once

// Data-parallel inner loops. Each kernel has a serial reference and an OpenMP
// version that must produce identical results; the serial one is the
// reference the parallel one is tested against.

#include <span>
#include <vector>

#include "geomapf/geometry.hpp"
#include "geomapf/path.hpp"
#include "geomapf/roadmap.hpp"

namespace geomapf::kernels {

/// For every vertex, the ids of its k nearest other vertices (ordered by
/// distance, then id) whose connecting edge passes edge_free.
using NeighborLists = std::vector<std::vector<VertexId>>;

[[nodiscard]] NeighborLists knn_free_neighbors_serial(std::span<const Point2> points, int k,
                                                      const ObstacleSet& obs, AgentRadius r);
[[nodiscard]] NeighborLists knn_free_neighbors_parallel(std::span<const Point2> points, int k,
                                                        const ObstacleSet& obs, AgentRadius r);

/// Number of (t, i, j) triples, t in 1..max(horizon, 1) and i < j, whose
/// step-t edges fail swept_discs_disjoint.
[[nodiscard]] int count_conflicts_serial(const Solution& solution, const Roadmap& roadmap, AgentRadius r);
[[nodiscard]] int count_conflicts_parallel(const Solution& solution, const Roadmap& roadmap, AgentRadius r);

}  // namespace geomapf::kernels
