#pragma once

#include "geomapf/kernels.hpp"

namespace geomapf::kernels::detail {

std::vector<VertexId> knn_free_neighbors_of(std::span<const Point2> points, VertexId v, int k,
                                            const ObstacleSet& obs, AgentRadius r);

int count_conflicts_at(const Solution& solution, const Roadmap& roadmap, AgentRadius r, int t);

}  // namespace geomapf::kernels::detail
