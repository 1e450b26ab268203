#include <omp.h>

#include <algorithm>

#include "geomapf/kernels.hpp"
#include "kernels_detail.hpp"

namespace geomapf::kernels {

NeighborLists knn_free_neighbors_parallel(std::span<const Point2> points, int k, const ObstacleSet& obs,
                                          AgentRadius r) {
    const auto n = static_cast<std::ptrdiff_t>(points.size());
    NeighborLists lists(points.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t v = 0; v < n; ++v) {
        lists[static_cast<std::size_t>(v)] =
            detail::knn_free_neighbors_of(points, static_cast<VertexId>(v), k, obs, r);
    }
    return lists;
}

int count_conflicts_parallel(const Solution& solution, const Roadmap& roadmap, AgentRadius r) {
    const int last = std::max(horizon(solution), 1);
    int total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (int t = 1; t <= last; ++t) {
        total += detail::count_conflicts_at(solution, roadmap, r, t);
    }
    return total;
}

}  // namespace geomapf::kernels
