#include <algorithm>
#include <numeric>

#include "geomapf/kernels.hpp"
#include "kernels_detail.hpp"

namespace geomapf::kernels {

namespace detail {

std::vector<VertexId> knn_free_neighbors_of(std::span<const Point2> points, VertexId v, int k,
                                            const ObstacleSet& obs, AgentRadius r) {
    const auto n = static_cast<VertexId>(points.size());
    const Point2 p = points[static_cast<std::size_t>(v)];
    std::vector<VertexId> order;
    order.reserve(points.size());
    for (VertexId u = 0; u < n; ++u) {
        if (u != v) order.push_back(u);
    }
    const auto kk = std::min<std::size_t>(static_cast<std::size_t>(k), order.size());
    auto closer = [&](VertexId a, VertexId b) {
        const double da = distance(p, points[static_cast<std::size_t>(a)]);
        const double db = distance(p, points[static_cast<std::size_t>(b)]);
        return da != db ? da < db : a < b;
    };
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(kk), order.end(), closer);
    std::vector<VertexId> result;
    for (std::size_t i = 0; i < kk; ++i) {
        const VertexId u = order[i];
        if (edge_free({p, points[static_cast<std::size_t>(u)]}, obs, r)) result.push_back(u);
    }
    return result;
}

int count_conflicts_at(const Solution& solution, const Roadmap& roadmap, AgentRadius r, int t) {
    int count = 0;
    const std::size_t m = solution.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Segment2 ei = roadmap.segment(solution[i].at(t - 1), solution[i].at(t));
        for (std::size_t j = i + 1; j < m; ++j) {
            const Segment2 ej = roadmap.segment(solution[j].at(t - 1), solution[j].at(t));
            if (!swept_discs_disjoint(ei, ej, r)) ++count;
        }
    }
    return count;
}

}  // namespace detail

NeighborLists knn_free_neighbors_serial(std::span<const Point2> points, int k, const ObstacleSet& obs,
                                        AgentRadius r) {
    NeighborLists lists(points.size());
    for (std::size_t v = 0; v < points.size(); ++v) {
        lists[v] = detail::knn_free_neighbors_of(points, static_cast<VertexId>(v), k, obs, r);
    }
    return lists;
}

int count_conflicts_serial(const Solution& solution, const Roadmap& roadmap, AgentRadius r) {
    const int last = std::max(horizon(solution), 1);
    int total = 0;
    for (int t = 1; t <= last; ++t) total += detail::count_conflicts_at(solution, roadmap, r, t);
    return total;
}

}  // namespace geomapf::kernels
