#pragma once

#include <algorithm>
#include <compare>
#include <vector>

#include "geomapf/roadmap.hpp"

namespace geomapf {

/// Agent `agent` must not be at `vertex` at step `time`.
struct Constraint {
    int agent = 0;
    VertexId vertex = 0;
    int time = 0;

    friend auto operator<=>(const Constraint&, const Constraint&) = default;
};

/// Vertex sequence indexed by time step. Past the last step the agent stays
/// where it ended.
struct Path {
    std::vector<VertexId> vertices;

    [[nodiscard]] int arrival() const { return static_cast<int>(vertices.size()) - 1; }
    [[nodiscard]] VertexId at(int t) const {
        return vertices[static_cast<std::size_t>(std::clamp(t, 0, arrival()))];
    }

    friend auto operator<=>(const Path&, const Path&) = default;
};

using Solution = std::vector<Path>;

/// Sum of arrival steps.
[[nodiscard]] inline int flowtime(const Solution& solution) {
    int total = 0;
    for (const Path& p : solution) total += p.arrival();
    return total;
}

[[nodiscard]] inline int horizon(const Solution& solution) {
    int t = 0;
    for (const Path& p : solution) t = std::max(t, p.arrival());
    return t;
}

}  // namespace geomapf
