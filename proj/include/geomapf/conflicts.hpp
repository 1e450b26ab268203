#pragma once

#include <optional>
#include <utility>

#include "geomapf/geometry.hpp"
#include "geomapf/path.hpp"
#include "geomapf/roadmap.hpp"

namespace geomapf {

/// Agents i < j whose step-t edges (from_i -> to_i) and (from_j -> to_j)
/// sweep overlapping discs.
struct Conflict {
    int i = 0;
    int j = 0;
    int t = 0;
    VertexId from_i = 0;
    VertexId from_j = 0;
    VertexId to_i = 0;
    VertexId to_j = 0;

    friend bool operator==(const Conflict&, const Conflict&) = default;
};

/// Scans t = 1..max(horizon, 1), then pairs (i, j) with i < j, with paths
/// extended by staying at their last vertex. Returns the first conflict in
/// (t, i, j) order.
[[nodiscard]] std::optional<Conflict> detect_first_conflict(const Solution& solution, const Roadmap& roadmap,
                                                            AgentRadius r);

/// Number of conflicting (t, i, j) triples over the same horizon.
[[nodiscard]] int count_conflicts(const Solution& solution, const Roadmap& roadmap, AgentRadius r);

/// (i, to_i, t) and (j, to_j, t): destination vertices only.
[[nodiscard]] std::pair<Constraint, Constraint> split_conflict(const Conflict& c);

}  // namespace geomapf
