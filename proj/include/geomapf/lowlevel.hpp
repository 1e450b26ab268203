#pragma once

#include <limits>
#include <span>
#include <vector>

#include "geomapf/path.hpp"
#include "geomapf/roadmap.hpp"

namespace geomapf {

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Exact hop counts to `goal` along directed edges; kUnreachable otherwise.
[[nodiscard]] std::vector<int> reverse_bfs_dists(const Roadmap& roadmap, VertexId goal);

enum class PlanStatus {
    Found,
    /// The goal is reachable in the graph, but not within t_cap under the constraints.
    CapExhausted,
    /// No directed path from start to goal at all.
    Unreachable,
};

struct PlanResult {
    PlanStatus status = PlanStatus::Unreachable;
    Path path;
    long expansions = 0;

    [[nodiscard]] bool found() const { return status == PlanStatus::Found; }
};

/// |V| + |constraints| + max finite hop distance + latest constraint time.
/// Any feasible path implies one arriving within this cap.
[[nodiscard]] int default_time_cap(const Roadmap& roadmap, std::span<const Constraint> constraints,
                                   std::span<const int> goal_dists);

/// Minimum-arrival space-time A* from start to goal. Moves follow roadmap
/// edges (waiting needs a self-loop) and cost one step each. Constraints
/// forbid (vertex, time) occupancy; the agent may only finish at the goal
/// at step t if no constraint touches the goal at any step >= t.
/// The constraints' agent field is not inspected: callers pass only the
/// planned agent's constraints.
[[nodiscard]] PlanResult plan_spacetime(const Roadmap& roadmap, VertexId start, VertexId goal,
                                        std::span<const Constraint> constraints, std::span<const int> goal_dists,
                                        int t_cap);

/// Convenience overload computing distances and the default cap.
[[nodiscard]] PlanResult plan_spacetime(const Roadmap& roadmap, VertexId start, VertexId goal,
                                        std::span<const Constraint> constraints);

}  // namespace geomapf
