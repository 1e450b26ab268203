#pragma once

#include <string>
#include <vector>

#include "geomapf/instance.hpp"
#include "geomapf/path.hpp"

namespace geomapf {

struct Violation {
    enum class Kind {
        /// Wrong number of paths, empty path, or unknown vertex id.
        Structure,
        /// Path does not start at the start or end at the goal.
        Endpoint,
        /// Consecutive vertices are not joined by a roadmap edge.
        Edge,
        /// A visited vertex or traversed edge touches an obstacle.
        Obstacle,
        /// Two agents' step-t edges overlap.
        InterAgent,
    };

    Kind kind;
    int agent = -1;
    int other = -1;
    int t = -1;
    std::string message;
};

[[nodiscard]] std::string to_string(Violation::Kind kind);

/// Re-checks a solution against the instance from scratch (endpoint,
/// obstacle and inter-agent objectives). Empty means valid.
[[nodiscard]] std::vector<Violation> validate_solution(const Instance& inst, const Solution& solution);

}  // namespace geomapf
