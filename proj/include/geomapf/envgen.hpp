#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "geomapf/geometry.hpp"
#include "geomapf/roadmap.hpp"

namespace geomapf {

enum class WorldKind { Maze, Box };

struct MazeParams {
    int rows = 4;
    int cols = 4;
    double wall_thickness = 0.02;
    /// Probability that a wall not opened by the spanning tree is also removed.
    double removal_prob = 0.15;

    friend bool operator==(const MazeParams&, const MazeParams&) = default;
};

struct BoxParams {
    int count = 8;
    double min_size = 0.05;
    double max_size = 0.2;

    friend bool operator==(const BoxParams&, const BoxParams&) = default;
};

struct WorldSpec {
    WorldKind kind = WorldKind::Box;
    Rect bounds{0.0, 0.0, 1.0, 1.0};
    MazeParams maze;
    BoxParams box;
    std::uint64_t seed = 0;

    friend bool operator==(const WorldSpec&, const WorldSpec&) = default;
};

/// Raised when a generator cannot produce a valid output for its inputs.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[nodiscard]] std::string to_string(WorldKind kind);
[[nodiscard]] WorldKind parse_world_kind(const std::string& s);

/// Maze: random spanning tree over the cell grid, remaining walls dropped with
/// removal_prob, rendered as thin rectangles. Box: `count` random rectangles.
[[nodiscard]] ObstacleSet gen_world(const WorldSpec& spec);

struct RoadmapParams {
    int vertices = 100;
    int neighbors = 8;
    /// Rejection-sampling budget per requested vertex.
    int attempts_per_vertex = 1000;
};

/// Rejection-samples collision-free vertices inside `bounds` shrunk by r, links
/// each vertex to its k nearest neighbours whose connecting edge is free, and
/// adds one wait loop per vertex.
[[nodiscard]] Roadmap sample_roadmap(const ObstacleSet& obs, const Rect& bounds, const RoadmapParams& params,
                                     AgentRadius r, std::uint64_t seed);

struct Endpoints {
    std::vector<VertexId> starts;
    std::vector<VertexId> goals;
};

/// Random starts and goals: starts pairwise disc-disjoint, goals likewise,
/// each goal distinct from and reachable from its start.
[[nodiscard]] Endpoints assign_endpoints(const Roadmap& roadmap, int agents, AgentRadius r, std::uint64_t seed,
                                         int attempts = 1000);

/// Vertices reachable from `source` along directed edges.
[[nodiscard]] std::vector<bool> reachable_from(const Roadmap& roadmap, VertexId source);

}  // namespace geomapf
