#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "geomapf/geometry.hpp"

namespace geomapf {

using VertexId = std::int32_t;

struct Edge {
    VertexId src = 0;
    VertexId dst = 0;

    [[nodiscard]] bool is_wait() const { return src == dst; }
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed geometric graph. Vertex ids are dense 0..n-1; the edge list is
/// kept in insertion order and duplicate edges are rejected.
class Roadmap {
public:
    Roadmap() = default;
    /// Throws std::invalid_argument on out-of-range ids or duplicate edges.
    Roadmap(std::vector<Point2> positions, std::vector<Edge> edges);

    [[nodiscard]] std::size_t num_vertices() const { return positions_.size(); }
    [[nodiscard]] std::size_t num_edges() const { return edges_.size(); }
    [[nodiscard]] bool valid_vertex(VertexId v) const {
        return v >= 0 && static_cast<std::size_t>(v) < positions_.size();
    }

    [[nodiscard]] Point2 position(VertexId v) const { return positions_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] const std::vector<Point2>& positions() const { return positions_; }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }

    /// Successors of v (including v itself when a wait loop exists), sorted by id.
    [[nodiscard]] std::span<const VertexId> out(VertexId v) const;
    /// Predecessors of v, sorted by id.
    [[nodiscard]] std::span<const VertexId> in(VertexId v) const;
    [[nodiscard]] bool has_edge(VertexId src, VertexId dst) const;

    [[nodiscard]] Segment2 segment(VertexId src, VertexId dst) const {
        return {position(src), position(dst)};
    }

    friend bool operator==(const Roadmap& a, const Roadmap& b) {
        return a.positions_ == b.positions_ && a.edges_ == b.edges_;
    }

private:
    std::vector<Point2> positions_;
    std::vector<Edge> edges_;
    // CSR adjacency.
    std::vector<std::size_t> out_offsets_;
    std::vector<VertexId> out_targets_;
    std::vector<std::size_t> in_offsets_;
    std::vector<VertexId> in_sources_;
};

/// Convenience for tests and tools: edges plus one wait loop per vertex.
[[nodiscard]] Roadmap make_roadmap_with_waits(std::vector<Point2> positions, std::vector<Edge> moves);

}  // namespace geomapf
