#include "geomapf/roadmap.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace geomapf {

namespace {

void build_csr(std::size_t n, const std::vector<Edge>& edges, bool forward,
               std::vector<std::size_t>& offsets, std::vector<VertexId>& targets) {
    offsets.assign(n + 1, 0);
    for (const Edge& e : edges) ++offsets[static_cast<std::size_t>(forward ? e.src : e.dst) + 1];
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    targets.assign(edges.size(), 0);
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const Edge& e : edges) {
        const auto from = static_cast<std::size_t>(forward ? e.src : e.dst);
        targets[cursor[from]++] = forward ? e.dst : e.src;
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offsets[i]),
                  targets.begin() + static_cast<std::ptrdiff_t>(offsets[i + 1]));
    }
}

}  // namespace

Roadmap::Roadmap(std::vector<Point2> positions, std::vector<Edge> edges)
    : positions_(std::move(positions)), edges_(std::move(edges)) {
    for (const Edge& e : edges_) {
        if (!valid_vertex(e.src) || !valid_vertex(e.dst)) {
            throw std::invalid_argument("edge " + std::to_string(e.src) + "->" + std::to_string(e.dst) +
                                        " references a missing vertex");
        }
    }
    build_csr(positions_.size(), edges_, true, out_offsets_, out_targets_);
    build_csr(positions_.size(), edges_, false, in_offsets_, in_sources_);
    for (std::size_t v = 0; v < positions_.size(); ++v) {
        const auto first = out_targets_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[v]);
        const auto last = out_targets_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[v + 1]);
        if (std::adjacent_find(first, last) != last) {
            throw std::invalid_argument("duplicate edge out of vertex " + std::to_string(v));
        }
    }
}

std::span<const VertexId> Roadmap::out(VertexId v) const {
    const auto i = static_cast<std::size_t>(v);
    return {out_targets_.data() + out_offsets_[i], out_offsets_[i + 1] - out_offsets_[i]};
}

std::span<const VertexId> Roadmap::in(VertexId v) const {
    const auto i = static_cast<std::size_t>(v);
    return {in_sources_.data() + in_offsets_[i], in_offsets_[i + 1] - in_offsets_[i]};
}

bool Roadmap::has_edge(VertexId src, VertexId dst) const {
    if (!valid_vertex(src) || !valid_vertex(dst)) return false;
    const auto succ = out(src);
    return std::binary_search(succ.begin(), succ.end(), dst);
}

Roadmap make_roadmap_with_waits(std::vector<Point2> positions, std::vector<Edge> moves) {
    const auto n = static_cast<VertexId>(positions.size());
    for (VertexId v = 0; v < n; ++v) moves.push_back({v, v});
    return Roadmap(std::move(positions), std::move(moves));
}

}  // namespace geomapf
