#include "geomapf/validate.hpp"

#include <set>
#include <utility>

namespace geomapf {

std::string to_string(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::Structure: return "structure";
        case Violation::Kind::Endpoint: return "endpoint";
        case Violation::Kind::Edge: return "edge";
        case Violation::Kind::Obstacle: return "obstacle";
        case Violation::Kind::InterAgent: return "inter-agent";
    }
    return "unknown";
}

std::vector<Violation> validate_solution(const Instance& inst, const Solution& solution) {
    using Kind = Violation::Kind;
    std::vector<Violation> out;
    const Roadmap& g = inst.roadmap;
    const int m = inst.num_agents();

    if (static_cast<int>(solution.size()) != m) {
        out.push_back({Kind::Structure, -1, -1, -1,
                       "expected " + std::to_string(m) + " paths, got " + std::to_string(solution.size())});
        return out;
    }

    std::set<std::pair<VertexId, VertexId>> edge_set;
    for (const Edge& e : g.edges()) edge_set.emplace(e.src, e.dst);

    bool structurally_sound = true;
    for (int i = 0; i < m; ++i) {
        const auto& vs = solution[static_cast<std::size_t>(i)].vertices;
        if (vs.empty()) {
            out.push_back({Kind::Structure, i, -1, -1, "empty path"});
            structurally_sound = false;
            continue;
        }
        bool ids_ok = true;
        for (std::size_t t = 0; t < vs.size(); ++t) {
            if (!g.valid_vertex(vs[t])) {
                out.push_back({Kind::Structure, i, -1, static_cast<int>(t), "unknown vertex " + std::to_string(vs[t])});
                ids_ok = false;
            }
        }
        if (!ids_ok) {
            structurally_sound = false;
            continue;
        }
        if (vs.front() != inst.starts[static_cast<std::size_t>(i)]) {
            out.push_back({Kind::Endpoint, i, -1, 0, "path does not begin at the start vertex"});
        }
        if (vs.back() != inst.goals[static_cast<std::size_t>(i)]) {
            out.push_back({Kind::Endpoint, i, -1, static_cast<int>(vs.size()) - 1, "path does not end at the goal vertex"});
        }
        for (std::size_t t = 0; t < vs.size(); ++t) {
            if (!vertex_free(g.position(vs[t]), inst.obstacles, inst.radius)) {
                out.push_back({Kind::Obstacle, i, -1, static_cast<int>(t), "vertex " + std::to_string(vs[t]) + " touches an obstacle"});
            }
            if (t == 0) continue;
            const VertexId a = vs[t - 1];
            const VertexId b = vs[t];
            if (!edge_set.contains({a, b})) {
                out.push_back({Kind::Edge, i, -1, static_cast<int>(t),
                               "no roadmap edge " + std::to_string(a) + "->" + std::to_string(b)});
            }
            if (!edge_free({g.position(a), g.position(b)}, inst.obstacles, inst.radius)) {
                out.push_back({Kind::Obstacle, i, -1, static_cast<int>(t),
                               "edge " + std::to_string(a) + "->" + std::to_string(b) + " touches an obstacle"});
            }
        }
    }
    if (!structurally_sound) return out;

    // Every agent holds its last vertex forever, so checking through the
    // longest path (and at least one step, for parked agents) covers all time.
    std::size_t last = 1;
    for (const Path& p : solution) last = std::max(last, p.vertices.size() - 1);
    auto pos = [&](int agent, std::size_t t) {
        const auto& vs = solution[static_cast<std::size_t>(agent)].vertices;
        return g.position(vs[std::min(t, vs.size() - 1)]);
    };
    const double clearance = 2.0 * inst.radius.value();
    for (std::size_t t = 1; t <= last; ++t) {
        for (int i = 0; i < m; ++i) {
            const Segment2 ei{pos(i, t - 1), pos(i, t)};
            for (int j = i + 1; j < m; ++j) {
                const Segment2 ej{pos(j, t - 1), pos(j, t)};
                if (segment_segment_distance(ei, ej) < clearance) {
                    out.push_back({Kind::InterAgent, i, j, static_cast<int>(t),
                                   "agents " + std::to_string(i) + " and " + std::to_string(j) + " overlap at step " +
                                       std::to_string(t)});
                }
            }
        }
    }
    return out;
}

}  // namespace geomapf
