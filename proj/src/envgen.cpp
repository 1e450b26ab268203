#include "geomapf/envgen.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "geomapf/kernels.hpp"
#include "geomapf/rng.hpp"

namespace geomapf {

std::string to_string(WorldKind kind) { return kind == WorldKind::Maze ? "maze" : "box"; }

WorldKind parse_world_kind(const std::string& s) {
    if (s == "maze") return WorldKind::Maze;
    if (s == "box") return WorldKind::Box;
    throw std::invalid_argument("unknown world kind '" + s + "'");
}

namespace {

void check_spec(const WorldSpec& spec) {
    const Rect& b = spec.bounds;
    if (!(b.xmin < b.xmax && b.ymin < b.ymax)) throw GenerationError("world bounds are empty");
    if (spec.kind == WorldKind::Maze) {
        const MazeParams& m = spec.maze;
        if (m.rows < 1 || m.cols < 1) throw GenerationError("maze needs at least one cell");
        if (!(m.removal_prob >= 0.0 && m.removal_prob <= 1.0)) {
            throw GenerationError("maze removal probability outside [0,1]");
        }
        const double cell = std::min((b.xmax - b.xmin) / m.cols, (b.ymax - b.ymin) / m.rows);
        if (!(m.wall_thickness >= 0.0)) throw GenerationError("negative maze wall thickness");
        if (m.wall_thickness >= cell) throw GenerationError("maze walls fill every cell: free space is empty");
    } else {
        const BoxParams& p = spec.box;
        if (p.count < 0) throw GenerationError("negative box count");
        if (!(p.min_size > 0.0 && p.min_size <= p.max_size)) throw GenerationError("invalid box size range");
    }
}

ObstacleSet gen_maze(const WorldSpec& spec, Rng& rng) {
    const MazeParams& m = spec.maze;
    const Rect& b = spec.bounds;
    const double cw = (b.xmax - b.xmin) / m.cols;
    const double ch = (b.ymax - b.ymin) / m.rows;
    const double half = m.wall_thickness / 2.0;
    const int cells = m.rows * m.cols;

    // open_east[c]: wall between c and its east neighbour removed; same for north.
    std::vector<bool> open_east(static_cast<std::size_t>(cells), false);
    std::vector<bool> open_north(static_cast<std::size_t>(cells), false);

    // Randomised depth-first spanning tree.
    std::vector<bool> visited(static_cast<std::size_t>(cells), false);
    std::vector<int> stack{0};
    visited[0] = true;
    while (!stack.empty()) {
        const int c = stack.back();
        const int row = c / m.cols;
        const int col = c % m.cols;
        std::vector<int> options;
        if (col + 1 < m.cols && !visited[static_cast<std::size_t>(c + 1)]) options.push_back(c + 1);
        if (col > 0 && !visited[static_cast<std::size_t>(c - 1)]) options.push_back(c - 1);
        if (row + 1 < m.rows && !visited[static_cast<std::size_t>(c + m.cols)]) options.push_back(c + m.cols);
        if (row > 0 && !visited[static_cast<std::size_t>(c - m.cols)]) options.push_back(c - m.cols);
        if (options.empty()) {
            stack.pop_back();
            continue;
        }
        const int next = options[rng.index(options.size())];
        if (next == c + 1) open_east[static_cast<std::size_t>(c)] = true;
        if (next == c - 1) open_east[static_cast<std::size_t>(next)] = true;
        if (next == c + m.cols) open_north[static_cast<std::size_t>(c)] = true;
        if (next == c - m.cols) open_north[static_cast<std::size_t>(next)] = true;
        visited[static_cast<std::size_t>(next)] = true;
        stack.push_back(next);
    }

    ObstacleSet obs;
    auto clip = [&](Rect r) {
        r.xmin = std::max(r.xmin, b.xmin);
        r.ymin = std::max(r.ymin, b.ymin);
        r.xmax = std::min(r.xmax, b.xmax);
        r.ymax = std::min(r.ymax, b.ymax);
        return r;
    };
    for (int row = 0; row < m.rows; ++row) {
        for (int col = 0; col + 1 < m.cols; ++col) {
            const int c = row * m.cols + col;
            if (open_east[static_cast<std::size_t>(c)] || rng.bernoulli(m.removal_prob)) continue;
            const double x = b.xmin + (col + 1) * cw;
            obs.rects.push_back(clip({x - half, b.ymin + row * ch - half, x + half, b.ymin + (row + 1) * ch + half}));
        }
    }
    for (int row = 0; row + 1 < m.rows; ++row) {
        for (int col = 0; col < m.cols; ++col) {
            const int c = row * m.cols + col;
            if (open_north[static_cast<std::size_t>(c)] || rng.bernoulli(m.removal_prob)) continue;
            const double y = b.ymin + (row + 1) * ch;
            obs.rects.push_back(clip({b.xmin + col * cw - half, y - half, b.xmin + (col + 1) * cw + half, y + half}));
        }
    }
    return obs;
}

ObstacleSet gen_boxes(const WorldSpec& spec, Rng& rng) {
    const BoxParams& p = spec.box;
    const Rect& b = spec.bounds;
    ObstacleSet obs;
    for (int i = 0; i < p.count; ++i) {
        const double cx = rng.uniform(b.xmin, b.xmax);
        const double cy = rng.uniform(b.ymin, b.ymax);
        const double w = rng.uniform(p.min_size, p.max_size);
        const double h = rng.uniform(p.min_size, p.max_size);
        obs.rects.push_back({cx - w / 2.0, cy - h / 2.0, cx + w / 2.0, cy + h / 2.0});
    }
    return obs;
}

// Probes a regular grid; if every probe lies inside an obstacle the free space
// is treated as empty.
bool probably_empty(const ObstacleSet& obs, const Rect& b) {
    constexpr int kProbes = 64;
    for (int i = 0; i < kProbes; ++i) {
        for (int j = 0; j < kProbes; ++j) {
            const Point2 p{b.xmin + (i + 0.5) * (b.xmax - b.xmin) / kProbes,
                           b.ymin + (j + 0.5) * (b.ymax - b.ymin) / kProbes};
            const bool blocked = std::any_of(obs.rects.begin(), obs.rects.end(),
                                             [&](const Rect& r) { return r.contains(p); });
            if (!blocked) return false;
        }
    }
    return true;
}

}  // namespace

ObstacleSet gen_world(const WorldSpec& spec) {
    check_spec(spec);
    Rng rng(spec.seed);
    ObstacleSet obs = spec.kind == WorldKind::Maze ? gen_maze(spec, rng) : gen_boxes(spec, rng);
    if (probably_empty(obs, spec.bounds)) throw GenerationError("obstacles cover the whole world");
    return obs;
}

Roadmap sample_roadmap(const ObstacleSet& obs, const Rect& bounds, const RoadmapParams& params, AgentRadius r,
                       std::uint64_t seed) {
    if (params.vertices < 2) throw std::invalid_argument("roadmap needs at least 2 vertices");
    if (params.neighbors < 1) throw std::invalid_argument("roadmap needs k >= 1");
    const double rad = r.value();
    const Rect region{bounds.xmin + rad, bounds.ymin + rad, bounds.xmax - rad, bounds.ymax - rad};
    if (!region.valid()) throw GenerationError("agent radius too large for the world bounds");

    Rng rng(seed);
    std::vector<Point2> points;
    points.reserve(static_cast<std::size_t>(params.vertices));
    const long budget = static_cast<long>(params.attempts_per_vertex) * params.vertices;
    long attempts = 0;
    while (static_cast<int>(points.size()) < params.vertices) {
        if (attempts++ >= budget) {
            throw GenerationError("rejection sampling exhausted after " + std::to_string(budget) +
                                  " attempts; free space too small");
        }
        const Point2 p{rng.uniform(region.xmin, region.xmax), rng.uniform(region.ymin, region.ymax)};
        if (vertex_free(p, obs, r)) points.push_back(p);
    }

    const kernels::NeighborLists lists = kernels::knn_free_neighbors_parallel(points, params.neighbors, obs, r);
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < lists.size(); ++v) {
        const auto id = static_cast<VertexId>(v);
        for (VertexId u : lists[v]) edges.push_back({id, u});
        edges.push_back({id, id});
    }
    return Roadmap(std::move(points), std::move(edges));
}

std::vector<bool> reachable_from(const Roadmap& roadmap, VertexId source) {
    std::vector<bool> seen(roadmap.num_vertices(), false);
    std::deque<VertexId> queue{source};
    seen[static_cast<std::size_t>(source)] = true;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (VertexId u : roadmap.out(v)) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = true;
                queue.push_back(u);
            }
        }
    }
    return seen;
}

Endpoints assign_endpoints(const Roadmap& roadmap, int agents, AgentRadius r, std::uint64_t seed, int attempts) {
    if (agents < 1) throw std::invalid_argument("need at least one agent");
    const std::size_t n = roadmap.num_vertices();
    if (n < 2 * static_cast<std::size_t>(agents)) {
        throw std::invalid_argument("roadmap has fewer than 2M vertices");
    }
    const double min_sep = 2.0 * r.value();
    Rng rng(seed);

    auto shuffled = [&] {
        std::vector<VertexId> order(n);
        std::iota(order.begin(), order.end(), 0);
        for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.index(i + 1)]);
        return order;
    };
    auto separated = [&](const std::vector<VertexId>& chosen, VertexId v) {
        return std::all_of(chosen.begin(), chosen.end(), [&](VertexId u) {
            return u != v && distance(roadmap.position(u), roadmap.position(v)) >= min_sep;
        });
    };

    for (int attempt = 0; attempt < attempts; ++attempt) {
        Endpoints ep;
        for (VertexId v : shuffled()) {
            if (static_cast<int>(ep.starts.size()) == agents) break;
            if (separated(ep.starts, v)) ep.starts.push_back(v);
        }
        if (static_cast<int>(ep.starts.size()) < agents) continue;

        bool ok = true;
        for (int i = 0; i < agents && ok; ++i) {
            const VertexId s = ep.starts[static_cast<std::size_t>(i)];
            const std::vector<bool> reach = reachable_from(roadmap, s);
            ok = false;
            for (VertexId v : shuffled()) {
                if (v != s && reach[static_cast<std::size_t>(v)] && separated(ep.goals, v)) {
                    ep.goals.push_back(v);
                    ok = true;
                    break;
                }
            }
        }
        if (ok) return ep;
    }
    throw GenerationError("no valid start/goal assignment for " + std::to_string(agents) + " agents within " +
                          std::to_string(attempts) + " attempts");
}

}  // namespace geomapf
