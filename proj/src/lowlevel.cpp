#include "geomapf/lowlevel.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <unordered_set>

namespace geomapf {

std::vector<int> reverse_bfs_dists(const Roadmap& roadmap, VertexId goal) {
    std::vector<int> dist(roadmap.num_vertices(), kUnreachable);
    std::deque<VertexId> queue{goal};
    dist[static_cast<std::size_t>(goal)] = 0;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (VertexId u : roadmap.in(v)) {
            if (dist[static_cast<std::size_t>(u)] == kUnreachable) {
                dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

int default_time_cap(const Roadmap& roadmap, std::span<const Constraint> constraints,
                     std::span<const int> goal_dists) {
    int max_hop = 0;
    for (int d : goal_dists) {
        if (d != kUnreachable) max_hop = std::max(max_hop, d);
    }
    int latest = 0;
    for (const Constraint& c : constraints) latest = std::max(latest, c.time);
    return static_cast<int>(roadmap.num_vertices()) + static_cast<int>(constraints.size()) + max_hop + latest;
}

namespace {

struct Entry {
    int f;
    int g;
    VertexId v;
};

// Pops lowest f, then highest g, then smallest vertex id.
struct EntryAfter {
    bool operator()(const Entry& a, const Entry& b) const {
        if (a.f != b.f) return a.f > b.f;
        if (a.g != b.g) return a.g < b.g;
        return a.v > b.v;
    }
};

}  // namespace

PlanResult plan_spacetime(const Roadmap& roadmap, VertexId start, VertexId goal,
                          std::span<const Constraint> constraints, std::span<const int> goal_dists, int t_cap) {
    PlanResult result;
    if (goal_dists[static_cast<std::size_t>(start)] == kUnreachable) {
        result.status = PlanStatus::Unreachable;
        return result;
    }
    result.status = PlanStatus::CapExhausted;
    if (t_cap < 0) return result;

    const auto n = static_cast<std::int64_t>(roadmap.num_vertices());
    auto key = [n](VertexId v, int t) { return static_cast<std::int64_t>(t) * n + v; };

    std::unordered_set<std::int64_t> blocked;
    int last_goal_block = -1;
    for (const Constraint& c : constraints) {
        if (c.vertex == goal) last_goal_block = std::max(last_goal_block, c.time);
        if (c.time < 0 || c.time > t_cap) continue;
        blocked.insert(key(c.vertex, c.time));
    }
    if (blocked.contains(key(start, 0))) return result;

    auto h = [&](VertexId v, int t) {
        return std::max(goal_dists[static_cast<std::size_t>(v)], last_goal_block + 1 - t);
    };

    const auto states = static_cast<std::size_t>(n) * static_cast<std::size_t>(t_cap + 1);
    std::vector<VertexId> parent(states, -2);  // -2 undiscovered, -1 root
    std::vector<char> closed(states, 0);

    std::priority_queue<Entry, std::vector<Entry>, EntryAfter> open;
    parent[static_cast<std::size_t>(key(start, 0))] = -1;
    open.push({h(start, 0), 0, start});

    while (!open.empty()) {
        const Entry cur = open.top();
        open.pop();
        const auto cur_key = static_cast<std::size_t>(key(cur.v, cur.g));
        if (closed[cur_key]) continue;
        closed[cur_key] = 1;
        ++result.expansions;

        if (cur.v == goal && cur.g > last_goal_block) {
            std::vector<VertexId> rev;
            VertexId v = cur.v;
            for (int t = cur.g; t >= 0; --t) {
                rev.push_back(v);
                v = parent[static_cast<std::size_t>(key(v, t))];
            }
            result.path.vertices.assign(rev.rbegin(), rev.rend());
            result.status = PlanStatus::Found;
            return result;
        }
        if (cur.g == t_cap) continue;

        const int t = cur.g + 1;
        for (VertexId u : roadmap.out(cur.v)) {
            if (goal_dists[static_cast<std::size_t>(u)] == kUnreachable) continue;
            const std::int64_t k = key(u, t);
            if (parent[static_cast<std::size_t>(k)] != -2 || blocked.contains(k)) continue;
            const int f = t + h(u, t);
            if (f > t_cap) continue;
            parent[static_cast<std::size_t>(k)] = cur.v;
            open.push({f, t, u});
        }
    }
    return result;
}

PlanResult plan_spacetime(const Roadmap& roadmap, VertexId start, VertexId goal,
                          std::span<const Constraint> constraints) {
    const std::vector<int> dists = reverse_bfs_dists(roadmap, goal);
    return plan_spacetime(roadmap, start, goal, constraints, dists, default_time_cap(roadmap, constraints, dists));
}

}  // namespace geomapf
