#pragma once
// Reference implementations used only by tests. They share no code with the
// library beyond plain data types, and favour obviously-correct brute force
// over speed.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <tuple>
#include <vector>

#include "geomapf/geometry.hpp"
#include "geomapf/instance.hpp"
#include "geomapf/path.hpp"
#include "geomapf/roadmap.hpp"

namespace oracle {

using geomapf::Point2;
using geomapf::Segment2;

inline double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Exact distance from p to segment [a, b] by clamped projection.
inline double point_to_segment(Point2 p, Point2 a, Point2 b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) return dist(p, a);
    const double s = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
    return dist(p, {a.x + s * dx, a.y + s * dy});
}

// min over n+1 evenly spaced points a(s) of s1 of the exact distance from
// a(s) to s2. The distance function is 1-Lipschitz along s1, so the result
// overshoots the true distance by at most |s1| / (2n).
inline double sampled_segment_distance(const Segment2& s1, const Segment2& s2, int n) {
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= n; ++k) {
        const double s = static_cast<double>(k) / n;
        const Point2 p{s1.a.x + s * (s1.b.x - s1.a.x), s1.a.y + s * (s1.b.y - s1.a.y)};
        best = std::min(best, point_to_segment(p, s2.a, s2.b));
    }
    return best;
}

// Full parameter-grid sampling, n x n: min over both parameters.
inline double grid_segment_distance(const Segment2& s1, const Segment2& s2, int n) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n; ++i) {
        const double s = static_cast<double>(i) / n;
        const double px = s1.a.x + s * (s1.b.x - s1.a.x);
        const double py = s1.a.y + s * (s1.b.y - s1.a.y);
        for (int j = 0; j <= n; ++j) {
            const double u = static_cast<double>(j) / n;
            const double qx = s2.a.x + u * (s2.b.x - s2.a.x);
            const double qy = s2.a.y + u * (s2.b.y - s2.a.y);
            best = std::min(best, std::hypot(px - qx, py - qy));
        }
    }
    return best;
}

// Intersection by solving a + s(b - a) = c + u(d - c) with Cramer's rule;
// parallel cases reduce to 1-D interval overlap on the shared line.
inline bool segments_intersect(const Segment2& p, const Segment2& q) {
    const double rx = p.b.x - p.a.x, ry = p.b.y - p.a.y;
    const double sx = q.b.x - q.a.x, sy = q.b.y - q.a.y;
    const double qpx = q.a.x - p.a.x, qpy = q.a.y - p.a.y;
    const double denom = rx * sy - ry * sx;
    if (denom != 0.0) {
        const double s = (qpx * sy - qpy * sx) / denom;
        const double u = (qpx * ry - qpy * rx) / denom;
        return s >= 0.0 && s <= 1.0 && u >= 0.0 && u <= 1.0;
    }
    // Parallel (or degenerate): must be collinear, then intervals must overlap.
    auto on_line = [](Point2 a, Point2 b, Point2 c) {
        return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) == 0.0;
    };
    const bool p_point = rx == 0.0 && ry == 0.0;
    const bool q_point = sx == 0.0 && sy == 0.0;
    if (p_point && q_point) return p.a.x == q.a.x && p.a.y == q.a.y;
    const Segment2& line = p_point ? q : p;
    const Segment2& other = p_point ? p : q;
    if (!on_line(line.a, line.b, other.a) || !on_line(line.a, line.b, other.b)) return false;
    const bool use_x = std::abs(line.b.x - line.a.x) >= std::abs(line.b.y - line.a.y);
    auto coord = [&](Point2 v) { return use_x ? v.x : v.y; };
    const double lo1 = std::min(coord(line.a), coord(line.b)), hi1 = std::max(coord(line.a), coord(line.b));
    const double lo2 = std::min(coord(other.a), coord(other.b)), hi2 = std::max(coord(other.a), coord(other.b));
    return std::max(lo1, lo2) <= std::min(hi1, hi2);
}

// Closed-form distance: zero if the segments meet, otherwise the smallest
// endpoint-to-segment distance (the minimum of two non-crossing segments is
// always attained at an endpoint of one of them).
inline double segment_distance(const Segment2& a, const Segment2& b) {
    if (oracle::segments_intersect(a, b)) return 0.0;
    return std::min({point_to_segment(a.a, b.a, b.b), point_to_segment(a.b, b.a, b.b),
                     point_to_segment(b.a, a.a, a.b), point_to_segment(b.b, a.a, a.b)});
}

// ---- low level --------------------------------------------------------------

// Earliest arrival by breadth-first enumeration of (vertex, t) states up to
// `horizon`; returns -1 if none. Goal test: at goal at t with no constraint on
// the goal at any t' >= t.
inline int spacetime_bfs(const geomapf::Roadmap& g, geomapf::VertexId s, geomapf::VertexId goal,
                         const std::vector<geomapf::Constraint>& cons, int horizon) {
    auto blocked = [&](geomapf::VertexId v, int t) {
        for (const auto& c : cons) {
            if (c.vertex == v && c.time == t) return true;
        }
        return false;
    };
    auto goal_free_from = [&](int t) {
        for (const auto& c : cons) {
            if (c.vertex == goal && c.time >= t) return false;
        }
        return true;
    };
    std::set<geomapf::VertexId> layer;
    if (!blocked(s, 0)) layer.insert(s);
    for (int t = 0; t <= horizon && !layer.empty(); ++t) {
        if (layer.contains(goal) && goal_free_from(t)) return t;
        std::set<geomapf::VertexId> next;
        for (geomapf::VertexId v : layer) {
            for (const geomapf::Edge& e : g.edges()) {
                if (e.src == v && !blocked(e.dst, t + 1)) next.insert(e.dst);
            }
        }
        layer = std::move(next);
    }
    return -1;
}

// ---- joint-state optimum for two agents ---------------------------------------

// Minimum flowtime over all pairs of paths whose every step keeps the swept
// discs disjoint (segment distance >= 2r). States are
// (v1, v2, done1, done2); a finished agent rests on its goal forever, which is
// still checked against the other agent's moves. Each step costs one per
// unfinished agent. Returns nullopt when no joint plan exists.
inline std::optional<int> joint_optimum_two(const geomapf::Instance& inst) {
    const auto& g = inst.roadmap;
    const geomapf::VertexId g1 = inst.goals[0], g2 = inst.goals[1];
    std::vector<std::vector<geomapf::VertexId>> succ(g.num_vertices());
    for (const geomapf::Edge& e : g.edges()) succ[static_cast<std::size_t>(e.src)].push_back(e.dst);
    auto seg = [&](geomapf::VertexId a, geomapf::VertexId b) { return Segment2{g.position(a), g.position(b)}; };

    using State = std::tuple<int, int, int, int>;
    std::map<State, int> best;
    std::priority_queue<std::pair<int, State>, std::vector<std::pair<int, State>>, std::greater<>> pq;
    const State start{inst.starts[0], inst.starts[1], 0, 0};
    best[start] = 0;
    pq.push({0, start});
    while (!pq.empty()) {
        const auto [cost, st] = pq.top();
        pq.pop();
        if (best[st] < cost) continue;
        const auto [v1, v2, d1, d2] = st;
        if (d1 && d2) return cost;

        // Declaring an agent finished is free, but only on its goal.
        auto relax = [&](const State& s2, int c) {
            const auto it = best.find(s2);
            if (it == best.end() || c < it->second) {
                best[s2] = c;
                pq.push({c, s2});
            }
        };
        if (!d1 && v1 == g1) relax({v1, v2, 1, d2}, cost);
        if (!d2 && v2 == g2) relax({v1, v2, d1, 1}, cost);
        if (d1 && d2) continue;

        const std::vector<geomapf::VertexId> stay1{v1}, stay2{v2};
        const auto& m1 = d1 ? stay1 : succ[static_cast<std::size_t>(v1)];
        const auto& m2 = d2 ? stay2 : succ[static_cast<std::size_t>(v2)];
        for (geomapf::VertexId u1 : m1) {
            for (geomapf::VertexId u2 : m2) {
                if (segment_distance(seg(v1, u1), seg(v2, u2)) < 2.0 * inst.radius.value()) continue;
                relax({u1, u2, d1, d2}, cost + (d1 ? 0 : 1) + (d2 ? 0 : 1));
            }
        }
    }
    return std::nullopt;
}

// ---- independent conflict sweep ---------------------------------------------------

struct Triple {
    int t, i, j;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

// All (t, i, j) with i < j, t in 1..max(T, 1), whose step-t segments come
// within 2r.
inline std::vector<Triple> conflict_sweep(const geomapf::Solution& sol, const geomapf::Roadmap& g, double r) {
    int horizon = 1;
    for (const auto& p : sol) horizon = std::max(horizon, p.arrival());
    std::vector<Triple> out;
    for (int t = 1; t <= horizon; ++t) {
        for (std::size_t i = 0; i < sol.size(); ++i) {
            for (std::size_t j = i + 1; j < sol.size(); ++j) {
                const Segment2 a{g.position(sol[i].at(t - 1)), g.position(sol[i].at(t))};
                const Segment2 b{g.position(sol[j].at(t - 1)), g.position(sol[j].at(t))};
                if (segment_distance(a, b) < 2.0 * r) out.push_back({t, static_cast<int>(i), static_cast<int>(j)});
            }
        }
    }
    return out;
}

// ---- flood fill -------------------------------------------------------------------

// Number of 4-connected components among res x res probe cells whose centres
// are at least `clearance` from every rectangle.
inline int free_components(const geomapf::ObstacleSet& obs, const geomapf::Rect& bounds, int res, double clearance) {
    auto free_at = [&](double x, double y) {
        for (const auto& r : obs.rects) {
            const double dx = std::max({r.xmin - x, 0.0, x - r.xmax});
            const double dy = std::max({r.ymin - y, 0.0, y - r.ymax});
            if (std::hypot(dx, dy) < clearance) return false;
        }
        return true;
    };
    std::vector<int> cell(static_cast<std::size_t>(res * res), -1);  // -2 blocked, -1 unvisited, else label
    for (int iy = 0; iy < res; ++iy) {
        for (int ix = 0; ix < res; ++ix) {
            const double x = bounds.xmin + (ix + 0.5) * (bounds.xmax - bounds.xmin) / res;
            const double y = bounds.ymin + (iy + 0.5) * (bounds.ymax - bounds.ymin) / res;
            if (!free_at(x, y)) cell[static_cast<std::size_t>(iy * res + ix)] = -2;
        }
    }
    int components = 0;
    for (int k = 0; k < res * res; ++k) {
        if (cell[static_cast<std::size_t>(k)] != -1) continue;
        std::vector<int> stack{k};
        cell[static_cast<std::size_t>(k)] = components;
        while (!stack.empty()) {
            const int c = stack.back();
            stack.pop_back();
            const int cx = c % res, cy = c / res;
            const std::array<std::pair<int, int>, 4> nb{{{cx + 1, cy}, {cx - 1, cy}, {cx, cy + 1}, {cx, cy - 1}}};
            for (auto [nx, ny] : nb) {
                if (nx < 0 || ny < 0 || nx >= res || ny >= res) continue;
                auto& lab = cell[static_cast<std::size_t>(ny * res + nx)];
                if (lab != -1) continue;
                lab = components;
                stack.push_back(ny * res + nx);
            }
        }
        ++components;
    }
    return components;
}

}  // namespace oracle
