#include "geomapf/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace geomapf {

namespace {

double cross(Point2 o, Point2 a, Point2 b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int orientation(Point2 o, Point2 a, Point2 b) {
    const double c = cross(o, a, b);
    if (c > 0.0) return 1;
    if (c < 0.0) return -1;
    return 0;
}

// q is collinear with s; is it inside the bounding box of s?
bool on_segment(const Segment2& s, Point2 q) {
    return q.x >= std::min(s.a.x, s.b.x) && q.x <= std::max(s.a.x, s.b.x) &&
           q.y >= std::min(s.a.y, s.b.y) && q.y <= std::max(s.a.y, s.b.y);
}

}  // namespace

double distance(Point2 p, Point2 q) { return std::hypot(p.x - q.x, p.y - q.y); }

double point_rect_distance(Point2 p, const Rect& rect) {
    const double dx = std::max({rect.xmin - p.x, 0.0, p.x - rect.xmax});
    const double dy = std::max({rect.ymin - p.y, 0.0, p.y - rect.ymax});
    return std::hypot(dx, dy);
}

double point_segment_distance(Point2 p, const Segment2& s) {
    const double vx = s.b.x - s.a.x;
    const double vy = s.b.y - s.a.y;
    const double len2 = vx * vx + vy * vy;
    if (len2 == 0.0) return distance(p, s.a);
    double t = ((p.x - s.a.x) * vx + (p.y - s.a.y) * vy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, Point2{s.a.x + t * vx, s.a.y + t * vy});
}

bool segments_intersect(const Segment2& s1, const Segment2& s2) {
    const int o1 = orientation(s1.a, s1.b, s2.a);
    const int o2 = orientation(s1.a, s1.b, s2.b);
    const int o3 = orientation(s2.a, s2.b, s1.a);
    const int o4 = orientation(s2.a, s2.b, s1.b);

    if (o1 != o2 && o3 != o4) return true;

    // Collinear or degenerate configurations.
    if (o1 == 0 && on_segment(s1, s2.a)) return true;
    if (o2 == 0 && on_segment(s1, s2.b)) return true;
    if (o3 == 0 && on_segment(s2, s1.a)) return true;
    if (o4 == 0 && on_segment(s2, s1.b)) return true;
    return false;
}

double segment_segment_distance(const Segment2& s1, const Segment2& s2) {
    if (segments_intersect(s1, s2)) return 0.0;
    // Disjoint closed segments attain their minimum distance at an endpoint
    // of one of them.
    return std::min({point_segment_distance(s1.a, s2), point_segment_distance(s1.b, s2),
                     point_segment_distance(s2.a, s1), point_segment_distance(s2.b, s1)});
}

double segment_rect_distance(const Segment2& s, const Rect& rect) {
    if (rect.contains(s.a) || rect.contains(s.b)) return 0.0;
    const std::array<Segment2, 4> sides = {
        Segment2{{rect.xmin, rect.ymin}, {rect.xmax, rect.ymin}},
        Segment2{{rect.xmax, rect.ymin}, {rect.xmax, rect.ymax}},
        Segment2{{rect.xmax, rect.ymax}, {rect.xmin, rect.ymax}},
        Segment2{{rect.xmin, rect.ymax}, {rect.xmin, rect.ymin}},
    };
    double best = segment_segment_distance(s, sides[0]);
    for (std::size_t k = 1; k < sides.size() && best > 0.0; ++k) {
        best = std::min(best, segment_segment_distance(s, sides[k]));
    }
    return best;
}

bool vertex_free(Point2 p, const ObstacleSet& obs, AgentRadius r) {
    return std::all_of(obs.rects.begin(), obs.rects.end(), [&](const Rect& rect) {
        return point_rect_distance(p, rect) >= r.value();
    });
}

bool edge_free(const Segment2& seg, const ObstacleSet& obs, AgentRadius r) {
    return std::all_of(obs.rects.begin(), obs.rects.end(), [&](const Rect& rect) {
        return segment_rect_distance(seg, rect) >= r.value();
    });
}

bool swept_discs_disjoint(const Segment2& e1, const Segment2& e2, AgentRadius r) {
    return segment_segment_distance(e1, e2) >= 2.0 * r.value();
}

}  // namespace geomapf
