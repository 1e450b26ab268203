#pragma once

#include <stdexcept>
#include <vector>

namespace geomapf {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Straight-line motion from a to b. a == b is a wait edge.
struct Segment2 {
    Point2 a;
    Point2 b;

    friend bool operator==(const Segment2&, const Segment2&) = default;
};

/// Closed axis-aligned rectangle.
struct Rect {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 0.0;
    double ymax = 0.0;

    [[nodiscard]] bool valid() const { return xmin <= xmax && ymin <= ymax; }
    [[nodiscard]] bool contains(Point2 p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }

    friend bool operator==(const Rect&, const Rect&) = default;
};

struct ObstacleSet {
    std::vector<Rect> rects;

    friend bool operator==(const ObstacleSet&, const ObstacleSet&) = default;
};

/// Radius of the closed disc an agent occupies. Always strictly positive.
class AgentRadius {
public:
    explicit AgentRadius(double r) : r_(r) {
        if (!(r > 0.0)) throw std::invalid_argument("agent radius must be > 0");
    }
    [[nodiscard]] double value() const { return r_; }

    friend bool operator==(const AgentRadius&, const AgentRadius&) = default;

private:
    double r_;
};

[[nodiscard]] double distance(Point2 p, Point2 q);

/// Distance from p to the closed rectangle; 0 when p lies inside.
[[nodiscard]] double point_rect_distance(Point2 p, const Rect& rect);

[[nodiscard]] double point_segment_distance(Point2 p, const Segment2& s);

/// Closed-segment intersection by orientation tests, including collinear
/// overlap and degenerate (point) segments.
[[nodiscard]] bool segments_intersect(const Segment2& s1, const Segment2& s2);

/// Minimum distance between any point of s1 and any point of s2.
[[nodiscard]] double segment_segment_distance(const Segment2& s1, const Segment2& s2);

/// Minimum distance between any point of the segment and the closed rectangle.
[[nodiscard]] double segment_rect_distance(const Segment2& s, const Rect& rect);

/// The disc centred at p does not touch any obstacle.
[[nodiscard]] bool vertex_free(Point2 p, const ObstacleSet& obs, AgentRadius r);

/// The disc swept along seg stays clear of every obstacle.
[[nodiscard]] bool edge_free(const Segment2& seg, const ObstacleSet& obs, AgentRadius r);

/// Two agents moving along e1 and e2 never overlap, for every pair of
/// positions on the two edges (not time-synchronised).
[[nodiscard]] bool swept_discs_disjoint(const Segment2& e1, const Segment2& e2, AgentRadius r);

}  // namespace geomapf
