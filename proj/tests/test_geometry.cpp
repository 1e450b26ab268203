#include <doctest.h>

#include <random>

#include "geomapf/geometry.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace geomapf;

TEST_CASE("point_rect_distance") {
    const Rect unit{1, 0, 2, 1};
    CHECK(point_rect_distance({0, 0}, unit) == 1.0);
    CHECK(point_rect_distance({1.5, 0.5}, unit) == 0.0);
    CHECK(point_rect_distance({3, 4}, Rect{0, 0, 0, 0}) == 5.0);
    CHECK(point_rect_distance({2, 1}, unit) == 0.0);  // corner belongs to the closed rect
}

TEST_CASE("segment_segment_distance examples") {
    CHECK(segment_segment_distance({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}) == 1.0);
    CHECK(segment_segment_distance({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}) == 0.0);
    CHECK(segment_segment_distance({{0, 0}, {1, 0}}, {{2, 0}, {2, 0}}) == 1.0);
    // Degenerate against degenerate.
    CHECK(segment_segment_distance({{0, 0}, {0, 0}}, {{3, 4}, {3, 4}}) == 5.0);
    // Collinear, overlapping and disjoint.
    CHECK(segment_segment_distance({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}}) == 0.0);
    CHECK(segment_segment_distance({{0, 0}, {1, 0}}, {{1.5, 0}, {3, 0}}) == doctest::Approx(0.5));
}

TEST_CASE("point example agrees with a full parameter grid") {
    const Segment2 s1{{0, 0}, {1, 0}};
    const Segment2 s2{{2, 0}, {2, 0}};
    CHECK(std::abs(segment_segment_distance(s1, s2) - oracle::grid_segment_distance(s1, s2, 2000)) < 1e-4);
}

TEST_CASE("vertex_free and edge_free examples") {
    const ObstacleSet none;
    const ObstacleSet one{{Rect{1, 0, 2, 1}}};
    const AgentRadius r(0.1);
    CHECK(vertex_free({0, 0}, none, r));
    CHECK_FALSE(vertex_free({1.05, 0.5}, one, r));
    CHECK(vertex_free({0.85, 0.5}, one, r));
    CHECK(edge_free({{0, 0}, {0, 0}}, none, r));
    CHECK_FALSE(edge_free({{0, 0.5}, {3, 0.5}}, one, r));
    CHECK(edge_free({{0, 1.2}, {3, 1.2}}, one, r));
    // Touching at exactly r is allowed.
    CHECK(vertex_free({0.9, 0.5}, one, AgentRadius(0.1 - 1e-12)));
}

TEST_CASE("edge_free clearance agrees with sampling") {
    const Rect rect{1, 0, 2, 1};
    const Segment2 seg{{0, 1.2}, {3, 1.2}};
    double best = 1e9;
    for (int k = 0; k <= 30000; ++k) {
        const double s = k / 30000.0;
        best = std::min(best, point_rect_distance({seg.a.x + s * (seg.b.x - seg.a.x), 1.2}, rect));
    }
    CHECK(segment_rect_distance(seg, rect) == doctest::Approx(best).epsilon(1e-9));
    CHECK(best == doctest::Approx(0.2));
}

TEST_CASE("swept_discs_disjoint examples") {
    const Segment2 e1{{0, 0}, {1, 0}};
    const Segment2 e2{{0, 1}, {1, 1}};
    CHECK(swept_discs_disjoint(e1, e2, AgentRadius(0.4)));
    CHECK_FALSE(swept_discs_disjoint(e1, e2, AgentRadius(0.6)));
    CHECK_FALSE(swept_discs_disjoint(e1, {{1, 0}, {0, 0}}, AgentRadius(1e-9)));
}

TEST_CASE("AgentRadius rejects non-positive values") {
    CHECK_THROWS_AS(AgentRadius(0.0), std::invalid_argument);
    CHECK_THROWS_AS(AgentRadius(-1.0), std::invalid_argument);
}

TEST_CASE("symmetry, zero iff intersect, and closed form agree with independent routines") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 5000; ++k) {
        Segment2 a = support::random_segment(rng, 0, 10);
        Segment2 b = support::random_segment(rng, 0, 10);
        if (k % 7 == 0) b.b = b.a;  // degenerate
        if (k % 11 == 0) b = {a.b, support::random_point(rng, 0, 10)};  // shared endpoint
        const double d = segment_segment_distance(a, b);
        CHECK(d == segment_segment_distance(b, a));
        CHECK(d >= 0.0);
        CHECK((d == 0.0) == oracle::segments_intersect(a, b));
        CHECK(segments_intersect(a, b) == oracle::segments_intersect(a, b));
        CHECK(d == doctest::Approx(oracle::segment_distance(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("dense sampling oracle within 1e-4") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
        const Segment2 a = support::random_segment(rng, 0, 10);
        const Segment2 b = support::random_segment(rng, 0, 10);
        // |a| <= 10*sqrt(2): 100000 samples bound the overshoot by ~7e-5.
        const double sampled = oracle::sampled_segment_distance(a, b, 100000);
        CHECK(std::abs(segment_segment_distance(a, b) - sampled) < 1e-4);
    }
}

TEST_CASE("swept_discs_disjoint is monotone in r") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> ur(1e-3, 3.0);
    for (int k = 0; k < 1000; ++k) {
        const Segment2 a = support::random_segment(rng, 0, 10);
        const Segment2 b = support::random_segment(rng, 0, 10);
        const double r1 = ur(rng);
        const double r2 = ur(rng) * r1 / 3.0;
        if (swept_discs_disjoint(a, b, AgentRadius(r1))) CHECK(swept_discs_disjoint(a, b, AgentRadius(r2)));
    }
}

TEST_CASE("edge_free implies vertex_free along the edge") {
    std::mt19937_64 rng(3);
    ObstacleSet obs;
    for (int k = 0; k < 6; ++k) {
        const Point2 c = support::random_point(rng, 0, 1);
        obs.rects.push_back({c.x - 0.05, c.y - 0.05, c.x + 0.05, c.y + 0.05});
    }
    const AgentRadius r(0.03);
    std::uniform_real_distribution<double> u(0, 1);
    int free_edges = 0;
    for (int k = 0; k < 2000; ++k) {
        const Segment2 s = support::random_segment(rng, 0, 1);
        if (!edge_free(s, obs, r)) continue;
        ++free_edges;
        const double t = u(rng);
        CHECK(vertex_free(s.a, obs, r));
        CHECK(vertex_free(s.b, obs, r));
        CHECK(vertex_free({s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y)}, obs, r));
    }
    CHECK(free_edges > 0);
}
