#include <doctest.h>
#include <omp.h>

#include <random>

#include "geomapf/kernels.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace geomapf;

TEST_CASE("neighbour kernel: parallel matches serial") {
    omp_set_num_threads(4);
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Point2> pts;
        for (int i = 0; i < 150; ++i) pts.push_back(support::random_point(rng, 0, 1));
        ObstacleSet obs;
        for (int i = 0; i < 5; ++i) {
            const Point2 c = support::random_point(rng, 0, 1);
            obs.rects.push_back({c.x - 0.04, c.y - 0.04, c.x + 0.04, c.y + 0.04});
        }
        const AgentRadius r(0.02);
        const auto serial = kernels::knn_free_neighbors_serial(pts, 6, obs, r);
        const auto parallel = kernels::knn_free_neighbors_parallel(pts, 6, obs, r);
        CHECK(serial == parallel);
        // Spot-check the reference itself: lists are sorted by distance and free.
        for (std::size_t v = 0; v < serial.size(); ++v) {
            CHECK(serial[v].size() <= 6);
            for (std::size_t k = 1; k < serial[v].size(); ++k) {
                CHECK(oracle::dist(pts[v], pts[static_cast<std::size_t>(serial[v][k - 1])]) <=
                      oracle::dist(pts[v], pts[static_cast<std::size_t>(serial[v][k])]));
            }
            for (VertexId u : serial[v]) CHECK(edge_free({pts[v], pts[static_cast<std::size_t>(u)]}, obs, r));
        }
    }
}

TEST_CASE("conflict-count kernel: parallel matches serial and the oracle sweep") {
    omp_set_num_threads(4);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 20;
        std::vector<Point2> pts;
        for (int i = 0; i < n; ++i) pts.push_back(support::random_point(rng, 0, 1));
        std::vector<Edge> moves;
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (a != b) moves.push_back({a, b});
            }
        }
        const Roadmap g = make_roadmap_with_waits(pts, moves);
        Solution sol;
        const int agents = 2 + trial % 6;
        for (int i = 0; i < agents; ++i) {
            Path p;
            const int len = 1 + static_cast<int>(rng() % 12);
            for (int t = 0; t < len; ++t) p.vertices.push_back(static_cast<VertexId>(rng() % n));
            sol.push_back(p);
        }
        const AgentRadius r(0.03);
        const int serial = kernels::count_conflicts_serial(sol, g, r);
        CHECK(serial == kernels::count_conflicts_parallel(sol, g, r));
        CHECK(serial == static_cast<int>(oracle::conflict_sweep(sol, g, r.value()).size()));
    }
}
