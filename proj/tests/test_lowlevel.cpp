#include <doctest.h>

#include <random>

#include "geomapf/lowlevel.hpp"
#include "oracles.hpp"

using namespace geomapf;

namespace {

// a=0 -> b=1 -> g=2 on a line, with waits.
Roadmap line3() { return make_roadmap_with_waits({{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {1, 2}}); }

Roadmap random_roadmap(std::mt19937_64& rng, int n) {
    std::vector<Point2> pts;
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
    std::vector<Edge> moves;
    std::bernoulli_distribution keep(0.3);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a != b && keep(rng)) moves.push_back({a, b});
        }
    }
    return make_roadmap_with_waits(std::move(pts), std::move(moves));
}

void check_obeys(const Path& p, const Roadmap& g, VertexId s, VertexId goal, const std::vector<Constraint>& cons) {
    REQUIRE_FALSE(p.vertices.empty());
    CHECK(p.vertices.front() == s);
    CHECK(p.vertices.back() == goal);
    for (std::size_t t = 1; t < p.vertices.size(); ++t) CHECK(g.has_edge(p.vertices[t - 1], p.vertices[t]));
    for (const Constraint& c : cons) {
        // Replay including the stay-at-goal tail.
        CHECK(p.at(c.time) != c.vertex);
    }
}

}  // namespace

TEST_CASE("start equal to goal") {
    const Roadmap g = line3();
    const PlanResult r = plan_spacetime(g, 2, 2, {});
    REQUIRE(r.found());
    CHECK(r.path.vertices == std::vector<VertexId>{2});
    CHECK(r.path.arrival() == 0);
}

TEST_CASE("a vertex constraint forces a wait") {
    const Roadmap g = line3();
    const std::vector<Constraint> cons{{0, 1, 1}};
    const PlanResult r = plan_spacetime(g, 0, 2, cons);
    REQUIRE(r.found());
    CHECK(r.path.vertices == std::vector<VertexId>{0, 0, 1, 2});
    CHECK(oracle::spacetime_bfs(g, 0, 2, cons, 10) == 3);
}

TEST_CASE("a later constraint on the goal delays arrival past it") {
    const Roadmap g = line3();
    const std::vector<Constraint> cons{{0, 2, 5}};
    const PlanResult r = plan_spacetime(g, 0, 2, cons);
    REQUIRE(r.found());
    CHECK(r.path.arrival() == 6);
    CHECK(r.path.at(5) != 2);
}

TEST_CASE("goal blocked at every step up to the cap") {
    const Roadmap g = line3();
    std::vector<Constraint> cons;
    for (int t = 0; t <= 10; ++t) cons.push_back({0, 2, t});
    const auto dists = reverse_bfs_dists(g, 2);
    const PlanResult r = plan_spacetime(g, 0, 2, cons, dists, 10);
    CHECK(r.status == PlanStatus::CapExhausted);
    CHECK_FALSE(r.found());
}

TEST_CASE("unreachable goal") {
    const Roadmap g = make_roadmap_with_waits({{0, 0}, {1, 0}}, {{0, 1}});
    CHECK(plan_spacetime(g, 1, 0, {}).status == PlanStatus::Unreachable);
    const auto d = reverse_bfs_dists(g, 0);
    CHECK(d[0] == 0);
    CHECK(d[1] == kUnreachable);
}

TEST_CASE("no wait loop means no waiting") {
    const Roadmap g({{0, 0}, {1, 0}}, {{0, 1}, {1, 0}});
    // Must be at 1 at t=1 but that is forbidden, so bounce is impossible too: 0 -> 1 only.
    const std::vector<Constraint> cons{{0, 1, 1}};
    const auto d = reverse_bfs_dists(g, 1);
    const PlanResult r = plan_spacetime(g, 0, 1, cons, d, 20);
    CHECK_FALSE(r.found());
    CHECK(oracle::spacetime_bfs(g, 0, 1, cons, 20) == -1);
}

TEST_CASE("arrival matches exhaustive space-time enumeration") {
    std::mt19937_64 rng(2024);
    int feasible = 0;
    for (int k = 0; k < 200; ++k) {
        const int n = 3 + static_cast<int>(rng() % 10);
        const Roadmap g = random_roadmap(rng, n);
        const auto s = static_cast<VertexId>(rng() % static_cast<unsigned>(n));
        const auto goal = static_cast<VertexId>(rng() % static_cast<unsigned>(n));
        std::vector<Constraint> cons;
        const int nc = static_cast<int>(rng() % 6);
        for (int c = 0; c < nc; ++c) {
            cons.push_back({0, static_cast<VertexId>(rng() % static_cast<unsigned>(n)), 1 + static_cast<int>(rng() % 6)});
        }
        const PlanResult r = plan_spacetime(g, s, goal, cons);
        const auto dists = reverse_bfs_dists(g, goal);
        const int cap = default_time_cap(g, cons, dists);
        const int expected = oracle::spacetime_bfs(g, s, goal, cons, cap);
        if (expected < 0) {
            CHECK_FALSE(r.found());
            continue;
        }
        ++feasible;
        REQUIRE(r.found());
        CHECK(r.path.arrival() == expected);
        check_obeys(r.path, g, s, goal, cons);
    }
    CHECK(feasible > 100);
}

TEST_CASE("adding a constraint never lowers the arrival time") {
    std::mt19937_64 rng(77);
    for (int k = 0; k < 200; ++k) {
        const int n = 4 + static_cast<int>(rng() % 8);
        const Roadmap g = random_roadmap(rng, n);
        const auto s = static_cast<VertexId>(rng() % static_cast<unsigned>(n));
        const auto goal = static_cast<VertexId>(rng() % static_cast<unsigned>(n));
        std::vector<Constraint> cons;
        int prev = -1;
        for (int c = 0; c < 5; ++c) {
            const PlanResult r = plan_spacetime(g, s, goal, cons);
            if (!r.found()) break;
            CHECK(r.path.arrival() >= prev);
            prev = r.path.arrival();
            // Constrain a vertex the current path uses so the constraint bites.
            const int t = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, r.path.arrival())));
            cons.push_back({0, r.path.at(t), t});
        }
    }
}

TEST_CASE("default cap admits every feasible plan") {
    const Roadmap g = line3();
    const std::vector<Constraint> cons{{0, 2, 40}};
    const auto d = reverse_bfs_dists(g, 2);
    CHECK(default_time_cap(g, cons, d) >= 41);
    CHECK(plan_spacetime(g, 0, 2, cons).path.arrival() == 41);
}
