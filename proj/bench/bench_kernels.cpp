// Serial reference vs OpenMP for the two data-parallel kernels.
// Arg is the problem size: vertex count for knn, agent count for conflicts.

#include <benchmark/benchmark.h>

#include <random>

#include "geomapf/kernels.hpp"

using namespace geomapf;

namespace {

std::vector<Point2> points(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<Point2> out;
    for (int i = 0; i < n; ++i) out.push_back({u(rng), u(rng)});
    return out;
}

ObstacleSet boxes(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0, 0.9);
    ObstacleSet obs;
    for (int i = 0; i < 8; ++i) {
        const double x = u(rng), y = u(rng);
        obs.rects.push_back({x, y, x + 0.1, y + 0.1});
    }
    return obs;
}

template <auto Kernel>
void BM_knn(benchmark::State& state) {
    const auto pts = points(static_cast<int>(state.range(0)), 1);
    const ObstacleSet obs = boxes(2);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(pts, 8, obs, AgentRadius(0.01)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

// Random walks of length 60 on a dense roadmap.
struct ConflictCase {
    Roadmap roadmap;
    Solution solution;
};

ConflictCase conflict_case(int agents) {
    const int n = 200;
    auto pts = points(n, 3);
    std::vector<Edge> moves;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < std::min(n, a + 6); ++b) {
            moves.push_back({a, b});
            moves.push_back({b, a});
        }
    }
    ConflictCase c{make_roadmap_with_waits(std::move(pts), std::move(moves)), {}};
    std::mt19937_64 rng(4);
    for (int i = 0; i < agents; ++i) {
        Path p{{static_cast<VertexId>(rng() % n)}};
        for (int t = 0; t < 60; ++t) {
            const auto nb = c.roadmap.out(p.vertices.back());
            p.vertices.push_back(nb[rng() % nb.size()]);
        }
        c.solution.push_back(std::move(p));
    }
    return c;
}

template <auto Kernel>
void BM_conflicts(benchmark::State& state) {
    const ConflictCase c = conflict_case(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(c.solution, c.roadmap, AgentRadius(0.01)));
    state.SetItemsProcessed(state.iterations() * state.range(0) * (state.range(0) - 1) / 2 * 60);
}

}  // namespace

BENCHMARK(BM_knn<kernels::knn_free_neighbors_serial>)->Name("knn/serial")->Arg(100)->Arg(400)->Arg(1600);
BENCHMARK(BM_knn<kernels::knn_free_neighbors_parallel>)->Name("knn/omp")->Arg(100)->Arg(400)->Arg(1600);
BENCHMARK(BM_conflicts<kernels::count_conflicts_serial>)->Name("conflicts/serial")->Arg(4)->Arg(16)->Arg(64);
BENCHMARK(BM_conflicts<kernels::count_conflicts_parallel>)->Name("conflicts/omp")->Arg(4)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
