#include "geomapf/conflicts.hpp"

#include <algorithm>

#include "geomapf/kernels.hpp"

namespace geomapf {

namespace {
// Below this many edge-pair checks the OpenMP fork costs more than it saves.
constexpr long kParallelThreshold = 20000;
}  // namespace

std::optional<Conflict> detect_first_conflict(const Solution& solution, const Roadmap& roadmap, AgentRadius r) {
    const int m = static_cast<int>(solution.size());
    const int last = std::max(horizon(solution), 1);
    for (int t = 1; t <= last; ++t) {
        for (int i = 0; i < m; ++i) {
            const Path& pi = solution[static_cast<std::size_t>(i)];
            const Segment2 ei = roadmap.segment(pi.at(t - 1), pi.at(t));
            for (int j = i + 1; j < m; ++j) {
                const Path& pj = solution[static_cast<std::size_t>(j)];
                const Segment2 ej = roadmap.segment(pj.at(t - 1), pj.at(t));
                if (!swept_discs_disjoint(ei, ej, r)) {
                    return Conflict{i, j, t, pi.at(t - 1), pj.at(t - 1), pi.at(t), pj.at(t)};
                }
            }
        }
    }
    return std::nullopt;
}

int count_conflicts(const Solution& solution, const Roadmap& roadmap, AgentRadius r) {
    const long m = static_cast<long>(solution.size());
    const long work = std::max(horizon(solution), 1) * m * (m - 1) / 2;
    return work >= kParallelThreshold ? kernels::count_conflicts_parallel(solution, roadmap, r)
                                      : kernels::count_conflicts_serial(solution, roadmap, r);
}

std::pair<Constraint, Constraint> split_conflict(const Conflict& c) {
    return {Constraint{c.i, c.to_i, c.t}, Constraint{c.j, c.to_j, c.t}};
}

}  // namespace geomapf
