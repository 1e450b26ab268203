#pragma once

#include <optional>
#include <string>

#include "geomapf/heuristics.hpp"
#include "geomapf/instance.hpp"
#include "geomapf/path.hpp"
#include "geomapf/tree_log.hpp"

namespace geomapf {

enum class Outcome { Solved, Timeout, Infeasible, Error };

[[nodiscard]] std::string to_string(Outcome outcome);
[[nodiscard]] Outcome parse_outcome(const std::string& s);

struct SearchStats {
    long expansions = 0;
    long generated = 0;
    /// Children dropped because the low-level search found no path.
    long pruned = 0;
    long lowlevel_expansions = 0;
    /// Nodes whose first conflict equals their parent's. Vertex-time splitting
    /// should make this impossible; non-zero means the split is not making progress.
    long repeated_conflicts = 0;
    double wall_seconds = 0.0;

    // Filled only when SolveOptions::audit is set.
    long audit_checks = 0;
    /// Selections with cost > w * LB.
    long focal_violations = 0;
    /// Points where LB differed from the minimum cost in Open.
    long lb_violations = 0;
    /// Children cheaper than their parent.
    long monotonicity_violations = 0;
};

struct SolveOptions {
    double timeout_s = 300.0;
    bool record_tree = false;
    /// Check focal-search invariants at every step and count violations.
    bool audit = false;
};

struct SolveResult {
    Outcome outcome = Outcome::Error;
    Solution solution;
    /// Valid iff solved.
    int flowtime = -1;
    SearchStats stats;
    std::optional<TreeLog> tree;
    std::string message;

    [[nodiscard]] bool solved() const { return outcome == Outcome::Solved; }
};

/// Optimal CBS: best-first on (cost, conflict count, creation order).
[[nodiscard]] SolveResult cbs_solve(const Instance& inst, const SolveOptions& options = {});

/// CBS with focal search on the high level: expands argmin ψ over
/// Focal = {N in Open : cost <= w * LB}. Returns a solution with
/// flowtime <= w * optimum. Heuristic (bridge) failures yield Outcome::Error.
[[nodiscard]] SolveResult focal_solve(const Instance& inst, double w, NodeHeuristic& psi,
                                      const SolveOptions& options = {});

}  // namespace geomapf
