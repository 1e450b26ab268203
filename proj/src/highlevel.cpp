#include "geomapf/highlevel.hpp"

#include <chrono>
#include <set>
#include <stdexcept>
#include <tuple>

#include "geomapf/conflicts.hpp"
#include "geomapf/focal_lists.hpp"
#include "geomapf/lowlevel.hpp"

namespace geomapf {

std::string to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::Solved: return "solved";
        case Outcome::Timeout: return "timeout";
        case Outcome::Infeasible: return "infeasible";
        case Outcome::Error: return "error";
    }
    return "error";
}

Outcome parse_outcome(const std::string& s) {
    if (s == "solved") return Outcome::Solved;
    if (s == "timeout") return Outcome::Timeout;
    if (s == "infeasible") return Outcome::Infeasible;
    if (s == "error") return Outcome::Error;
    throw std::invalid_argument("unknown outcome '" + s + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

struct Node {
    int id = 0;
    int parent = -1;
    int depth = 0;
    int cost = 0;
    int conflicts = 0;
    std::optional<Constraint> added;
    Solution solution;
    std::optional<Conflict> split;  // set once expanded
};

// Node storage, root construction, and child generation shared by both
// high-level searches.
class SearchTree {
public:
    SearchTree(const Instance& inst, const SolveOptions& options)
        : inst_(inst), options_(options), start_(Clock::now()) {
        const auto limit = std::chrono::duration<double>(options.timeout_s);
        deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(limit);
        goal_dists_.reserve(inst.starts.size());
        for (VertexId g : inst.goals) goal_dists_.push_back(reverse_bfs_dists(inst.roadmap, g));
    }

    [[nodiscard]] bool expired() const { return Clock::now() >= deadline_; }
    [[nodiscard]] const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
    SearchStats& stats() { return stats_; }

    // Unconstrained shortest path per agent; nullopt if some agent has none.
    std::optional<int> make_root() {
        Node root;
        for (int a = 0; a < inst_.num_agents(); ++a) {
            std::optional<Path> p = replan({}, a);
            if (!p) return std::nullopt;
            root.solution.push_back(std::move(*p));
        }
        return add(std::move(root));
    }

    // Children of `parent` for the two halves of `conflict`, in (C1, C2)
    // order. Children whose agent cannot be replanned are dropped.
    std::vector<int> expand(int parent_id, const Conflict& conflict) {
        nodes_[static_cast<std::size_t>(parent_id)].split = conflict;
        const auto [c1, c2] = split_conflict(conflict);
        std::vector<int> children;
        for (const Constraint& c : {c1, c2}) {
            const Node& parent = node(parent_id);
            std::vector<Constraint> cons = constraints_for(parent_id, c.agent);
            cons.push_back(c);
            std::optional<Path> p = replan(cons, c.agent);
            if (!p) {
                ++stats_.pruned;
                continue;
            }
            Node child;
            child.parent = parent_id;
            child.depth = parent.depth + 1;
            child.added = c;
            child.solution = parent.solution;
            child.solution[static_cast<std::size_t>(c.agent)] = std::move(*p);
            if (options_.audit) {
                ++stats_.audit_checks;
                if (flowtime(child.solution) < parent.cost) ++stats_.monotonicity_violations;
            }
            children.push_back(add(std::move(child)));
        }
        if (!options_.record_tree) nodes_[static_cast<std::size_t>(parent_id)].solution.clear();
        return children;
    }

    std::optional<Conflict> first_conflict(int id) {
        const Node& n = node(id);
        auto c = detect_first_conflict(n.solution, inst_.roadmap, inst_.radius);
        if (c && n.parent >= 0 && node(n.parent).split == c) ++stats_.repeated_conflicts;
        return c;
    }

    NodeView view(int id) const {
        const Node& n = node(id);
        return NodeView{&n.solution, n.id, n.depth, n.cost, n.conflicts};
    }

    SolveResult finish(Outcome outcome, std::optional<int> solution_id, std::string message = {}) {
        SolveResult r;
        r.outcome = outcome;
        r.message = std::move(message);
        if (solution_id) {
            r.solution = node(*solution_id).solution;
            r.flowtime = node(*solution_id).cost;
        }
        stats_.wall_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        r.stats = stats_;
        if (options_.record_tree) {
            TreeLog log;
            log.nodes.reserve(nodes_.size());
            for (const Node& n : nodes_) {
                log.nodes.push_back({n.id, n.parent, n.depth, n.cost, n.added, n.solution,
                                     solution_id && *solution_id == n.id});
            }
            r.tree = std::move(log);
        }
        return r;
    }

private:
    int add(Node n) {
        n.id = static_cast<int>(nodes_.size());
        n.cost = flowtime(n.solution);
        n.conflicts = count_conflicts(n.solution, inst_.roadmap, inst_.radius);
        nodes_.push_back(std::move(n));
        ++stats_.generated;
        return nodes_.back().id;
    }

    std::vector<Constraint> constraints_for(int id, int agent) const {
        std::vector<Constraint> out;
        for (int cur = id; cur >= 0; cur = node(cur).parent) {
            const auto& c = node(cur).added;
            if (c && c->agent == agent) out.push_back(*c);
        }
        return out;
    }

    std::optional<Path> replan(const std::vector<Constraint>& cons, int agent) {
        const auto a = static_cast<std::size_t>(agent);
        const auto& dists = goal_dists_[a];
        PlanResult pr = plan_spacetime(inst_.roadmap, inst_.starts[a], inst_.goals[a], cons, dists,
                                       default_time_cap(inst_.roadmap, cons, dists));
        stats_.lowlevel_expansions += pr.expansions;
        if (!pr.found()) return std::nullopt;
        return std::move(pr.path);
    }

    const Instance& inst_;
    SolveOptions options_;
    Clock::time_point start_;
    Clock::time_point deadline_;
    std::vector<std::vector<int>> goal_dists_;
    std::vector<Node> nodes_;
    SearchStats stats_;
};

}  // namespace

SolveResult cbs_solve(const Instance& inst, const SolveOptions& options) {
    SearchTree tree(inst, options);
    const std::optional<int> root = tree.make_root();
    if (!root) return tree.finish(Outcome::Infeasible, std::nullopt, "an agent has no path to its goal");

    std::set<std::tuple<int, int, int>> open;
    auto push = [&](int id) { open.emplace(tree.node(id).cost, tree.node(id).conflicts, id); };
    push(*root);

    while (!open.empty()) {
        if (tree.expired()) return tree.finish(Outcome::Timeout, std::nullopt, "timeout");
        const int id = std::get<2>(*open.begin());
        open.erase(open.begin());
        const auto conflict = tree.first_conflict(id);
        if (!conflict) return tree.finish(Outcome::Solved, id);

        ++tree.stats().expansions;
        for (int child : tree.expand(id, *conflict)) push(child);
    }
    return tree.finish(Outcome::Infeasible, std::nullopt, "no solution");
}

SolveResult focal_solve(const Instance& inst, double w, NodeHeuristic& psi, const SolveOptions& options) {
    FocalLists lists(w);
    SearchTree tree(inst, options);
    auto& stats = tree.stats();

    auto audit_lb = [&] {
        if (!options.audit || lists.empty()) return;
        ++stats.audit_checks;
        if (lists.lower_bound() != lists.min_open_cost()) ++stats.lb_violations;
    };

    try {
        psi.begin(inst);
        const std::optional<int> root = tree.make_root();
        if (!root) return tree.finish(Outcome::Infeasible, std::nullopt, "an agent has no path to its goal");
        const NodeView root_view = tree.view(*root);
        lists.start(*root, tree.node(*root).cost, psi.evaluate(std::span(&root_view, 1)).front());

        while (!lists.empty()) {
            if (tree.expired()) return tree.finish(Outcome::Timeout, std::nullopt, "timeout");
            const int id = lists.select();
            if (options.audit) {
                ++stats.audit_checks;
                if (tree.node(id).cost > lists.threshold()) ++stats.focal_violations;
                audit_lb();
            }
            const auto conflict = tree.first_conflict(id);
            if (!conflict) return tree.finish(Outcome::Solved, id);

            lists.remove(id);
            ++stats.expansions;
            const std::vector<int> children = tree.expand(id, *conflict);
            if (!children.empty()) {
                std::vector<NodeView> views;
                for (int c : children) views.push_back(tree.view(c));
                std::vector<HeuristicKey> keys = psi.evaluate(views);
                for (std::size_t k = 0; k < children.size(); ++k) {
                    lists.push(children[k], tree.node(children[k]).cost, std::move(keys[k]));
                }
            }
            // LB is raised only once the children are in Open: a child may
            // cost as little as its parent, and raising LB past it would stop
            // LB from bounding the optimum.
            lists.refresh_lower_bound();
            audit_lb();
        }
    } catch (const BridgeError& e) {
        return tree.finish(Outcome::Error, std::nullopt, std::string("heuristic evaluator failed: ") + e.what());
    }
    return tree.finish(Outcome::Infeasible, std::nullopt, "no solution");
}

}  // namespace geomapf
