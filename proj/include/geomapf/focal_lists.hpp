#pragma once

#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "geomapf/heuristics.hpp"

namespace geomapf {

/// Open and Focal sets of a bounded-suboptimal tree search.
///
/// Open holds every generated, unexpanded node ordered by (cost, id). LB is
/// only raised by refresh_lower_bound(), which then rebuilds
/// Focal = {N in Open : cost(N) <= w * LB}. Nodes pushed between refreshes
/// join Focal iff cost <= w * LB at push time. Focal is ordered by (key, id).
class FocalLists {
public:
    /// w >= 1; +infinity puts every Open node in Focal.
    explicit FocalLists(double w);

    /// Resets to Open = Focal = {root}, LB = cost(root).
    void start(int id, int cost, HeuristicKey key);
    void push(int id, int cost, HeuristicKey key);
    void remove(int id);

    /// If min cost over Open exceeds LB, raises LB to it and rebuilds Focal.
    bool refresh_lower_bound();

    /// argmin over Focal of (key, id). Open must be non-empty.
    [[nodiscard]] int select() const;

    [[nodiscard]] bool empty() const { return open_.empty(); }
    [[nodiscard]] double lower_bound() const { return lower_bound_; }
    [[nodiscard]] double threshold() const;
    [[nodiscard]] int min_open_cost() const { return open_.begin()->first; }
    [[nodiscard]] int cost_of(int id) const { return entries_.at(id).cost; }
    [[nodiscard]] std::size_t open_size() const { return open_.size(); }
    [[nodiscard]] std::size_t focal_size() const { return focal_.size(); }
    [[nodiscard]] bool in_focal(int id) const;
    [[nodiscard]] std::vector<int> focal_ids() const;

private:
    struct Entry {
        int cost;
        HeuristicKey key;
        bool in_focal;
    };
    void rebuild_focal();

    double w_;
    double lower_bound_ = 0.0;
    std::unordered_map<int, Entry> entries_;
    std::set<std::pair<int, int>> open_;
    std::set<std::pair<HeuristicKey, int>> focal_;
};

}  // namespace geomapf
