#include "geomapf/focal_lists.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace geomapf {

FocalLists::FocalLists(double w) : w_(w) {
    if (!(w >= 1.0)) throw std::invalid_argument("suboptimality factor must be >= 1");
}

double FocalLists::threshold() const {
    return std::isinf(w_) ? std::numeric_limits<double>::infinity() : w_ * lower_bound_;
}

void FocalLists::start(int id, int cost, HeuristicKey key) {
    entries_.clear();
    open_.clear();
    focal_.clear();
    lower_bound_ = cost;
    open_.emplace(cost, id);
    focal_.emplace(key, id);
    entries_.emplace(id, Entry{cost, std::move(key), true});
}

void FocalLists::push(int id, int cost, HeuristicKey key) {
    const bool admit = cost <= threshold();
    open_.emplace(cost, id);
    if (admit) focal_.emplace(key, id);
    entries_.emplace(id, Entry{cost, std::move(key), admit});
}

void FocalLists::remove(int id) {
    const auto it = entries_.find(id);
    if (it == entries_.end()) return;
    open_.erase({it->second.cost, id});
    if (it->second.in_focal) focal_.erase({it->second.key, id});
    entries_.erase(it);
}

bool FocalLists::refresh_lower_bound() {
    if (open_.empty() || min_open_cost() <= lower_bound_) return false;
    lower_bound_ = min_open_cost();
    rebuild_focal();
    return true;
}

void FocalLists::rebuild_focal() {
    focal_.clear();
    for (auto& [id, e] : entries_) e.in_focal = false;
    const double limit = threshold();
    for (const auto& [cost, id] : open_) {
        if (cost > limit) break;
        Entry& e = entries_.at(id);
        e.in_focal = true;
        focal_.emplace(e.key, id);
    }
}

int FocalLists::select() const {
    if (open_.empty()) throw std::logic_error("select on empty Open");
    // Focal always contains the min-cost Open nodes while LB tracks min Open;
    // an empty Focal here means LB is stale, so fall back to min Open.
    if (focal_.empty()) return open_.begin()->second;
    return focal_.begin()->second;
}

bool FocalLists::in_focal(int id) const {
    const auto it = entries_.find(id);
    return it != entries_.end() && it->second.in_focal;
}

std::vector<int> FocalLists::focal_ids() const {
    std::vector<int> ids;
    for (const auto& [key, id] : focal_) ids.push_back(id);
    return ids;
}

}  // namespace geomapf
