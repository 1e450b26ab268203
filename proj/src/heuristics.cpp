#include "geomapf/heuristics.hpp"

namespace geomapf {

std::vector<HeuristicKey> CostHeuristic::evaluate(std::span<const NodeView> nodes) {
    std::vector<HeuristicKey> keys;
    keys.reserve(nodes.size());
    for (const NodeView& n : nodes) keys.push_back({{static_cast<double>(n.cost)}});
    return keys;
}

std::vector<HeuristicKey> ConflictCountHeuristic::evaluate(std::span<const NodeView> nodes) {
    std::vector<HeuristicKey> keys;
    keys.reserve(nodes.size());
    for (const NodeView& n : nodes) keys.push_back({{static_cast<double>(n.conflicts)}});
    return keys;
}

void DepthPhiHeuristic::begin(const Instance& inst) {
    graph_ = std::make_shared<const PhiGraph>(PhiGraph::from_roadmap(inst.roadmap));
    graph_id_ = inst.id;
}

std::vector<HeuristicKey> DepthPhiHeuristic::evaluate(std::span<const NodeView> nodes) {
    std::vector<PhiRequest> reqs;
    reqs.reserve(nodes.size());
    for (const NodeView& n : nodes) reqs.push_back(PhiRequest::from_solution(graph_, *n.solution, graph_id_));
    const std::vector<double> phi = evaluator_.eval_batch(reqs);
    if (phi.size() != nodes.size()) throw ProtocolError("evaluator returned a batch of the wrong size");
    std::vector<HeuristicKey> keys;
    keys.reserve(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) keys.push_back({{-static_cast<double>(nodes[k].depth), phi[k]}});
    return keys;
}

}  // namespace geomapf
