#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "geomapf/bridge.hpp"
#include "geomapf/instance.hpp"
#include "geomapf/path.hpp"

namespace geomapf {

/// Lexicographic tuple compared ascending. Focal ties are broken by node id
/// outside the key.
struct HeuristicKey {
    std::vector<double> parts;

    friend bool operator==(const HeuristicKey&, const HeuristicKey&) = default;
    friend std::weak_ordering operator<=>(const HeuristicKey& a, const HeuristicKey& b) {
        const std::size_t n = std::min(a.parts.size(), b.parts.size());
        for (std::size_t k = 0; k < n; ++k) {
            if (a.parts[k] < b.parts[k]) return std::weak_ordering::less;
            if (b.parts[k] < a.parts[k]) return std::weak_ordering::greater;
        }
        return a.parts.size() <=> b.parts.size();
    }
};

/// What a heuristic may look at for one search node.
struct NodeView {
    const Solution* solution = nullptr;
    int id = 0;
    int depth = 0;
    int cost = 0;
    int conflicts = 0;
};

/// ψ over search nodes. Nodes are evaluated once, at generation, in batches
/// (the root alone, then the surviving children of each expansion).
class NodeHeuristic {
public:
    virtual ~NodeHeuristic() = default;
    [[nodiscard]] virtual std::string name() const = 0;
    /// Called once per solve before any node is evaluated.
    virtual void begin(const Instance&) {}
    virtual std::vector<HeuristicKey> evaluate(std::span<const NodeView> nodes) = 0;
};

/// ⟨cost⟩: focal search degenerates to best-first on cost.
class CostHeuristic final : public NodeHeuristic {
public:
    [[nodiscard]] std::string name() const override { return "cost"; }
    std::vector<HeuristicKey> evaluate(std::span<const NodeView> nodes) override;
};

/// ⟨number of conflicting (t, i, j) triples⟩.
class ConflictCountHeuristic final : public NodeHeuristic {
public:
    [[nodiscard]] std::string name() const override { return "conflicts"; }
    std::vector<HeuristicKey> evaluate(std::span<const NodeView> nodes) override;
};

/// ⟨-depth, φ(G, σ)⟩: deepest first, then lowest φ. φ comes from an evaluator
/// (usually a PhiClient); evaluator failures propagate.
class DepthPhiHeuristic final : public NodeHeuristic {
public:
    explicit DepthPhiHeuristic(PhiEvaluator& evaluator) : evaluator_(evaluator) {}
    [[nodiscard]] std::string name() const override { return "depth-phi"; }
    void begin(const Instance& inst) override;
    std::vector<HeuristicKey> evaluate(std::span<const NodeView> nodes) override;

private:
    PhiEvaluator& evaluator_;
    std::shared_ptr<const PhiGraph> graph_;
    std::string graph_id_;
};

}  // namespace geomapf
