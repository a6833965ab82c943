#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sna/graph.hpp"

namespace sna {

// Nodes grouped by hop distance from a source (source itself excluded).
// layers[d] holds the nodes at distance d; layers[0] is always empty.
struct DistancePartition {
    NodeId source = 0;
    Direction direction = Direction::Out;
    std::vector<std::vector<NodeId>> layers;
    std::int64_t reachable_count = 0;
    double reachable_fraction = 0.0;
    std::int32_t max_finite_distance = 0;
};

DistancePartition k_neighbors(const Graph& graph, NodeId source, Direction direction);

struct InfluenceDomain {
    std::int64_t size = 0;                       // |{u : u reaches the node}|
    std::optional<double> mean_distance;         // empty when size == 0
};

// Input-direction reachability: who can reach `node` along arcs.
InfluenceDomain influence_domain(const Graph& graph, NodeId node);

enum class DiameterInterpretation { Directed, Undirected };

const char* to_string(DiameterInterpretation interp);
DiameterInterpretation diameter_interpretation_from_string(const std::string& text);

struct DiameterResult {
    DiameterInterpretation interpretation = DiameterInterpretation::Directed;
    std::int32_t length = 0;
    NodeId source = 0;
    NodeId target = 0;
    std::vector<NodeId> path;           // source .. target, a valid geodesic
    double mean_finite_distance = 0.0;  // over all finite ordered pairs, s != t
    std::int64_t finite_pairs = 0;
};

// Exact maximum over all finite pairwise distances via all-pairs BFS.
// Among equal-length witnesses the lexicographically smallest (external
// source id, then target id) is reported. Throws ComputationError when no
// finite pair exists.
DiameterResult diameter(const Graph& graph,
                        DiameterInterpretation interpretation = DiameterInterpretation::Directed,
                        int threads = 1);

// domain_size for every node (all-pairs reverse reachability), used by the
// composite report; entry v == influence_domain(graph, v).size.
std::vector<std::int64_t> influence_domain_sizes(const Graph& graph, int threads = 1);

}  // namespace sna
