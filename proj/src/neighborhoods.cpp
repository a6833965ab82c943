#include "sna/neighborhoods.hpp"

#include <algorithm>

#include "sna/parallel.hpp"

namespace sna {

const char* to_string(DiameterInterpretation interp) {
    return interp == DiameterInterpretation::Directed ? "directed" : "undirected";
}

DiameterInterpretation diameter_interpretation_from_string(const std::string& text) {
    if (text == "directed") return DiameterInterpretation::Directed;
    if (text == "undirected") return DiameterInterpretation::Undirected;
    throw std::invalid_argument("unknown diameter interpretation: " + text);
}

DistancePartition k_neighbors(const Graph& graph, NodeId source, Direction direction) {
    DistancePartition result;
    result.source = source;
    result.direction = direction;
    DistanceArray d = bfs(graph, source, direction);

    result.max_finite_distance = 0;
    for (auto dist : d.dist) {
        result.max_finite_distance = std::max(result.max_finite_distance, dist);
    }
    result.layers.assign(static_cast<std::size_t>(result.max_finite_distance) + 1, {});
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        auto dist = d.dist[static_cast<std::size_t>(v)];
        if (v == source || dist == DistanceArray::kUnreachable) continue;
        result.layers[static_cast<std::size_t>(dist)].push_back(v);
        ++result.reachable_count;
    }
    result.reachable_fraction =
        static_cast<double>(result.reachable_count) / static_cast<double>(graph.node_count());
    return result;
}

InfluenceDomain influence_domain(const Graph& graph, NodeId node) {
    InfluenceDomain result;
    DistanceArray d = bfs(graph, node, Direction::In);
    std::int64_t sum = 0;
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        auto dist = d.dist[static_cast<std::size_t>(v)];
        if (v == node || dist == DistanceArray::kUnreachable) continue;
        ++result.size;
        sum += dist;
    }
    if (result.size > 0) {
        result.mean_distance = static_cast<double>(sum) / static_cast<double>(result.size);
    }
    return result;
}

DiameterResult diameter(const Graph& graph, DiameterInterpretation interpretation, int threads) {
    const auto n = graph.node_count();
    const auto size = static_cast<std::size_t>(n);
    if (graph.arc_count() == 0) {
        throw ComputationError("diameter undefined: the graph has no arcs");
    }
    const Direction direction =
        interpretation == DiameterInterpretation::Directed ? Direction::Out : Direction::All;

    // Per-source results land in disjoint slots; the reduction below runs in
    // ascending source order, so any worker count yields the same witness.
    std::vector<std::int32_t> ecc(size, 0);
    std::vector<NodeId> far_node(size, kNoParent);
    std::vector<std::int64_t> dist_sum(size, 0);
    std::vector<std::int64_t> finite_count(size, 0);

    for_blocks(n, kDefaultBlockSize, threads, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t s = begin; s < end; ++s) {
            const auto source = static_cast<NodeId>(s);
            DistanceArray d = bfs(graph, source, direction);
            std::int32_t best = 0;
            NodeId best_t = kNoParent;
            for (NodeId t = 0; t < n; ++t) {
                auto dist = d.dist[static_cast<std::size_t>(t)];
                if (t == source || dist == DistanceArray::kUnreachable) continue;
                dist_sum[static_cast<std::size_t>(s)] += dist;
                ++finite_count[static_cast<std::size_t>(s)];
                if (dist > best) {  // first (== smallest internal) argmax wins
                    best = dist;
                    best_t = t;
                }
            }
            ecc[static_cast<std::size_t>(s)] = best;
            far_node[static_cast<std::size_t>(s)] = best_t;
        }
    });

    DiameterResult result;
    result.interpretation = interpretation;
    NodeId witness_source = kNoParent;
    for (NodeId s = 0; s < n; ++s) {
        if (ecc[static_cast<std::size_t>(s)] > result.length) {
            result.length = ecc[static_cast<std::size_t>(s)];
            witness_source = s;
        }
        result.finite_pairs += finite_count[static_cast<std::size_t>(s)];
    }
    if (witness_source == kNoParent) {
        throw ComputationError("diameter undefined: no finite pairwise distance");
    }
    std::int64_t total = 0;
    for (auto v : dist_sum) total += v;
    result.mean_finite_distance = static_cast<double>(total) / static_cast<double>(result.finite_pairs);

    result.source = witness_source;
    result.target = far_node[static_cast<std::size_t>(witness_source)];
    std::vector<NodeId> parent;
    bfs_with_parents(graph, witness_source, direction, parent);
    for (NodeId v = result.target; v != witness_source; v = parent[static_cast<std::size_t>(v)]) {
        result.path.push_back(v);
    }
    result.path.push_back(witness_source);
    std::reverse(result.path.begin(), result.path.end());
    return result;
}

std::vector<std::int64_t> influence_domain_sizes(const Graph& graph, int threads) {
    const auto n = graph.node_count();
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(n), 0);
    for_blocks(n, kDefaultBlockSize, threads, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t v = begin; v < end; ++v) {
            DistanceArray d = bfs(graph, static_cast<NodeId>(v), Direction::In);
            std::int64_t count = 0;
            for (auto dist : d.dist) {
                if (dist > 0) ++count;  // excludes the node itself (dist 0)
            }
            sizes[static_cast<std::size_t>(v)] = count;
        }
    });
    return sizes;
}

}  // namespace sna
