#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sna/edge_list.hpp"
#include "sna/types.hpp"

namespace sna {

// Compressed adjacency rows: offsets has n+1 entries, row v spans
// targets[offsets[v] .. offsets[v+1]).
struct Csr {
    std::vector<std::int64_t> offsets;
    std::vector<NodeId> targets;

    std::span<const NodeId> row(NodeId v) const {
        auto begin = static_cast<std::size_t>(offsets[static_cast<std::size_t>(v)]);
        auto end = static_cast<std::size_t>(offsets[static_cast<std::size_t>(v) + 1]);
        return {targets.data() + begin, end - begin};
    }
};

// Immutable simple directed graph. Out-, in- and distinct-union adjacency
// are all materialized; every neighbor list is sorted ascending.
class Graph {
public:
    Graph() = default;

    NodeId node_count() const { return n_; }
    std::int64_t arc_count() const { return m_; }

    std::span<const NodeId> out_neighbors(NodeId v) const { return out_.row(v); }
    std::span<const NodeId> in_neighbors(NodeId v) const { return in_.row(v); }
    std::span<const NodeId> all_neighbors(NodeId v) const { return all_.row(v); }
    std::span<const NodeId> neighbors(NodeId v, Direction dir) const;

    std::int64_t out_degree(NodeId v) const { return out_.offsets[v + 1] - out_.offsets[v]; }
    std::int64_t in_degree(NodeId v) const { return in_.offsets[v + 1] - in_.offsets[v]; }
    std::int64_t all_degree(NodeId v) const { return all_.offsets[v + 1] - all_.offsets[v]; }
    std::int64_t degree(NodeId v, Direction dir) const;

    // Membership test on the sorted out-row.
    bool has_arc(NodeId source, NodeId target) const;

    const NodeIdMap& ids() const { return ids_; }
    ExternalId external_id(NodeId v) const { return ids_.to_external(v); }

    friend Graph build_graph(const EdgeList& edges, const NodeIdMap& ids);

private:
    NodeId n_ = 0;
    std::int64_t m_ = 0;
    Csr out_;
    Csr in_;
    Csr all_;  // distinct union of in- and out-neighbors
    NodeIdMap ids_;
};

// Builds the canonical-form graph. Throws InputError if an arc endpoint is
// missing from the id map.
Graph build_graph(const EdgeList& edges, const NodeIdMap& ids);

// Parse + map + build in one step.
Graph load_graph(const std::string& path, const ParseOptions& options = {});

struct NetworkStats {
    NodeId n = 0;
    std::int64_t m = 0;
    double average_degree = 0.0;  // 2m/n, total-degree mean
    double density = 0.0;         // m / (n*(n-1))
    std::int64_t loop_count = 0;  // zero by construction
    bool is_simple = true;
};

// Throws ComputationError when n < 2 (density undefined).
NetworkStats network_stats(const Graph& graph);

struct DistanceArray {
    static constexpr std::int32_t kUnreachable = -1;

    NodeId source = 0;
    Direction direction = Direction::Out;
    std::vector<std::int32_t> dist;
};

// Unweighted shortest-path hop counts from source along arcs (Out),
// reversed arcs (In), or ignoring orientation (All).
DistanceArray bfs(const Graph& graph, NodeId source, Direction direction);

// Same traversal, also records the discovering neighbor of every reached
// node (parent[source] = source, kNoParent where unreachable).
inline constexpr NodeId kNoParent = -1;
DistanceArray bfs_with_parents(const Graph& graph, NodeId source, Direction direction,
                               std::vector<NodeId>& parent);

// Induced subgraph on `members` (internal ids of `graph`), preserving
// external ids. Members need not be sorted.
Graph induced_subgraph(const Graph& graph, std::span<const NodeId> members);

// Number of weakly connected components.
std::int64_t weak_component_count(const Graph& graph);

}  // namespace sna
