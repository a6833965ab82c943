#include "sna/graph.hpp"

#include <algorithm>
#include <queue>

namespace sna {
namespace {

Csr build_csr(NodeId n, std::vector<std::pair<NodeId, NodeId>>& pairs) {
    std::sort(pairs.begin(), pairs.end());
    Csr csr;
    csr.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    csr.targets.reserve(pairs.size());
    for (const auto& [from, to] : pairs) {
        ++csr.offsets[static_cast<std::size_t>(from) + 1];
        csr.targets.push_back(to);
    }
    for (std::size_t v = 1; v < csr.offsets.size(); ++v) {
        csr.offsets[v] += csr.offsets[v - 1];
    }
    return csr;
}

// Union of two sorted rows, duplicates collapsed.
void merge_distinct(std::span<const NodeId> a, std::span<const NodeId> b,
                    std::vector<NodeId>& out) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        NodeId next;
        if (j == b.size() || (i < a.size() && a[i] <= b[j])) {
            next = a[i];
            if (j < b.size() && b[j] == next) ++j;
            ++i;
        } else {
            next = b[j];
            ++j;
        }
        out.push_back(next);
    }
}

}  // namespace

std::span<const NodeId> Graph::neighbors(NodeId v, Direction dir) const {
    switch (dir) {
        case Direction::Out: return out_.row(v);
        case Direction::In: return in_.row(v);
        case Direction::All: return all_.row(v);
    }
    return {};
}

std::int64_t Graph::degree(NodeId v, Direction dir) const {
    switch (dir) {
        case Direction::Out: return out_degree(v);
        case Direction::In: return in_degree(v);
        case Direction::All: return all_degree(v);
    }
    return 0;
}

bool Graph::has_arc(NodeId source, NodeId target) const {
    auto row = out_.row(source);
    return std::binary_search(row.begin(), row.end(), target);
}

Graph build_graph(const EdgeList& edges, const NodeIdMap& ids) {
    Graph g;
    g.n_ = ids.size();
    g.m_ = static_cast<std::int64_t>(edges.arcs.size());
    g.ids_ = ids;

    std::vector<std::pair<NodeId, NodeId>> forward;
    std::vector<std::pair<NodeId, NodeId>> backward;
    forward.reserve(edges.arcs.size());
    backward.reserve(edges.arcs.size());
    for (const Arc& arc : edges.arcs) {
        auto s = ids.to_internal(arc.source);
        auto t = ids.to_internal(arc.target);
        if (!s || !t) {
            throw InputError("arc endpoint missing from id map: " + std::to_string(arc.source) +
                             " -> " + std::to_string(arc.target));
        }
        forward.emplace_back(*s, *t);
        backward.emplace_back(*t, *s);
    }
    g.out_ = build_csr(g.n_, forward);
    g.in_ = build_csr(g.n_, backward);

    g.all_.offsets.assign(static_cast<std::size_t>(g.n_) + 1, 0);
    std::vector<NodeId> merged;
    for (NodeId v = 0; v < g.n_; ++v) {
        merged.clear();
        merge_distinct(g.out_.row(v), g.in_.row(v), merged);
        g.all_.targets.insert(g.all_.targets.end(), merged.begin(), merged.end());
        g.all_.offsets[static_cast<std::size_t>(v) + 1] =
            static_cast<std::int64_t>(g.all_.targets.size());
    }
    return g;
}

Graph load_graph(const std::string& path, const ParseOptions& options) {
    EdgeList edges = load_edge_list(path, options);
    NodeIdMap ids = build_id_map(edges);
    return build_graph(edges, ids);
}

NetworkStats network_stats(const Graph& graph) {
    const auto n = graph.node_count();
    if (n < 2) {
        throw ComputationError("density undefined for graphs with fewer than 2 nodes");
    }
    NetworkStats stats;
    stats.n = n;
    stats.m = graph.arc_count();
    stats.average_degree = 2.0 * static_cast<double>(stats.m) / static_cast<double>(n);
    stats.density = static_cast<double>(stats.m) /
                    (static_cast<double>(n) * static_cast<double>(n - 1));
    stats.loop_count = 0;
    stats.is_simple = true;
    return stats;
}

namespace {

DistanceArray bfs_impl(const Graph& graph, NodeId source, Direction direction,
                       std::vector<NodeId>* parent) {
    DistanceArray result;
    result.source = source;
    result.direction = direction;
    result.dist.assign(static_cast<std::size_t>(graph.node_count()),
                       DistanceArray::kUnreachable);
    if (parent) {
        parent->assign(static_cast<std::size_t>(graph.node_count()), kNoParent);
        (*parent)[static_cast<std::size_t>(source)] = source;
    }
    result.dist[static_cast<std::size_t>(source)] = 0;

    std::vector<NodeId> frontier{source};
    std::vector<NodeId> next;
    std::int32_t depth = 0;
    auto visit = [&](NodeId v, NodeId w) {
        if (result.dist[static_cast<std::size_t>(w)] != DistanceArray::kUnreachable) return;
        result.dist[static_cast<std::size_t>(w)] = depth + 1;
        if (parent) (*parent)[static_cast<std::size_t>(w)] = v;
        next.push_back(w);
    };
    while (!frontier.empty()) {
        next.clear();
        for (NodeId v : frontier) {
            if (direction == Direction::All) {
                // Union traversal; the dist check dedups shared neighbors.
                for (NodeId w : graph.out_neighbors(v)) visit(v, w);
                for (NodeId w : graph.in_neighbors(v)) visit(v, w);
            } else {
                for (NodeId w : graph.neighbors(v, direction)) visit(v, w);
            }
        }
        frontier.swap(next);
        ++depth;
    }
    return result;
}

}  // namespace

DistanceArray bfs(const Graph& graph, NodeId source, Direction direction) {
    return bfs_impl(graph, source, direction, nullptr);
}

DistanceArray bfs_with_parents(const Graph& graph, NodeId source, Direction direction,
                               std::vector<NodeId>& parent) {
    return bfs_impl(graph, source, direction, &parent);
}

Graph induced_subgraph(const Graph& graph, std::span<const NodeId> members) {
    std::vector<char> keep(static_cast<std::size_t>(graph.node_count()), 0);
    for (NodeId v : members) keep[static_cast<std::size_t>(v)] = 1;

    EdgeList edges;
    std::vector<ExternalId> externals;
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        if (!keep[static_cast<std::size_t>(v)]) continue;
        externals.push_back(graph.external_id(v));
        for (NodeId w : graph.out_neighbors(v)) {
            if (keep[static_cast<std::size_t>(w)]) {
                edges.arcs.push_back(Arc{graph.external_id(v), graph.external_id(w)});
            }
        }
    }
    // Isolated members must survive even with no induced arcs, so the id map
    // is built directly rather than from the arc list.
    NodeIdMap ids{std::move(externals)};
    edges.distinct_nodes = ids.size();
    return build_graph(edges, ids);
}

std::int64_t weak_component_count(const Graph& graph) {
    const auto n = graph.node_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::int64_t components = 0;
    std::vector<NodeId> stack;
    for (NodeId start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++components;
        stack.assign(1, start);
        seen[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            for (NodeId w : graph.all_neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

}  // namespace sna
