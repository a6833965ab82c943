#include "sna/cores.hpp"

#include <algorithm>
#include <stdexcept>

namespace sna {
namespace {

// Which nodes lose one unit of mode-degree when v is removed.
std::span<const NodeId> affected_neighbors(const Graph& graph, NodeId v, Direction mode) {
    switch (mode) {
        case Direction::In: return graph.out_neighbors(v);
        case Direction::Out: return graph.in_neighbors(v);
        case Direction::All: return graph.all_neighbors(v);
    }
    return {};
}

}  // namespace

CorePartition core_decomposition(const Graph& graph, Direction mode) {
    const auto n = graph.node_count();
    const auto size = static_cast<std::size_t>(n);
    CorePartition result;
    result.mode = mode;
    result.coreness.assign(size, 0);
    if (n == 0) return result;

    std::vector<std::int32_t> degree(size);
    std::int32_t max_degree = 0;
    for (NodeId v = 0; v < n; ++v) {
        degree[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(graph.degree(v, mode));
        max_degree = std::max(max_degree, degree[static_cast<std::size_t>(v)]);
    }

    // Bucket sort nodes by current degree; peel in ascending degree order.
    std::vector<std::int64_t> bin(static_cast<std::size_t>(max_degree) + 2, 0);
    for (std::int32_t d : degree) ++bin[static_cast<std::size_t>(d) + 1];
    for (std::size_t d = 1; d < bin.size(); ++d) bin[d] += bin[d - 1];
    std::vector<NodeId> vert(size);
    std::vector<std::int64_t> pos(size);
    {
        std::vector<std::int64_t> cursor(bin.begin(), bin.end() - 1);
        for (NodeId v = 0; v < n; ++v) {
            auto& c = cursor[static_cast<std::size_t>(degree[static_cast<std::size_t>(v)])];
            pos[static_cast<std::size_t>(v)] = c;
            vert[static_cast<std::size_t>(c)] = v;
            ++c;
        }
    }

    for (std::size_t i = 0; i < size; ++i) {
        NodeId v = vert[i];
        const auto dv = degree[static_cast<std::size_t>(v)];
        result.coreness[static_cast<std::size_t>(v)] = dv;
        for (NodeId u : affected_neighbors(graph, v, mode)) {
            const auto ui = static_cast<std::size_t>(u);
            if (degree[ui] <= dv) continue;  // already peeled or at the frontier
            // Swap u with the first node of its degree bucket, then shrink
            // the bucket boundary by one.
            const auto du = degree[ui];
            const auto pu = pos[ui];
            const auto pw = bin[static_cast<std::size_t>(du)];
            const NodeId w = vert[static_cast<std::size_t>(pw)];
            if (u != w) {
                pos[ui] = pw;
                pos[static_cast<std::size_t>(w)] = pu;
                vert[static_cast<std::size_t>(pu)] = w;
                vert[static_cast<std::size_t>(pw)] = u;
            }
            ++bin[static_cast<std::size_t>(du)];
            --degree[ui];
        }
    }

    result.max_k = *std::max_element(result.coreness.begin(), result.coreness.end());
    for (NodeId v = 0; v < n; ++v) {
        if (result.coreness[static_cast<std::size_t>(v)] == result.max_k) {
            result.max_core_members.push_back(v);
        }
    }
    return result;
}

Graph extract_core(const Graph& graph, const CorePartition& cores, std::int32_t k) {
    if (static_cast<std::size_t>(graph.node_count()) != cores.coreness.size()) {
        throw std::invalid_argument("core partition was not computed on this graph");
    }
    if (k < 0) {
        throw std::invalid_argument("core order k must be non-negative");
    }
    if (k > cores.max_k) {
        throw ComputationError("the " + std::to_string(k) + "-core is empty (max coreness " +
                               std::to_string(cores.max_k) + ")");
    }
    std::vector<NodeId> members;
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        if (cores.coreness[static_cast<std::size_t>(v)] >= k) members.push_back(v);
    }
    return induced_subgraph(graph, members);
}

}  // namespace sna
