#pragma once

#include <cstdint>
#include <vector>

#include "sna/graph.hpp"

namespace sna {

struct CorePartition {
    Direction mode = Direction::All;
    std::vector<std::int32_t> coreness;   // per node, peeling semantics
    std::int32_t max_k = 0;
    std::vector<NodeId> max_core_members;  // {v : coreness[v] == max_k}, ascending
};

// Batagelj-Zaversnik bucket peeling, O(n + m). Degree per mode counts
// in-neighbors, out-neighbors, or all distinct neighbors.
CorePartition core_decomposition(const Graph& graph, Direction mode = Direction::All);

// Induced subgraph on {v : coreness[v] >= k}, external ids preserved.
// Throws ComputationError when k > max_k (empty core).
Graph extract_core(const Graph& graph, const CorePartition& cores, std::int32_t k);

}  // namespace sna
