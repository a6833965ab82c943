#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sna/graph.hpp"

namespace sna {

inline constexpr std::uint64_t kDefaultLouvainSeed = 1;

struct CommunityPartition {
    std::vector<std::int32_t> labels;  // per node, ids dense from 0
    std::int32_t community_count = 0;
    std::vector<std::int64_t> sizes;   // indexed by community id
    double modularity = 0.0;
    std::uint64_t seed = kDefaultLouvainSeed;
    double resolution = 1.0;
};

// Newman modularity on the symmetrized simple graph: arcs (u,v) / (v,u)
// collapse to one undirected edge whose weight is the number of directions
// present. Q = sum_c [ e_c/m' - resolution * (deg_c / 2m')^2 ].
// Throws std::invalid_argument when labels has the wrong length.
double modularity(const Graph& graph, std::span<const std::int32_t> labels,
                  double resolution = 1.0);

// Multi-level Louvain: local moving + aggregation until a full pass yields
// no modularity gain. Node visit order at each level is a seed-determined
// permutation; identical (graph, seed, resolution) gives identical labels.
CommunityPartition louvain(const Graph& graph, std::uint64_t seed = kDefaultLouvainSeed,
                           double resolution = 1.0);

}  // namespace sna
