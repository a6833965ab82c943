#pragma once

#include <vector>

#include "sna/graph.hpp"

namespace sna {

struct PageRankOptions {
    double damping = 0.85;
    double tolerance = 1e-10;   // L1 change between iterations
    int max_iterations = 200;
    bool record_sums = false;   // keep per-iteration score sums for diagnostics
};

struct ScoreVector {
    std::vector<double> scores;  // non-negative, sums to 1
    double damping = 0.85;
    int iterations_used = 0;
    double residual = 0.0;       // L1 change at termination
    std::vector<double> iteration_sums;  // only when record_sums
};

// Power iteration on uniform-teleport PageRank; dangling mass is
// redistributed uniformly over all nodes each step; start vector uniform.
// Throws ComputationError (with the last residual in the message) when
// max_iterations is reached without convergence.
ScoreVector pagerank(const Graph& graph, const PageRankOptions& options = {});

}  // namespace sna
