#include "sna/pagerank.hpp"

#include <cmath>
#include <string>

namespace sna {

ScoreVector pagerank(const Graph& graph, const PageRankOptions& options) {
    const auto n = graph.node_count();
    const auto size = static_cast<std::size_t>(n);
    const double d = options.damping;
    const double uniform = 1.0 / static_cast<double>(n);

    ScoreVector result;
    result.damping = d;
    result.scores.assign(size, uniform);
    std::vector<double> next(size, 0.0);

    for (int iter = 1; iter <= options.max_iterations; ++iter) {
        // Mass sitting on out-degree-0 nodes is spread uniformly.
        double dangling = 0.0;
        for (NodeId v = 0; v < n; ++v) {
            if (graph.out_degree(v) == 0) dangling += result.scores[static_cast<std::size_t>(v)];
        }
        const double base = (1.0 - d) * uniform + d * dangling * uniform;
        double residual = 0.0;
        double sum = 0.0;
        for (NodeId v = 0; v < n; ++v) {
            double in_flow = 0.0;
            for (NodeId u : graph.in_neighbors(v)) {
                const auto ui = static_cast<std::size_t>(u);
                in_flow += result.scores[ui] / static_cast<double>(graph.out_degree(u));
            }
            const double value = base + d * in_flow;
            next[static_cast<std::size_t>(v)] = value;
            residual += std::abs(value - result.scores[static_cast<std::size_t>(v)]);
            sum += value;
        }
        result.scores.swap(next);
        result.iterations_used = iter;
        result.residual = residual;
        if (options.record_sums) result.iteration_sums.push_back(sum);
        if (residual <= options.tolerance) return result;
    }
    throw ComputationError("pagerank did not converge within " +
                           std::to_string(options.max_iterations) +
                           " iterations (last L1 residual " + std::to_string(result.residual) +
                           ")");
}

}  // namespace sna
